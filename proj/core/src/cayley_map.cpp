#include "btcayley/cayley_map.hpp"

#include <algorithm>
#include <stdexcept>

#include "btcayley/automorphism.hpp"
#include "btcayley/block_transposition.hpp"
#include "btcayley/toric.hpp"

namespace btcayley {

CayleyMap::CayleyMap(int n, std::vector<Permutation> rotation) : n_(n), x_(std::move(rotation)) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("Cayley maps are supported for 1 <= n <= 7");
  if (x_.empty()) throw std::invalid_argument("empty generator rotation");
  for (const auto& x : x_) {
    if (x.degree() != n) throw std::invalid_argument("generator " + to_string(x) + " has the wrong degree");
    if (x.is_identity()) throw std::invalid_argument("the identity cannot be a generator");
  }
  for (std::size_t s = 0; s < x_.size(); ++s) {
    const auto it = std::find(x_.begin(), x_.end(), inverse(x_[s]));
    if (it == x_.end()) throw std::invalid_argument("generator set is not inverse-closed at " + to_string(x_[s]));
    if (std::find(x_.begin() + static_cast<std::ptrdiff_t>(s) + 1, x_.end(), x_[s]) != x_.end())
      throw std::invalid_argument("generator " + to_string(x_[s]) + " is repeated");
    inverse_.push_back(static_cast<int>(it - x_.begin()));
  }
  vertex_count_ = factorial(n);
  if (GeneratedSubgroup(n, x_).size() != vertex_count_)
    throw std::invalid_argument("generators do not generate Sym_n");

  const auto labels = all_permutations(n);
  step_.resize(vertex_count_ * x_.size());
  for (std::size_t v = 0; v < labels.size(); ++v)
    for (std::size_t s = 0; s < x_.size(); ++s) step_[v * x_.size() + s] = compose(labels[v], x_[s]).rank();
}

int CayleyMap::index_of(const Permutation& x) const {
  const auto it = std::find(x_.begin(), x_.end(), x);
  if (it == x_.end()) throw std::invalid_argument(to_string(x) + " is not a generator of the map");
  return static_cast<int>(it - x_.begin());
}

namespace {

void check_dart(const CayleyMap& m, const Dart& d) {
  if (d.gen < 0 || d.gen >= m.valency() || d.from >= m.vertex_count())
    throw std::invalid_argument("dart outside the map");
}

std::size_t dart_index(const CayleyMap& m, const Dart& d) {
  return d.from * static_cast<std::size_t>(m.valency()) + static_cast<std::size_t>(d.gen);
}

// R o T without the range checks.
Dart face_step(const CayleyMap& m, const Dart& d) {
  return Dart{m.step(d.from, d.gen), m.next_index(m.inverse_index(d.gen))};
}

}  // namespace

Dart rotation_R(const CayleyMap& m, const Dart& d) {
  check_dart(m, d);
  return Dart{d.from, m.next_index(d.gen)};
}

Dart reverse_T(const CayleyMap& m, const Dart& d) {
  check_dart(m, d);
  return Dart{m.step(d.from, d.gen), m.inverse_index(d.gen)};
}

std::vector<std::uint64_t> Face::vertex_walk() const {
  std::vector<std::uint64_t> out;
  out.reserve(darts.size());
  for (const auto& d : darts) out.push_back(d.from);
  return out;
}

Face face_through(const CayleyMap& m, const Dart& d) {
  check_dart(m, d);
  Face face;
  Dart cur = d;
  do {
    face.darts.push_back(cur);
    cur = face_step(m, cur);
  } while (cur != d);
  return face;
}

std::vector<Face> faces(const CayleyMap& m) {
  std::vector<bool> seen(m.dart_count(), false);
  std::vector<Face> out;
  // Scanning darts in increasing order makes each orbit start at its minimum.
  for (std::uint64_t v = 0; v < m.vertex_count(); ++v)
    for (int s = 0; s < m.valency(); ++s) {
      const Dart d{v, s};
      if (seen[dart_index(m, d)]) continue;
      Face face = face_through(m, d);
      for (const auto& e : face.darts) seen[dart_index(m, e)] = true;
      out.push_back(std::move(face));
    }
  return out;
}

std::map<std::size_t, std::size_t> face_size_histogram(const std::vector<Face>& faces) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& f : faces) ++out[f.darts.size()];
  return out;
}

long long euler_characteristic(const CayleyMap& m, const std::vector<Face>& faces) {
  const auto v = static_cast<long long>(m.vertex_count());
  const auto e = static_cast<long long>(m.dart_count() / 2);
  return v - e + static_cast<long long>(faces.size());
}

std::string to_string(RegularityResult::Status status) {
  switch (status) {
    case RegularityResult::Status::regular: return "regular";
    case RegularityResult::Status::not_regular: return "not-regular";
    case RegularityResult::Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

constexpr int kWitnessMaxDegree = 6;

// The vertex part of the map automorphism fixing the identity with
// (1, x_s) -> (1, x_{s+1}), or nullopt if R and T cannot both commute with it.
std::optional<std::vector<std::uint32_t>> propagate_rotation(const CayleyMap& m, const Budget& budget) {
  const auto count = static_cast<std::size_t>(m.vertex_count());
  const int k = m.valency();
  std::vector<std::int64_t> image(count, -1);
  std::vector<int> offset(count, 0);
  std::vector<bool> used(count, false);
  std::vector<std::uint64_t> queue{0};
  image[0] = 0;
  offset[0] = 1;
  used[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if ((head & 0x3FF) == 0) budget.check("is_regular");
    const std::uint64_t v = queue[head];
    const auto h = static_cast<std::uint64_t>(image[v]);
    const int c = offset[v];
    for (int j = 0; j < k; ++j) {
      const int shifted = (j + c) % k;
      const std::uint64_t u = m.step(v, j);
      const std::uint64_t hu = m.step(h, shifted);
      const int cu = ((m.inverse_index(shifted) - m.inverse_index(j)) % k + k) % k;
      if (image[u] < 0) {
        if (used[hu]) return std::nullopt;
        image[u] = static_cast<std::int64_t>(hu);
        offset[u] = cu;
        used[hu] = true;
        queue.push_back(u);
      } else if (static_cast<std::uint64_t>(image[u]) != hu || offset[u] != cu) {
        return std::nullopt;
      }
    }
  }
  return std::vector<std::uint32_t>(image.begin(), image.end());
}

}  // namespace

RegularityResult is_regular(const CayleyMap& m, const Budget& budget) {
  RegularityResult out;
  const int n = m.degree();
  const auto& x = m.generators();

  std::optional<std::vector<std::uint32_t>> psi;
  for (int r = 0; r <= n && !psi; ++r) {
    bool matches = true;
    for (int s = 0; s < m.valency() && matches; ++s)
      matches = bar_f(x[static_cast<std::size_t>(s)], r) == x[static_cast<std::size_t>(m.next_index(s))];
    if (matches) {
      out.bar_f_exponent = r;
      if (n <= kWitnessMaxDegree)
        psi = index_map_over_symmetric(n, [r](const Permutation& p) { return bar_f(p, r); });
    }
  }

  if (n > kWitnessMaxDegree) {
    out.detail = "witness construction needs the multiplication table of Sym_n, limited to n <= 6";
    return out;
  }

  if (!psi) {
    psi = propagate_rotation(m, budget);
    if (!psi) {
      out.status = RegularityResult::Status::not_regular;
      out.detail = "no map automorphism fixes the identity and rotates its darts";
      return out;
    }
  }

  budget.check("is_regular");
  const FiniteGroup group = FiniteGroup::symmetric(n);
  auto witness = check_skew(*psi, group);
  if (!witness) {
    if (out.bar_f_exponent) {
      // bar-f_r agreed with p on X but is not a skew-morphism; decide by propagation.
      out.bar_f_exponent.reset();
      const auto propagated = propagate_rotation(m, budget);
      if (!propagated) {
        out.status = RegularityResult::Status::not_regular;
        out.detail = "no map automorphism fixes the identity and rotates its darts";
        return out;
      }
      witness = check_skew(*propagated, group);
    }
    if (!witness) throw std::logic_error("map automorphism does not induce a skew-morphism");
  }
  out.status = RegularityResult::Status::regular;
  out.aut_order = m.vertex_count() * static_cast<std::uint64_t>(witness->order);
  out.detail = out.bar_f_exponent ? "skew-morphism bar-f_" + std::to_string(*out.bar_f_exponent)
                                  : "skew-morphism from the propagated map automorphism";
  out.witness = std::move(witness);
  return out;
}

int power_at(const SkewMorphismWitness& witness, const Permutation& pi) {
  return witness.pi_power.at(static_cast<std::size_t>(pi.rank()));
}

std::optional<int> t_balance(const SkewMorphismWitness& witness, const CayleyMap& m) {
  std::optional<int> t;
  for (const auto& x : m.generators()) {
    const int value = power_at(witness, x);
    if (t && *t != value) return std::nullopt;
    t = value;
  }
  return t;
}

CayleyMap octahedron_map() {
  return CayleyMap(3, {make_bt(CutPoints(0, 1, 3, 3)), make_bt(CutPoints(0, 2, 3, 3)),
                       make_bt(CutPoints(1, 2, 3, 3)), make_bt(CutPoints(0, 1, 2, 3))});
}

std::vector<Permutation> bar_f_rotation(int n) {
  if (n < 3) throw std::invalid_argument("bar-f map needs n >= 3");
  std::vector<Permutation> out{make_bt(CutPoints(0, 1, n, n)), make_bt(CutPoints(0, n - 1, n, n))};
  for (int i = n - 2; i >= 0; --i) out.push_back(make_bt(CutPoints(i, i + 1, i + 2, n)));
  return out;
}

CayleyMap bar_f_map(int n) { return CayleyMap(n, bar_f_rotation(n)); }

std::vector<Permutation> bar_f_n_rotation() {
  return {Permutation::from_one_line({5, 4, 2, 3, 1}), Permutation::from_one_line({5, 3, 4, 2, 1}),
          Permutation::from_one_line({4, 5, 3, 2, 1}), Permutation::from_one_line({4, 3, 2, 1, 5}),
          Permutation::from_one_line({1, 5, 4, 3, 2}), Permutation::from_one_line({5, 4, 3, 1, 2})};
}

CayleyMap bar_f_n_map() { return CayleyMap(5, bar_f_n_rotation()); }

}  // namespace btcayley
