#include "btcayley/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "btcayley/block_transposition.hpp"
#include "btcayley/gamma.hpp"

namespace btcayley {

VertexMap::VertexMap(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("vertex map is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

VertexMap VertexMap::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 0);
  return VertexMap(std::move(images));
}

bool VertexMap::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != static_cast<int>(v)) return false;
  return true;
}

VertexMap compose(const VertexMap& a, const VertexMap& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: vertex maps of different size");
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int v = 0; v < a.size(); ++v) out[static_cast<std::size_t>(v)] = a(b(v));
  return VertexMap(std::move(out));
}

VertexMap inverse(const VertexMap& m) {
  std::vector<int> out(static_cast<std::size_t>(m.size()));
  for (int v = 0; v < m.size(); ++v) out[static_cast<std::size_t>(m(v))] = v;
  return VertexMap(std::move(out));
}

VertexMap vertex_map_from(const Graph& g, const std::function<Permutation(const Permutation&)>& f) {
  if (!g.has_labels()) throw std::invalid_argument("vertex_map_from needs a labelled graph");
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (const auto& pi : g.labels()) {
    const Permutation image = f(pi);
    const auto index = g.index_of(image);
    if (!index) throw std::invalid_argument("image " + to_string(image) + " is not a vertex of the graph");
    images.push_back(*index);
  }
  return VertexMap(std::move(images));
}

VertexMap left_translation(const Graph& g, const Permutation& h) {
  if (g.has_labels() && g.label(0).degree() != h.degree())
    throw std::invalid_argument("left_translation: degree mismatch");
  return vertex_map_from(g, [&](const Permutation& pi) { return compose(h, pi); });
}

std::vector<VertexMap> dihedral_vertex_maps(const Graph& g, int n) {
  std::vector<VertexMap> out;
  for (const auto& d : dihedral_group(n))
    out.push_back(vertex_map_from(g, [&](const Permutation& pi) { return apply_dihedral(d, pi); }));
  return out;
}

bool is_automorphism(const Graph& g, const VertexMap& m) {
  if (m.size() != g.vertex_count()) return false;
  // A bijection that sends edges to edges preserves non-edges too, since the
  // edge count is finite and equal on both sides.
  for (auto [u, v] : g.edges())
    if (!g.adjacent(m(u), m(v))) return false;
  return true;
}

std::vector<VertexMap> aut_group(const Graph& g, const SearchOptions& options) {
  std::vector<VertexMap> out;
  for_each_isomorphism(g, g, options, [&](const std::vector<int>& mapping) {
    out.emplace_back(mapping);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Depth-first assignment of local maps in BFS order from the identity. The
// local map at a vertex pi with image P is s -> the generator index of
// P^-1 o tau(pi o t_s); it is always an automorphism of Gamma.
class StabilizerSearch {
 public:
  StabilizerSearch(int n, const Budget& budget) : budget_(budget) {
    const auto gens = tn_permutations(n);
    m_ = gens.size();
    const Graph gamma = gamma_graph(n);
    for (const auto& a : aut_group(gamma)) local_maps_.push_back(a.images());

    const auto labels = all_permutations(n);
    size_ = labels.size();
    step_.resize(size_ * m_);
    for (std::size_t v = 0; v < size_; ++v)
      for (std::size_t s = 0; s < m_; ++s)
        step_[v * m_ + s] = static_cast<int>(compose(labels[v], gens[s]).rank());

    order_.push_back(0);
    std::vector<bool> seen(size_, false);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (std::size_t s = 0; s < m_; ++s) {
        const int u = step_[static_cast<std::size_t>(order_[head]) * m_ + s];
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          order_.push_back(u);
        }
      }
    tau_.assign(size_, -1);
    used_.assign(size_, false);
  }

  std::vector<std::vector<int>> run() {
    tau_[0] = 0;
    used_[0] = true;
    descend(0);
    return found_;
  }

 private:
  int step(int v, int s) const { return step_[static_cast<std::size_t>(v) * m_ + static_cast<std::size_t>(s)]; }

  void descend(std::size_t position) {
    if (position == order_.size()) {
      found_.push_back(tau_);
      return;
    }
    budget_.check("stabilizer_of_identity");
    const int v = order_[position];
    const int image = tau_[static_cast<std::size_t>(v)];
    std::vector<int> assigned;
    for (const auto& local : local_maps_) {
      bool ok = true;
      for (std::size_t s = 0; s < m_ && ok; ++s) {
        const int u = step(v, static_cast<int>(s));
        const int target = step(image, local[s]);
        const int current = tau_[static_cast<std::size_t>(u)];
        if (current >= 0) {
          ok = current == target;
        } else if (used_[static_cast<std::size_t>(target)]) {
          ok = false;
        } else {
          tau_[static_cast<std::size_t>(u)] = target;
          used_[static_cast<std::size_t>(target)] = true;
          assigned.push_back(u);
        }
      }
      if (ok) descend(position + 1);
      for (int u : assigned) {
        used_[static_cast<std::size_t>(tau_[static_cast<std::size_t>(u)])] = false;
        tau_[static_cast<std::size_t>(u)] = -1;
      }
      assigned.clear();
    }
  }

  const Budget& budget_;
  std::size_t m_ = 0;
  std::size_t size_ = 0;
  std::vector<std::vector<int>> local_maps_;
  std::vector<int> step_;
  std::vector<int> order_;
  std::vector<int> tau_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<VertexMap> stabilizer_of_identity(int n, const Budget& budget) {
  if (n < 2 || n > 7) throw std::invalid_argument("stabilizer_of_identity supports 2 <= n <= 7");
  const Graph cayley = build_cayley(n, tn_permutations(n));
  std::vector<VertexMap> out;
  for (auto& images : StabilizerSearch(n, budget).run()) {
    VertexMap m(std::move(images));
    if (!is_automorphism(cayley, m)) throw std::logic_error("stabilizer search produced a non-automorphism");
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratedSubgroup::GeneratedSubgroup(int n, const std::vector<Permutation>& generators, const Budget& budget) : n_(n) {
  for (const auto& x : generators)
    if (x.degree() != n) throw std::invalid_argument("generated_subgroup: degree mismatch");
  std::vector<std::uint64_t> queue{Permutation::identity(n).pack()};
  members_.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if ((head & 0xFFF) == 0) budget.check("generated_subgroup");
    const Permutation pi = Permutation::unpack(queue[head], n);
    for (const auto& x : generators) {
      const std::uint64_t key = compose(pi, x).pack();
      if (members_.insert(key).second) {
        if (members_.size() > kMaxSize)
          throw std::invalid_argument("generated subgroup exceeds " + std::to_string(kMaxSize) + " elements");
        queue.push_back(key);
      }
    }
  }
}

bool GeneratedSubgroup::contains(const Permutation& pi) const {
  return pi.degree() == n_ && members_.contains(pi.pack());
}

std::vector<Permutation> orbit(const std::vector<DihedralElement>& generators, const Permutation& seed) {
  std::vector<Permutation> out{seed};
  std::unordered_set<Permutation> seen{seed};
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& d : generators) {
      Permutation next = apply_dihedral(d, out[head]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation translation_t(const Permutation& pi) { return compose(pi, reverse_permutation(pi.degree())); }

}  // namespace btcayley
