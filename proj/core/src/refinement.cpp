#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "btcayley/isomorphism.hpp"

namespace btcayley {

namespace {

// Both graphs live in one vertex range: a = [0, size), b = [size, 2 size).
// Colour names are ranks of sorted signatures over the union, so equal
// colours mean the same thing on both sides.
class PairSearch {
 public:
  PairSearch(const Graph& a, const Graph& b, const SearchOptions& options,
             const std::function<bool(const std::vector<int>&)>& visit)
      : a_(a), b_(b), size_(a.vertex_count()), options_(options), visit_(visit) {}

  void run() {
    if (a_.vertex_count() != b_.vertex_count() || a_.edge_count() != b_.edge_count()) return;
    if (size_ == 0) {
      visit_({});
      return;
    }
    std::vector<int> colors(2 * static_cast<std::size_t>(size_));
    const auto inc_a = maximal_2_clique_incidence(a_);
    const auto inc_b = maximal_2_clique_incidence(b_);
    std::vector<std::pair<int, int>> seeds(colors.size());
    for (int v = 0; v < size_; ++v) {
      seeds[static_cast<std::size_t>(v)] = {a_.degree(v), inc_a[static_cast<std::size_t>(v)]};
      seeds[static_cast<std::size_t>(v + size_)] = {b_.degree(v), inc_b[static_cast<std::size_t>(v)]};
    }
    auto sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < colors.size(); ++v)
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), seeds[v]) - sorted.begin());
    search(std::move(colors));
  }

 private:
  std::span<const int> neighbors(int v) const { return v < size_ ? a_.neighbors(v) : b_.neighbors(v - size_); }
  int offset(int v) const { return v < size_ ? 0 : size_; }

  // Refines to the coarsest equitable colouring; false if the sides diverge.
  bool refine(std::vector<int>& colors) const {
    const std::size_t total = colors.size();
    int classes = count_classes(colors);
    std::vector<std::vector<int>> signatures(total);
    std::vector<int> order(total);
    for (;;) {
      for (std::size_t v = 0; v < total; ++v) {
        auto& sig = signatures[v];
        sig.clear();
        sig.push_back(colors[v]);
        const int base = offset(static_cast<int>(v));
        for (int u : neighbors(static_cast<int>(v))) sig.push_back(colors[static_cast<std::size_t>(u + base)]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return signatures[static_cast<std::size_t>(x)] < signatures[static_cast<std::size_t>(y)];
      });
      int next = -1;
      for (std::size_t p = 0; p < total; ++p) {
        const auto v = static_cast<std::size_t>(order[p]);
        if (p == 0 || signatures[v] != signatures[static_cast<std::size_t>(order[p - 1])]) ++next;
        colors[v] = next;
      }
      if (!balanced(colors)) return false;
      const int refined = next + 1;
      if (refined == classes) return true;
      classes = refined;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    auto copy = colors;
    std::sort(copy.begin(), copy.end());
    return static_cast<int>(std::unique(copy.begin(), copy.end()) - copy.begin());
  }

  bool balanced(const std::vector<int>& colors) const {
    std::vector<int> count(colors.size() + 1, 0);
    for (int v = 0; v < size_; ++v) ++count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    for (int v = size_; v < 2 * size_; ++v)
      if (--count[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] < 0) return false;
    return true;
  }

  bool is_isomorphism(const std::vector<int>& mapping) const {
    for (auto [u, v] : a_.edges())
      if (!b_.adjacent(mapping[static_cast<std::size_t>(u)], mapping[static_cast<std::size_t>(v)])) return false;
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool search(std::vector<int> colors) {
    options_.budget.check("isomorphism search");
    if (!refine(colors)) return true;

    std::vector<int> cell_size(colors.size() + 1, 0);
    for (int v = 0; v < size_; ++v) ++cell_size[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
    int target = -1;
    for (std::size_t c = 0; c < cell_size.size(); ++c)
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[static_cast<std::size_t>(target)]))
        target = static_cast<int>(c);

    if (target < 0) {
      std::vector<int> by_color(colors.size() + 1, -1);
      for (int w = size_; w < 2 * size_; ++w) by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(w)])] = w - size_;
      std::vector<int> mapping(static_cast<std::size_t>(size_));
      for (int v = 0; v < size_; ++v)
        mapping[static_cast<std::size_t>(v)] = by_color[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
      if (!is_isomorphism(mapping)) return true;
      return visit_(mapping);
    }

    int pivot = -1;
    for (int v = 0; v < size_ && pivot < 0; ++v)
      if (colors[static_cast<std::size_t>(v)] == target) pivot = v;
    const int fresh = static_cast<int>(colors.size());
    for (int w = size_; w < 2 * size_; ++w) {
      if (colors[static_cast<std::size_t>(w)] != target) continue;
      auto next = colors;
      next[static_cast<std::size_t>(pivot)] = fresh;
      next[static_cast<std::size_t>(w)] = fresh;
      if (!search(std::move(next))) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  int size_;
  const SearchOptions& options_;
  const std::function<bool(const std::vector<int>&)>& visit_;
};

}  // namespace

void for_each_isomorphism(const Graph& a, const Graph& b, const SearchOptions& options,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  if (static_cast<std::size_t>(std::max(a.vertex_count(), b.vertex_count())) > options.max_vertices)
    throw std::invalid_argument("graph has more than " + std::to_string(options.max_vertices) +
                                " vertices; exact search refused (use stabilizer-based methods)");
  PairSearch(a, b, options, visit).run();
}

std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b, const SearchOptions& options) {
  std::optional<std::vector<int>> found;
  for_each_isomorphism(a, b, options, [&](const std::vector<int>& mapping) {
    found = mapping;
    return false;
  });
  return found;
}

}  // namespace btcayley
