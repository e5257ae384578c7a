#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "domstruct/graph.hpp"

namespace domstruct {

/// Elementary cycle in canonical form: smallest vertex first, then the
/// smaller of its two cycle neighbours. Equality is equality of canonical forms.
class Cycle {
 public:
  Cycle() = default;

  /// Canonicalizes an arbitrary rotation/orientation. Throws on fewer than
  /// three vertices or repeated vertices.
  explicit Cycle(std::vector<Vertex> sequence) : vertices_(std::move(sequence)) {
    if (vertices_.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    auto sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("cycle repeats a vertex");
    auto min_it = std::min_element(vertices_.begin(), vertices_.end());
    std::rotate(vertices_.begin(), min_it, vertices_.end());
    if (vertices_.back() < vertices_[1]) std::reverse(vertices_.begin() + 1, vertices_.end());
  }

  [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
  [[nodiscard]] std::size_t length() const { return vertices_.size(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return vertices_[i]; }

  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }

  /// True if every consecutive pair (including last -> first) is an edge of g.
  [[nodiscard]] bool valid_in(const Graph& g) const {
    for (Vertex v : vertices_)
      if (v < 0 || v >= g.order()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (!g.adjacent(vertices_[i], vertices_[(i + 1) % vertices_.size()])) return false;
    return true;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct CycleBudget {
  std::optional<std::size_t> max_length;  // unset: the graph order
  std::size_t max_count = 200000;
};

struct CycleList {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t max_length, std::size_t max_count)
      : g_(g), max_length_(max_length), max_count_(max_count),
        on_path_(static_cast<std::size_t>(g.order()), false) {}

  CycleList run() {
    for (Vertex s = 0; s < g_.order() && !stop_; ++s) {
      root_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
    std::sort(out_.cycles.begin(), out_.cycles.end());
    return std::move(out_);
  }

 private:
  // Paths start at the root and only visit larger vertices, so each cycle is
  // found from its minimum vertex; requiring path[1] < path.back() picks one
  // of the two orientations.
  void extend(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (stop_) return;
      if (w == root_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) emit();
        continue;
      }
      if (w < root_ || on_path_[w]) continue;
      if (path_.size() >= max_length_) {
        out_.truncated = true;
        continue;
      }
      on_path_[w] = true;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  void emit() {
    if (out_.cycles.size() == max_count_) {
      out_.truncated = true;
      stop_ = true;
      return;
    }
    out_.cycles.emplace_back(path_);
  }

  const Graph& g_;
  std::size_t max_length_;
  std::size_t max_count_;
  std::vector<bool> on_path_;
  std::vector<Vertex> path_;
  Vertex root_ = 0;
  bool stop_ = false;
  CycleList out_;
};

}  // namespace detail

/// All elementary cycles of length <= budget.max_length, canonical and sorted.
/// `truncated` is set when either cap cut the search short.
inline CycleList enumerate_cycles(const Graph& g, const CycleBudget& budget = {}) {
  const std::size_t max_length = budget.max_length.value_or(static_cast<std::size_t>(g.order()));
  if (max_length == 0 || budget.max_count == 0) throw std::invalid_argument("cycle budget caps must be positive");
  return detail::CycleSearch(g, max_length, budget.max_count).run();
}

/// The cycles of length divisible by three.
inline CycleList c_g(const Graph& g, const CycleBudget& budget = {}) {
  auto all = enumerate_cycles(g, budget);
  std::erase_if(all.cycles, [](const Cycle& c) { return c.length() % 3 != 0; });
  return all;
}

}  // namespace domstruct
