#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domstruct {

using Vertex = int;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

  [[nodiscard]] bool contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  [[nodiscard]] std::size_t size() const { return ids_.size(); }
  [[nodiscard]] bool empty() const { return ids_.empty(); }
  [[nodiscard]] auto begin() const { return ids_.begin(); }
  [[nodiscard]] auto end() const { return ids_.end(); }
  [[nodiscard]] const std::vector<Vertex>& ids() const { return ids_; }

  void insert(Vertex v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  [[nodiscard]] bool disjoint_from(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a == *b) return false;
      if (*a < *b)
        ++a;
      else
        ++b;
    }
    return true;
  }

  [[nodiscard]] VertexSet united(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet s;
    s.ids_ = std::move(out);
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges or ids out of range.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n > 0 ? n : 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n)
        throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                    " out of range for n=" + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i] == edges_[i - 1])
        throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].u) + " " +
                                    std::to_string(edges_[i].v));
    }
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
  }

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].size(); }

  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  /// Index of edge {a,b} in edges(), or -1.
  [[nodiscard]] int edge_index(Vertex a, Vertex b) const {
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  [[nodiscard]] bool valid(const VertexSet& s) const {
    return s.empty() || (s.ids().front() >= 0 && s.ids().back() < n_);
  }

  [[nodiscard]] VertexSet all_vertices() const {
    std::vector<Vertex> ids(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) ids[i] = i;
    return VertexSet(std::move(ids));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Subgraph given by explicit vertex and edge sets (e.g. a union of cycles).
struct Subgraph {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted

  friend bool operator==(const Subgraph&, const Subgraph&) = default;
  friend auto operator<=>(const Subgraph&, const Subgraph&) = default;
};

/// N[s] = s together with all neighbours of s.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  return VertexSet(std::move(out));
}

inline std::size_t min_degree(const Graph& g) {
  std::size_t best = g.order() > 0 ? g.degree(0) : 0;
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

/// Connected components of g minus `removed`, each sorted, ordered by smallest vertex.
inline std::vector<VertexSet> components_without(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!removed[w] && comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

inline std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<bool> mask(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : removed) mask[v] = true;
  return components_without(g, mask);
}

inline bool is_connected(const Graph& g) {
  return components_without(g, std::vector<bool>(static_cast<std::size_t>(g.order()), false))
             .size() <= 1;
}

/// Direct definition: n >= 4 and g - a - b is connected for every pair {a, b}.
inline bool is_3_connected(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (int a = 0; a < n; ++a) {
    removed[a] = true;
    for (int b = a + 1; b < n; ++b) {
      removed[b] = true;
      const bool ok = components_without(g, removed).size() == 1;
      removed[b] = false;
      if (!ok) return false;
    }
    removed[a] = false;
  }
  return true;
}

}  // namespace domstruct
