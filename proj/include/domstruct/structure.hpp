#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "domstruct/bitset.hpp"
#include "domstruct/cycles.hpp"
#include "domstruct/graph.hpp"

namespace domstruct {

struct SeamOptions {
  // Count a single shared vertex as a one-path intersection.
  bool allow_vertex_seam = false;
};

/// Connected pieces of the common subgraph of two cycles, each listed in
/// traversal order of the first cycle.
struct IntersectionShape {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> component_is_path;
  bool is_single_path = false;
};

inline IntersectionShape intersection_shape(const Cycle& c1, const Cycle& c2, const SeamOptions& opts = {}) {
  IntersectionShape shape;
  const auto seq = c1.vertices();
  const std::size_t len = seq.size();
  const auto other_edges = c2.edges();
  auto shared_vertex = [&](std::size_t i) { return c2.contains(seq[i % len]); };
  auto shared_edge = [&](std::size_t i) {
    Edge e(seq[i % len], seq[(i + 1) % len]);
    return std::binary_search(other_edges.begin(), other_edges.end(), e);
  };

  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < len; ++i) {
    if (!shared_edge(i)) {
      start = i + 1;
      break;
    }
  }
  if (!start) {
    // every edge of c1 lies on c2, so the two cycles coincide
    shape.components.emplace_back(seq.begin(), seq.end());
    shape.component_is_path.push_back(false);
    return shape;
  }

  std::vector<Vertex> current;
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i = *start + k;
    if (shared_vertex(i)) {
      current.push_back(seq[i % len]);
      if (shared_edge(i)) continue;
    }
    if (!current.empty()) {
      shape.components.push_back(std::move(current));
      shape.component_is_path.push_back(true);
      current.clear();
    }
  }
  shape.is_single_path = shape.components.size() == 1 && shape.component_is_path[0] &&
                         (shape.components[0].size() >= 2 || opts.allow_vertex_seam);
  return shape;
}

inline bool is_seamless(const Cycle& c1, const Cycle& c2, const SeamOptions& opts = {}) {
  return intersection_shape(c1, c2, opts).is_single_path;
}

/// Vertex and edge masks for a fixed list of cycles, for O(words) seam tests.
class CyclePool {
 public:
  explicit CyclePool(std::vector<Cycle> cycles, SeamOptions opts = {})
      : cycles_(std::move(cycles)), opts_(opts) {
    Vertex max_vertex = -1;
    std::vector<Edge> all_edges;
    for (const auto& c : cycles_) {
      for (Vertex v : c.vertices()) max_vertex = std::max(max_vertex, v);
      auto e = c.edges();
      all_edges.insert(all_edges.end(), e.begin(), e.end());
    }
    std::sort(all_edges.begin(), all_edges.end());
    all_edges.erase(std::unique(all_edges.begin(), all_edges.end()), all_edges.end());
    edge_ids_ = std::move(all_edges);
    const auto vbits = static_cast<std::size_t>(max_vertex + 1);
    for (const auto& c : cycles_) {
      Bitset vm(vbits);
      Bitset em(edge_ids_.size());
      for (Vertex v : c.vertices()) vm.set(static_cast<std::size_t>(v));
      for (const auto& e : c.edges())
        em.set(static_cast<std::size_t>(std::lower_bound(edge_ids_.begin(), edge_ids_.end(), e) - edge_ids_.begin()));
      vertex_masks_.push_back(std::move(vm));
      edge_masks_.push_back(std::move(em));
    }
  }

  [[nodiscard]] std::size_t size() const { return cycles_.size(); }
  [[nodiscard]] const Cycle& operator[](std::size_t i) const { return cycles_[i]; }
  [[nodiscard]] const std::vector<Cycle>& cycles() const { return cycles_; }
  [[nodiscard]] const Bitset& vertex_mask(std::size_t i) const { return vertex_masks_[i]; }

  // The common subgraph of two cycles is a union of paths unless the cycles
  // coincide, so (#shared vertices - #shared edges) counts its components.
  [[nodiscard]] bool seamless(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    const std::size_t sv = vertex_masks_[i].count_common(vertex_masks_[j]);
    const std::size_t se = edge_masks_[i].count_common(edge_masks_[j]);
    if (se == cycles_[i].length()) return false;
    return sv == se + 1 && (se >= 1 || opts_.allow_vertex_seam);
  }

 private:
  std::vector<Cycle> cycles_;
  SeamOptions opts_;
  std::vector<Edge> edge_ids_;
  std::vector<Bitset> vertex_masks_;
  std::vector<Bitset> edge_masks_;
};

/// A closed set of 0-mod-3 cycles with its union graph and reduced set.
struct Structure {
  std::vector<Cycle> cycles;  // canonical order
  // seamless partner of each cycle inside `cycles`; empty only for a singleton
  std::vector<std::optional<std::size_t>> partner;
  Subgraph union_graph;
  std::vector<Cycle> d_sg;  // canonical order
};

inline Subgraph union_of(const std::vector<Cycle>& cycles) {
  std::vector<Vertex> verts;
  std::vector<Edge> edges;
  for (const auto& c : cycles) {
    verts.insert(verts.end(), c.vertices().begin(), c.vertices().end());
    auto e = c.edges();
    edges.insert(edges.end(), e.begin(), e.end());
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {VertexSet(std::move(verts)), std::move(edges)};
}

namespace detail {

/// Indices of the cycles that survive the exclusive-vertex drop rule.
/// Dropping only lowers occurrence counts, so a single canonical-order pass
/// reaches the fixpoint: a kept cycle never loses its exclusive vertex.
inline std::vector<std::size_t> reduce_indices(const std::vector<Cycle>& cycles) {
  std::map<Vertex, std::size_t> occurrences;
  for (const auto& c : cycles)
    for (Vertex v : c.vertices()) ++occurrences[v];
  std::vector<std::size_t> kept;
  std::size_t remaining = cycles.size();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    const bool has_exclusive = std::any_of(c.vertices().begin(), c.vertices().end(),
                                           [&](Vertex v) { return occurrences[v] == 1; });
    if (has_exclusive || remaining == 1) {
      kept.push_back(i);
      continue;
    }
    for (Vertex v : c.vertices()) --occurrences[v];
    --remaining;
  }
  return kept;
}

inline Structure make_structure(const CyclePool& pool, std::vector<std::size_t> members,
                                const std::vector<std::optional<std::size_t>>& pool_parent) {
  std::sort(members.begin(), members.end());
  Structure s;
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < members.size(); ++k) {
    local[members[k]] = k;
    s.cycles.push_back(pool[members[k]]);
  }
  for (std::size_t idx : members) {
    const auto& parent = pool_parent[idx];
    s.partner.push_back(parent ? std::optional<std::size_t>(local.at(*parent)) : std::nullopt);
  }
  // the BFS root has no parent; give it its first child as partner
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (s.partner[k]) continue;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (s.partner[j] && *s.partner[j] == k) {
        s.partner[k] = j;
        break;
      }
    }
  }
  s.union_graph = union_of(s.cycles);
  for (std::size_t i : reduce_indices(s.cycles)) s.d_sg.push_back(s.cycles[i]);
  return s;
}

/// Seamless-closure component of `seed` among the pool indices in `open`,
/// which loses every index absorbed into the component.
inline std::vector<std::size_t> close_component(const CyclePool& pool, std::size_t seed,
                                                std::vector<std::size_t>& open,
                                                std::vector<std::optional<std::size_t>>& parent) {
  std::vector<std::size_t> members{seed};
  std::erase(open, seed);
  for (std::size_t head = 0; head < members.size(); ++head) {
    const std::size_t current = members[head];
    std::vector<std::size_t> still_open;
    still_open.reserve(open.size());
    for (std::size_t j : open) {
      if (pool.seamless(current, j)) {
        parent[j] = current;
        members.push_back(j);
      } else {
        still_open.push_back(j);
      }
    }
    open.swap(still_open);
  }
  return members;
}

}  // namespace detail

/// D_SG: drops, in canonical order, every cycle without an exclusive vertex
/// (a vertex on no other remaining cycle) while more than one cycle remains.
inline std::vector<Cycle> reduce_d_sg(const Structure& s) {
  std::vector<Cycle> out;
  for (std::size_t i : detail::reduce_indices(s.cycles)) out.push_back(s.cycles[i]);
  return out;
}

/// Closure of `seed` under "add a pool cycle seamless with some member".
/// The fixpoint does not depend on the order cycles are added in, so this is
/// the same set the smallest-first greedy rule reaches.
inline Structure grow_structure(const Cycle& seed, const std::vector<Cycle>& pool_cycles,
                                const SeamOptions& opts = {}) {
  auto sorted = pool_cycles;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto it = std::lower_bound(sorted.begin(), sorted.end(), seed);
  if (it == sorted.end() || *it != seed) throw std::invalid_argument("seed cycle is not in the pool");
  const auto seed_index = static_cast<std::size_t>(it - sorted.begin());
  CyclePool pool(std::move(sorted), opts);
  std::vector<std::size_t> open(pool.size());
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
  std::vector<std::optional<std::size_t>> parent(pool.size());
  auto members = detail::close_component(pool, seed_index, open, parent);
  return detail::make_structure(pool, std::move(members), parent);
}

struct StructureSet {
  std::vector<Structure> structures;
  std::size_t cg_size = 0;
  bool cg_truncated = false;
  bool truncated = false;  // max_structures fired
};

/// Every distinct structure graph reachable by closure from a 0-mod-3 cycle,
/// ordered by smallest seed and deduplicated on the union graph.
inline StructureSet enumerate_structures(const Graph& g, const CycleBudget& budget = {},
                                         std::size_t max_structures = 10000, const SeamOptions& opts = {}) {
  if (max_structures == 0) throw std::invalid_argument("max_structures must be positive");
  auto cg = c_g(g, budget);
  StructureSet out;
  out.cg_size = cg.cycles.size();
  out.cg_truncated = cg.truncated;

  CyclePool pool(std::move(cg.cycles), opts);
  std::vector<std::size_t> open(pool.size());
  for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
  std::vector<std::optional<std::size_t>> parent(pool.size());
  std::vector<Subgraph> seen;

  while (!open.empty()) {
    if (out.structures.size() == max_structures) {
      out.truncated = true;
      break;
    }
    const std::size_t seed = open.front();
    auto members = detail::close_component(pool, seed, open, parent);
    auto s = detail::make_structure(pool, std::move(members), parent);
    if (std::find(seen.begin(), seen.end(), s.union_graph) != seen.end()) continue;
    seen.push_back(s.union_graph);
    out.structures.push_back(std::move(s));
  }
  return out;
}

/// One element of F(G): pairwise vertex-disjoint structure graphs, maximal.
struct Family {
  std::vector<std::size_t> members;  // indices into the StructureSet
  VertexSet covered;
};

struct FamilySet {
  std::vector<Family> families;
  bool truncated = false;
};

namespace detail {

// Bron-Kerbosch with pivoting over the "vertex-disjoint" relation.
class FamilySearch {
 public:
  FamilySearch(const std::vector<Structure>& structures, std::size_t cap)
      : structures_(structures), cap_(cap), disjoint_(structures.size(), std::vector<bool>(structures.size())) {
    for (std::size_t i = 0; i < structures.size(); ++i)
      for (std::size_t j = 0; j < structures.size(); ++j)
        disjoint_[i][j] = i != j && structures[i].union_graph.vertices.disjoint_from(structures[j].union_graph.vertices);
  }

  FamilySet run() {
    std::vector<std::size_t> candidates(structures_.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
    std::vector<std::size_t> chosen;
    if (!candidates.empty()) expand(chosen, candidates, {});
    std::sort(out_.families.begin(), out_.families.end(),
              [](const Family& a, const Family& b) { return a.members < b.members; });
    return std::move(out_);
  }

 private:
  void expand(std::vector<std::size_t>& chosen, std::vector<std::size_t> candidates,
              std::vector<std::size_t> excluded) {
    if (out_.truncated) return;
    if (candidates.empty() && excluded.empty()) {
      if (out_.families.size() == cap_) {
        out_.truncated = true;
        return;
      }
      Family f;
      f.members = chosen;
      std::sort(f.members.begin(), f.members.end());
      for (std::size_t m : f.members) f.covered = f.covered.united(structures_[m].union_graph.vertices);
      out_.families.push_back(std::move(f));
      return;
    }
    std::size_t pivot = candidates.empty() ? excluded.front() : candidates.front();
    std::size_t best = 0;
    for (const auto* pool : {&candidates, &excluded}) {
      for (std::size_t u : *pool) {
        std::size_t deg = 0;
        for (std::size_t c : candidates) deg += disjoint_[u][c] ? 1 : 0;
        if (deg > best) {
          best = deg;
          pivot = u;
        }
      }
    }
    std::vector<std::size_t> branch;
    for (std::size_t c : candidates)
      if (!disjoint_[pivot][c]) branch.push_back(c);
    for (std::size_t v : branch) {
      std::vector<std::size_t> next_c;
      std::vector<std::size_t> next_x;
      for (std::size_t c : candidates)
        if (disjoint_[v][c]) next_c.push_back(c);
      for (std::size_t x : excluded)
        if (disjoint_[v][x]) next_x.push_back(x);
      chosen.push_back(v);
      expand(chosen, std::move(next_c), std::move(next_x));
      chosen.pop_back();
      std::erase(candidates, v);
      excluded.push_back(v);
    }
  }

  const std::vector<Structure>& structures_;
  std::size_t cap_;
  std::vector<std::vector<bool>> disjoint_;
  FamilySet out_;
};

}  // namespace detail

/// F(G): all maximal sets of pairwise vertex-disjoint structure graphs.
inline FamilySet build_family(const std::vector<Structure>& structures, std::size_t max_families = 10000) {
  if (max_families == 0) throw std::invalid_argument("max_families must be positive");
  return detail::FamilySearch(structures, max_families).run();
}

/// Cycle pairs of `s` that connect without seam (i < j).
inline std::vector<std::pair<std::size_t, std::size_t>> seam_pairs(const Structure& s, const SeamOptions& opts = {}) {
  CyclePool pool(s.cycles, opts);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (pool.seamless(i, j)) out.emplace_back(i, j);
  return out;
}

}  // namespace domstruct
