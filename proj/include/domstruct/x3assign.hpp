#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "domstruct/graph.hpp"
#include "domstruct/structure.hpp"

namespace domstruct {

/// exact: X meets each cycle of D_SG in exactly the positions of its phase.
/// loose: those positions must be labeled; other labels are tolerated.
enum class PatternMode { exact, loose };

struct AssignOptions {
  PatternMode mode = PatternMode::exact;
  std::size_t max_assignments = 100000;
};

/// Per-D_SG-cycle phase choice and the label set X it induces.
struct Assignment {
  std::size_t structure_id = 0;
  std::vector<int> phases;  // one offset in {0,1,2} per cycle of d_sg
  VertexSet labels;
  bool feasible = false;
};

/// Vertices at positions congruent to `phase` mod 3 along the canonical traversal.
inline std::vector<Vertex> phase_positions(const Cycle& c, int phase) {
  std::vector<Vertex> out;
  for (std::size_t i = static_cast<std::size_t>(phase); i < c.length(); i += 3) out.push_back(c[i]);
  return out;
}

inline VertexSet labels_for(const Structure& s, std::span<const int> phases) {
  if (phases.size() != s.d_sg.size()) throw std::invalid_argument("one phase per d_sg cycle required");
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    auto p = phase_positions(s.d_sg[i], phases[i]);
    out.insert(out.end(), p.begin(), p.end());
  }
  return VertexSet(std::move(out));
}

/// Whether the labels induced by `phases` follow every third vertex on each cycle of D_SG.
inline bool pattern_holds(const Structure& s, std::span<const int> phases, PatternMode mode = PatternMode::exact) {
  const auto x = labels_for(s, phases);
  for (std::size_t i = 0; i < s.d_sg.size(); ++i) {
    const auto& c = s.d_sg[i];
    for (std::size_t k = 0; k < c.length(); ++k) {
      const bool on_pattern = static_cast<int>(k % 3) == phases[i];
      const bool labeled = x.contains(c[k]);
      if (on_pattern && !labeled) return false;
      if (mode == PatternMode::exact && labeled && !on_pattern) return false;
    }
  }
  return true;
}

namespace detail {

class PhaseSearch {
 public:
  PhaseSearch(const Structure& s, PatternMode mode) : s_(s), mode_(mode) {
    for (const auto& c : s.d_sg)
      if (c.length() % 3 != 0) throw std::invalid_argument("d_sg cycle length is not divisible by 3");
    const std::size_t k = s.d_sg.size();
    for (const auto& c : s.d_sg)
      for (Vertex v : c.vertices()) max_vertex_ = std::max(max_vertex_, v);
    compatible_.assign(k, std::vector<std::array<std::array<bool, 3>, 3>>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q < 3; ++q) compatible_[i][j][p][q] = pair_ok(i, p, j, q);
      }
    }
  }

  /// Visits every feasible phase vector in lexicographic order; stops when `visit` returns false.
  template <class Visit>
  void for_each(Visit&& visit) {
    std::vector<int> phases;
    walk(phases, visit);
  }

  /// Smallest |X|, ties broken by lexicographically smallest X.
  std::optional<std::pair<std::vector<int>, VertexSet>> minimum() {
    std::vector<int> phases;
    std::vector<int> counts(static_cast<std::size_t>(max_vertex_ + 1), 0);
    best_.reset();
    bound(phases, counts, 0);
    return best_;
  }

 private:
  [[nodiscard]] bool pair_ok(std::size_t i, int p, std::size_t j, int q) const {
    if (i == j) return true;
    // labels of j that land on cycle i must be pattern positions of i
    auto li = phase_positions(s_.d_sg[i], p);
    std::sort(li.begin(), li.end());
    for (Vertex v : phase_positions(s_.d_sg[j], q)) {
      if (!s_.d_sg[i].contains(v)) continue;
      if (mode_ == PatternMode::exact && !std::binary_search(li.begin(), li.end(), v)) return false;
    }
    return true;
  }

  [[nodiscard]] bool consistent(const std::vector<int>& phases, int next) const {
    const std::size_t i = phases.size();
    for (std::size_t j = 0; j < i; ++j) {
      if (!compatible_[i][j][next][phases[j]] || !compatible_[j][i][phases[j]][next]) return false;
    }
    return true;
  }

  template <class Visit>
  bool walk(std::vector<int>& phases, Visit& visit) {
    if (phases.size() == s_.d_sg.size()) return visit(phases);
    for (int p = 0; p < 3; ++p) {
      if (!consistent(phases, p)) continue;
      phases.push_back(p);
      const bool go_on = walk(phases, visit);
      phases.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  void bound(std::vector<int>& phases, std::vector<int>& counts, std::size_t label_count) {
    if (best_ && label_count > best_->second.size()) return;
    if (phases.size() == s_.d_sg.size()) {
      auto x = labels_for(s_, phases);
      if (!best_ || x.size() < best_->second.size() ||
          (x.size() == best_->second.size() && x < best_->second))
        best_ = std::make_pair(phases, std::move(x));
      return;
    }
    const auto& c = s_.d_sg[phases.size()];
    for (int p = 0; p < 3; ++p) {
      if (!consistent(phases, p)) continue;
      auto added = phase_positions(c, p);
      std::size_t fresh = 0;
      for (Vertex v : added)
        if (counts[v]++ == 0) ++fresh;
      phases.push_back(p);
      bound(phases, counts, label_count + fresh);
      phases.pop_back();
      for (Vertex v : added) --counts[v];
    }
  }

  const Structure& s_;
  PatternMode mode_;
  Vertex max_vertex_ = 0;
  std::vector<std::vector<std::array<std::array<bool, 3>, 3>>> compatible_;
  std::optional<std::pair<std::vector<int>, VertexSet>> best_;
};

}  // namespace detail

struct AssignmentList {
  std::vector<Assignment> assignments;  // by |X|, then X
  bool truncated = false;
};

/// All feasible phase vectors (up to the cap), pruned pairwise during the search.
inline AssignmentList assign_x3(const Structure& s, std::size_t structure_id = 0, const AssignOptions& opts = {}) {
  AssignmentList out;
  detail::PhaseSearch search(s, opts.mode);
  search.for_each([&](const std::vector<int>& phases) {
    if (out.assignments.size() == opts.max_assignments) {
      out.truncated = true;
      return false;
    }
    out.assignments.push_back({structure_id, phases, labels_for(s, phases), true});
    return true;
  });
  std::stable_sort(out.assignments.begin(), out.assignments.end(), [](const Assignment& a, const Assignment& b) {
    if (a.labels.size() != b.labels.size()) return a.labels.size() < b.labels.size();
    return a.labels < b.labels;
  });
  return out;
}

/// Smallest label set over all feasible phase vectors; nullopt when none exists.
inline std::optional<Assignment> min_label_assignment(const Structure& s, std::size_t structure_id = 0,
                                                      const AssignOptions& opts = {}) {
  detail::PhaseSearch search(s, opts.mode);
  auto best = search.minimum();
  if (!best) return std::nullopt;
  return Assignment{structure_id, std::move(best->first), std::move(best->second), true};
}

/// Every assignment attaining the minimum |X| (capped).
inline std::vector<Assignment> minimum_assignments(const Structure& s, std::size_t structure_id = 0,
                                                   const AssignOptions& opts = {}) {
  auto best = min_label_assignment(s, structure_id, opts);
  std::vector<Assignment> out;
  if (!best) return out;
  const std::size_t target = best->labels.size();
  detail::PhaseSearch search(s, opts.mode);
  search.for_each([&](const std::vector<int>& phases) {
    auto x = labels_for(s, phases);
    if (x.size() == target) out.push_back({structure_id, phases, std::move(x), true});
    return out.size() < opts.max_assignments;
  });
  std::sort(out.begin(), out.end(), [](const Assignment& a, const Assignment& b) { return a.labels < b.labels; });
  return out;
}

/// A path carries an X-3-path when, for some offset r, its labeled positions are
/// exactly (exact mode) or at least (loose mode) the indices congruent to r mod 3.
inline bool is_x3_path(std::span<const Vertex> path, const VertexSet& labels, PatternMode mode = PatternMode::exact) {
  for (int r = 0; r < 3; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < path.size() && ok; ++i) {
      const bool on_pattern = static_cast<int>(i % 3) == r;
      const bool labeled = labels.contains(path[i]);
      if (on_pattern && !labeled) ok = false;
      if (mode == PatternMode::exact && labeled && !on_pattern) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

struct ClosedPathOptions {
  PatternMode mode = PatternMode::exact;
  std::size_t max_steps = 2000000;
};

/// Looks for two u-v paths in the union graph that are X-3-paths and whose
/// second vertices differ and whose penultimate vertices differ.
inline bool has_closed_x3_path(const Structure& s, const Assignment& a, Vertex u, Vertex v,
                               const ClosedPathOptions& opts = {}) {
  if (!a.feasible) throw std::invalid_argument("closed X-3-path check needs a feasible assignment");
  const auto& verts = s.union_graph.vertices;
  if (!verts.contains(u) || !verts.contains(v)) throw std::invalid_argument("endpoint outside the union graph");
  if (u == v) throw std::invalid_argument("closed X-3-path check needs distinct endpoints");

  const Vertex max_v = verts.ids().back();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(max_v + 1));
  for (const auto& e : s.union_graph.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<std::pair<Vertex, Vertex>> ends;
  std::vector<bool> on_path(static_cast<std::size_t>(max_v + 1), false);
  std::vector<Vertex> path{u};
  on_path[u] = true;
  std::size_t steps = 0;
  bool found = false;

  // bit r of `offsets` stays set while offset r is consistent with the prefix
  auto still_ok = [&](unsigned offsets, std::size_t index, Vertex w) {
    const bool labeled = a.labels.contains(w);
    unsigned next = 0;
    for (unsigned r = 0; r < 3; ++r) {
      if (!(offsets >> r & 1U)) continue;
      const bool on_pattern = index % 3 == r;
      if (on_pattern && !labeled) continue;
      if (opts.mode == PatternMode::exact && labeled && !on_pattern) continue;
      next |= 1U << r;
    }
    return next;
  };

  auto dfs = [&](auto&& self, Vertex x, unsigned offsets) -> void {
    for (Vertex w : adj[x]) {
      if (found || ++steps > opts.max_steps) return;
      if (on_path[w]) continue;
      const unsigned next = still_ok(offsets, path.size(), w);
      if (!next) continue;
      if (w == v) {
        std::pair<Vertex, Vertex> key{path.size() >= 2 ? path[1] : v, x};
        for (const auto& other : ends) {
          if (other.first != key.first && other.second != key.second) {
            found = true;
            return;
          }
        }
        if (std::find(ends.begin(), ends.end(), key) == ends.end()) ends.push_back(key);
        continue;
      }
      on_path[w] = true;
      path.push_back(w);
      self(self, w, next);
      path.pop_back();
      on_path[w] = false;
    }
  };
  dfs(dfs, u, still_ok(0b111U, 0, u));
  return found;
}

enum class AttachmentType { a, b, c, d };

inline char to_char(AttachmentType t) { return static_cast<char>('a' + static_cast<int>(t)); }

/// Type of a vertex next to a component outside the structure:
/// (a) on the structure and labeled, (b) in R' with no labeled structure
/// neighbour, (c) in R' with a labeled structure neighbour, (d) on the
/// structure and unlabeled.
inline AttachmentType classify_attachment(const Graph& g, Vertex o, const Structure& s, const Assignment& a,
                                          const VertexSet& r_prime) {
  const auto& on_structure = s.union_graph.vertices;
  if (on_structure.contains(o)) return a.labels.contains(o) ? AttachmentType::a : AttachmentType::d;
  if (!r_prime.contains(o)) throw std::invalid_argument("vertex is neither on the structure nor in R'");
  for (Vertex w : g.neighbors(o))
    if (on_structure.contains(w) && a.labels.contains(w)) return AttachmentType::c;
  return AttachmentType::b;
}

}  // namespace domstruct
