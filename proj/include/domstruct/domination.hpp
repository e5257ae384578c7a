#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domstruct/graph.hpp"
#include "domstruct/structure.hpp"
#include "domstruct/x3assign.hpp"

namespace domstruct {

enum class DominationMethod { brute_force, greedy, structure };

inline const char* to_string(DominationMethod m) {
  switch (m) {
    case DominationMethod::brute_force: return "brute_force";
    case DominationMethod::greedy: return "greedy";
    case DominationMethod::structure: return "structure";
  }
  return "?";
}

struct DominationResult {
  std::size_t gamma = 0;
  VertexSet witness;
  DominationMethod method = DominationMethod::brute_force;
  bool exact = false;
};

inline bool is_dominating(const Graph& g, const VertexSet& x) {
  return closed_neighborhood(g, x).size() == static_cast<std::size_t>(g.order());
}

class OracleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int v) { return Mask{1} << v; }

// Existence of a dominating completion within `budget` extra vertices drawn
// from `allowed`. Branches on the undominated vertex with fewest candidates.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()), closed_(static_cast<std::size_t>(g.order())) {
    for (int v = 0; v < n_; ++v) {
      closed_[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[v] |= bit(w);
    }
  }

  [[nodiscard]] Mask closed(int v) const { return closed_[v]; }
  [[nodiscard]] Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  bool feasible(Mask undominated, int budget, Mask allowed) const {
    if (!undominated) return true;
    if (budget == 0) return false;

    int max_cover = 0;
    for (Mask rest = allowed; rest; rest &= rest - 1)
      max_cover = std::max(max_cover, popcount(closed_[std::countr_zero(rest)] & undominated));
    if (budget * max_cover < popcount(undominated)) return false;

    int pick = -1;
    int fewest = 65;
    for (Mask rest = undominated; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const int options = popcount(closed_[u] & allowed);
      if (options < fewest) {
        fewest = options;
        pick = u;
      }
    }
    if (fewest == 0) return false;

    Mask candidates = closed_[pick] & allowed;
    // drop w1 when some other candidate covers a superset of what w1 covers
    Mask kept = 0;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int w1 = std::countr_zero(rest);
      const Mask c1 = closed_[w1] & undominated;
      bool dominated = false;
      for (Mask other = candidates; other && !dominated; other &= other - 1) {
        const int w2 = std::countr_zero(other);
        if (w2 == w1) continue;
        const Mask c2 = closed_[w2] & undominated;
        if ((c1 & ~c2) == 0 && (c1 != c2 || w2 < w1)) dominated = true;
      }
      if (!dominated) kept |= bit(w1);
    }
    for (Mask rest = kept; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (feasible(undominated & ~closed_[w], budget - 1, allowed)) return true;
      allowed &= ~bit(w);
    }
    return false;
  }

 private:
  int n_;
  std::vector<Mask> closed_;
};

}  // namespace detail

/// Exact domination number by branch and bound; the witness is the
/// lexicographically smallest minimum dominating set.
inline DominationResult brute_force_gamma(const Graph& g, int limit = 30) {
  const int n = g.order();
  if (n > limit || n > 64)
    throw OracleLimitExceeded("exact oracle refused: n=" + std::to_string(n) + " exceeds limit " +
                              std::to_string(std::min(limit, 64)));
  DominationResult out{0, {}, DominationMethod::brute_force, true};
  if (n == 0) return out;

  detail::DominationSearch search(g);
  const detail::Mask all = search.all();
  int gamma = 1;
  while (!search.feasible(all, gamma, all)) ++gamma;

  std::vector<Vertex> witness;
  detail::Mask undominated = all;
  int next = 0;
  for (int slot = 0; slot < gamma; ++slot) {
    for (int w = next; w < n; ++w) {
      const detail::Mask rest = undominated & ~search.closed(w);
      const detail::Mask later = all & ~(detail::bit(w + 1) - 1);
      if (search.feasible(rest, gamma - slot - 1, later)) {
        witness.push_back(w);
        undominated = rest;
        next = w + 1;
        break;
      }
    }
  }
  out.gamma = static_cast<std::size_t>(gamma);
  out.witness = VertexSet(std::move(witness));
  return out;
}

/// Repeatedly takes the vertex covering the most undominated vertices (smallest id on ties).
inline DominationResult greedy_gamma(const Graph& g) {
  const int n = g.order();
  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  int remaining = n;
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    int best = -1;
    int best_gain = -1;
    for (int v = 0; v < n; ++v) {
      int gain = covered[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += covered[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen.push_back(best);
    if (!covered[best]) {
      covered[best] = true;
      --remaining;
    }
    for (Vertex w : g.neighbors(best)) {
      if (!covered[w]) {
        covered[w] = true;
        --remaining;
      }
    }
  }
  DominationResult out{chosen.size(), VertexSet(std::move(chosen)), DominationMethod::greedy, false};
  return out;
}

/// How one family fares as a domination structure under a given label set X.
struct FamilyEvaluation {
  std::size_t family_index = 0;
  bool assignment_feasible = false;
  VertexSet labels;
  std::vector<VertexSet> leftover;  // components of G - H
  std::size_t largest_leftover = 0;
  std::vector<Vertex> unsatisfied_singletons;  // {x} with N(x) not inside X
  bool components_ok = false;  // every component has at most one vertex
  bool exceptional_ok = false;  // singletons see only labeled vertices
  bool dominating = false;

  [[nodiscard]] bool accepted() const { return assignment_feasible && components_ok && exceptional_ok && dominating; }
};

inline FamilyEvaluation evaluate_family(const Graph& g, const Family& family, std::size_t family_index,
                                        const std::optional<VertexSet>& labels) {
  FamilyEvaluation ev;
  ev.family_index = family_index;
  ev.leftover = components_without(g, family.covered);
  for (const auto& r : ev.leftover) ev.largest_leftover = std::max(ev.largest_leftover, r.size());
  ev.components_ok = ev.largest_leftover <= 1;
  if (!labels) return ev;
  ev.assignment_feasible = true;
  ev.labels = *labels;
  for (const auto& r : ev.leftover) {
    if (r.size() != 1) continue;
    const Vertex x = *r.begin();
    for (Vertex w : g.neighbors(x)) {
      if (!labels->contains(w)) {
        ev.unsatisfied_singletons.push_back(x);
        break;
      }
    }
  }
  ev.exceptional_ok = ev.unsatisfied_singletons.empty();
  ev.dominating = is_dominating(g, *labels);
  return ev;
}

/// Minimal label sets for a family: one minimum assignment per member, combined.
inline std::vector<VertexSet> family_label_sets(const std::vector<Structure>& structures, const Family& family,
                                                const AssignOptions& opts, std::size_t cap = 4096) {
  std::vector<VertexSet> combos{VertexSet{}};
  for (std::size_t m : family.members) {
    auto options = minimum_assignments(structures[m], m, opts);
    if (options.empty()) return {};
    std::vector<VertexSet> next;
    for (const auto& base : combos) {
      for (const auto& a : options) {
        if (next.size() == cap) break;
        next.push_back(base.united(a.labels));
      }
    }
    combos = std::move(next);
  }
  std::sort(combos.begin(), combos.end());
  combos.erase(std::unique(combos.begin(), combos.end()), combos.end());
  return combos;
}

struct StructureGammaOutcome {
  std::optional<DominationResult> result;
  std::optional<std::size_t> family_index;
  // best evaluation per family (accepted one if any, else the first minimal assignment)
  std::vector<FamilyEvaluation> evaluations;
};

/// Dominating set read off a domination structure: every minimal assignment
/// of every family is tried, and a candidate is accepted only if G - H has
/// components of size <= 1, each singleton sees only labels, and X dominates.
inline StructureGammaOutcome structure_gamma(const Graph& g, const std::vector<Structure>& structures,
                                             const FamilySet& families, const AssignOptions& opts = {}) {
  StructureGammaOutcome out;
  for (std::size_t f = 0; f < families.families.size(); ++f) {
    const auto& family = families.families[f];
    const auto label_sets = family_label_sets(structures, family, opts);
    if (label_sets.empty()) {
      out.evaluations.push_back(evaluate_family(g, family, f, std::nullopt));
      continue;
    }
    std::optional<FamilyEvaluation> chosen;
    for (const auto& x : label_sets) {
      auto ev = evaluate_family(g, family, f, x);
      if (ev.accepted()) {
        chosen = std::move(ev);
        break;
      }
      if (!chosen) chosen = std::move(ev);
    }
    if (chosen->accepted()) {
      const auto& x = chosen->labels;
      if (!out.result || x.size() < out.result->gamma || (x.size() == out.result->gamma && x < out.result->witness)) {
        out.result = DominationResult{x.size(), x, DominationMethod::structure, false};
        out.family_index = f;
      }
    }
    out.evaluations.push_back(std::move(*chosen));
  }
  return out;
}

}  // namespace domstruct
