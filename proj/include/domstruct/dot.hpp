#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "domstruct/graph.hpp"
#include "domstruct/structure.hpp"
#include "domstruct/x3assign.hpp"

namespace domstruct {

/// Renders a structure inside its host graph. Each cycle becomes a coloured
/// edge group (solid when it survives in D_SG, dashed when dropped); edges
/// shared by two or more cycles are drawn bold; labeled vertices are filled.
inline std::string to_dot(const Graph& g, const Structure& s, const std::optional<Assignment>& assignment = std::nullopt,
                          const std::string& name = "structure") {
  static constexpr std::array<const char*, 10> palette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                       "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (assignment && assignment->labels.contains(v))
      out << " [style=filled, fillcolor=\"#ffd54f\"]";
    else if (!s.union_graph.vertices.contains(v))
      out << " [color=gray]";
    out << ";\n";
  }

  std::map<Edge, int> multiplicity;
  for (const auto& c : s.cycles)
    for (const auto& e : c.edges()) ++multiplicity[e];

  for (const auto& e : g.edges()) {
    if (multiplicity.count(e)) continue;
    out << "  " << e.u << " -- " << e.v << " [color=gray];\n";
  }
  for (std::size_t i = 0; i < s.cycles.size(); ++i) {
    const auto& c = s.cycles[i];
    const bool kept = std::find(s.d_sg.begin(), s.d_sg.end(), c) != s.d_sg.end();
    out << "  subgraph cycle_" << i << " {\n";
    out << "    label=\"cycle " << i << (kept ? " (d_sg)" : " (dropped)") << "\";\n";
    for (const auto& e : c.edges()) {
      out << "    " << e.u << " -- " << e.v << " [color=\"" << palette[i % palette.size()] << "\", style=\""
          << (kept ? "solid" : "dashed") << (multiplicity[e] >= 2 ? ",bold" : "") << "\"];\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace domstruct
