#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "domstruct/graph.hpp"

namespace domstruct {

enum class NamedGraph { k4, k5, prism3, wheel, petersen, cube_q3, moebius_kantor };

struct NamedSpec {
  NamedGraph kind = NamedGraph::k4;
  int param = 0;  // rim size for wheel

  [[nodiscard]] std::string name() const {
    switch (kind) {
      case NamedGraph::k4: return "K4";
      case NamedGraph::k5: return "K5";
      case NamedGraph::prism3: return "prism3";
      case NamedGraph::wheel: return "wheel(" + std::to_string(param) + ")";
      case NamedGraph::petersen: return "petersen";
      case NamedGraph::cube_q3: return "cube_q3";
      case NamedGraph::moebius_kantor: return "moebius_kantor";
    }
    return "?";
  }
};

/// Accepts "K4", "K5", "prism3", "wheel(k)", "wheel:k", "petersen", "cube_q3", "moebius_kantor".
inline NamedSpec parse_named(std::string_view text) {
  if (text == "K4") return {NamedGraph::k4, 0};
  if (text == "K5") return {NamedGraph::k5, 0};
  if (text == "prism3") return {NamedGraph::prism3, 0};
  if (text == "petersen") return {NamedGraph::petersen, 0};
  if (text == "cube_q3") return {NamedGraph::cube_q3, 0};
  if (text == "moebius_kantor") return {NamedGraph::moebius_kantor, 0};
  if (text.starts_with("wheel")) {
    auto rest = text.substr(5);
    if (rest.starts_with("(") && rest.ends_with(")")) rest = rest.substr(1, rest.size() - 2);
    else if (rest.starts_with(":")) rest = rest.substr(1);
    else throw std::invalid_argument("malformed wheel name: " + std::string(text));
    try {
      std::size_t used = 0;
      int k = std::stoi(std::string(rest), &used);
      if (used != rest.size()) throw std::invalid_argument("");
      return {NamedGraph::wheel, k};
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed wheel name: " + std::string(text));
    }
  }
  throw std::invalid_argument("unknown graph name: " + std::string(text));
}

namespace detail {

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline Graph generalized_petersen(int n, int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, std::move(edges));
}

}  // namespace detail

inline Graph generate_named(const NamedSpec& spec) {
  switch (spec.kind) {
    case NamedGraph::k4: return detail::complete_graph(4);
    case NamedGraph::k5: return detail::complete_graph(5);
    case NamedGraph::prism3: {
      std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
      return Graph(6, std::move(edges));
    }
    case NamedGraph::wheel: {
      const int k = spec.param;
      if (k < 3) throw std::invalid_argument("wheel(k) requires k >= 3, got " + std::to_string(k));
      std::vector<Edge> edges;
      for (int i = 1; i <= k; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % k + 1);
      }
      return Graph(k + 1, std::move(edges));
    }
    case NamedGraph::petersen: return detail::generalized_petersen(5, 2);
    case NamedGraph::cube_q3: {
      std::vector<Edge> edges;
      for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
          if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
      return Graph(8, std::move(edges));
    }
    case NamedGraph::moebius_kantor: return detail::generalized_petersen(8, 3);
  }
  throw std::invalid_argument("unknown named graph");
}

inline Graph generate_named(std::string_view name) { return generate_named(parse_named(name)); }

/// The named corpus used by default campaigns.
inline std::vector<std::string> default_named_corpus() {
  return {"K4", "K5", "prism3", "wheel(4)", "wheel(5)", "wheel(6)", "petersen", "cube_q3", "moebius_kantor"};
}

/// Uniform integer in [0, bound) by rejection; stable across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection sampler for 3-connected graphs: G(n, p) with mean degree about 4,
/// low-degree vertices patched up to degree 3, accepted once 3-connected.
inline Graph generate_random_3connected(int n, std::uint64_t seed, int attempts = 10000) {
  if (n < 4) throw std::invalid_argument("random 3-connected graph needs n >= 4, got " + std::to_string(n));
  if (attempts <= 0) throw std::invalid_argument("attempts must be positive");
  std::mt19937_64 rng(seed);
  // p = 4 / (n - 1), compared against a 32-bit draw
  const std::uint64_t threshold =
      n - 1 <= 4 ? (std::uint64_t{1} << 32) : (std::uint64_t{4} << 32) / static_cast<std::uint64_t>(n - 1);

  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<int> degree(n, 0);
    auto add = [&](int a, int b) {
      adj[a][b] = adj[b][a] = true;
      ++degree[a];
      ++degree[b];
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rng() >> 32) < threshold) add(i, j);
    for (int v = 0; v < n; ++v) {
      while (degree[v] < 3) {
        std::vector<int> candidates;
        for (int w = 0; w < n; ++w)
          if (w != v && !adj[v][w]) candidates.push_back(w);
        const int w = candidates[uniform_below(rng, candidates.size())];
        add(v, w);
      }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j]) edges.emplace_back(i, j);
    Graph g(n, std::move(edges));
    if (is_3_connected(g)) return g;
  }
  throw GenerationError("no 3-connected graph found for n=" + std::to_string(n) + " seed=" +
                        std::to_string(seed) + " within " + std::to_string(attempts) + " attempts");
}

}  // namespace domstruct
