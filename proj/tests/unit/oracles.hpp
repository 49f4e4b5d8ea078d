#pragma once
// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond Graph and Cover.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "normcov/cover.hpp"
#include "normcov/graph.hpp"
#include "normcov/red_blue.hpp"

namespace oracle {

using normcov::Cover;
using normcov::Graph;
using normcov::Vertex;
using normcov::VertexList;

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u] |= 1U << v;
  return adj;
}

inline bool mask_is_clique(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    const int v = __builtin_ctz(rest);
    if ((mask & ~(1U << v) & ~adj[v]) != 0) return false;
  }
  return true;
}

inline bool mask_is_stable(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    if ((adj[__builtin_ctz(rest)] & mask) != 0) return false;
  }
  return true;
}

// Largest clique by trying every vertex subset (n <= 24).
inline std::size_t omega(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  const std::uint32_t total = g.order() == 0 ? 1U : (1U << g.order());
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size > best && mask_is_clique(adj, mask)) best = size;
  }
  return best;
}

inline std::size_t alpha(const Graph& g) { return omega(g.complemented()); }

// Triple loop straight from the definition.
inline bool is_normal_cover(const Graph& g, const Cover& cover) {
  const std::size_t n = g.order();
  std::vector<int> in_clique(n, 0), in_stable(n, 0);
  for (const auto& k : cover.cliques) {
    for (std::size_t a = 0; a < k.size(); ++a) {
      if (k[a] >= n) return false;
      ++in_clique[k[a]];
      for (std::size_t b = a + 1; b < k.size(); ++b)
        if (!g.adjacent(k[a], k[b])) return false;
    }
  }
  for (const auto& st : cover.stables) {
    for (std::size_t a = 0; a < st.size(); ++a) {
      if (st[a] >= n) return false;
      ++in_stable[st[a]];
      for (std::size_t b = a + 1; b < st.size(); ++b)
        if (g.adjacent(st[a], st[b])) return false;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (in_clique[v] == 0 || in_stable[v] == 0) return false;
  for (const auto& k : cover.cliques) {
    for (const auto& st : cover.stables) {
      bool meet = false;
      for (const Vertex x : k)
        for (const Vertex y : st) meet = meet || x == y;
      if (!meet) return false;
    }
  }
  return true;
}

// Existence of a (c, s)-normal cover for n <= 5.
//
// If a cover exists, dropping cliques keeps it valid as long as the cliques
// still cover V, so some cover uses at most n cliques. Every family of at
// most n cliques of size <= c is tried; for each, every vertex needs a
// stable set of size <= s through it that meets every chosen clique.
inline bool has_cs_cover(const Graph& g, std::size_t c, std::size_t s) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  const auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> cliques, stables;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= c && mask_is_clique(adj, mask)) cliques.push_back(mask);
    if (size <= s && mask_is_stable(adj, mask)) stables.push_back(mask);
  }
  const std::uint32_t all = (1U << n) - 1;
  std::vector<std::uint32_t> chosen;
  auto family_works = [&] {
    std::uint32_t covered = 0;
    for (const auto k : chosen) covered |= k;
    if (covered != all) return false;
    for (std::size_t v = 0; v < n; ++v) {
      bool found = false;
      for (const auto st : stables) {
        if (!(st >> v & 1U)) continue;
        bool meets_all = true;
        for (const auto k : chosen) meets_all = meets_all && (k & st) != 0;
        if (meets_all) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (!chosen.empty() && family_works()) return true;
    if (chosen.size() == n) return false;
    for (std::size_t i = from; i < cliques.size(); ++i) {
      chosen.push_back(cliques[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

// Upper-triangle code, column by column, first bit most significant.
inline std::uint64_t code(const Graph& g, const std::vector<Vertex>& perm) {
  std::uint64_t out = 0;
  for (std::size_t j = 1; j < g.order(); ++j)
    for (std::size_t i = 0; i < j; ++i) out = out << 1 | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
  return out;
}

// Largest code over all n! relabellings.
inline std::uint64_t max_code(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
  std::uint64_t best = 0;
  do {
    best = std::max(best, code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t& state) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      if (static_cast<double>(state >> 11) * 0x1.0p-53 < p) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace oracle
