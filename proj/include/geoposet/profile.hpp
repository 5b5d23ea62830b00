#pragma once

#include "geoposet/drawing.hpp"
#include "geoposet/family.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace geoposet {

struct length_mismatch : std::runtime_error {
  length_mismatch() : std::runtime_error("vectors have different lengths") {}
};

struct witness_required : std::runtime_error {
  witness_required() : std::runtime_error("hull size requires a witness drawing") {}
};

/// True iff the non-increasing sort of x is coordinatewise <= that of y.
inline bool sorted_dominance(std::vector<int> x, std::vector<int> y) {
  if (x.size() != y.size()) throw length_mismatch{};
  std::sort(x.rbegin(), x.rend());
  std::sort(y.rbegin(), y.rend());
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

/// Crossing-derived parameters of a realization class.  Everything except
/// hull_size is a function of the crossing set alone; hull_size needs a
/// witness drawing.
struct ParamProfile {
  long cr_total = 0;
  std::vector<int> cr_per_edge;    // by edge index
  int e0_count = 0;
  int ex_count = 0;
  std::vector<int> g0_edges;       // uncrossed edge indices
  std::vector<int> d0_per_vertex;  // by vertex, 1-based shifted down
  std::vector<int> m_per_vertex;
  std::vector<int> d0_sorted;      // non-increasing
  std::vector<int> m_sorted;       // non-increasing
  std::optional<int> omega_hat;    // cliques only
  std::optional<int> hull;

  int hull_size_checked() const {
    if (!hull) throw witness_required{};
    return *hull;
  }
};

namespace detail {

/// Convex clique number from the crossing set alone: a vertex subset is in
/// convex position iff each of its 4-subsets induces a crossing among its
/// three vertex-disjoint edge pairs.
inline int omega_hat_combinatorial(const GraphFamily& fam, const CrossingSet& x) {
  const int n = fam.n;
  auto quad_crossed = [&](int a, int b, int c, int d) {
    int pairings[3][4] = {{a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
    for (auto& q : pairings) {
      int e = fam.edge_index(q[0], q[1]);
      int f = fam.edge_index(q[2], q[3]);
      if (x.contains(EdgePair(e, f))) return true;
    }
    return false;
  };
  int best = 3;  // any three vertices are in convex position
  std::vector<int> subset;
  // enumerate vertex subsets of size >= 4 by bitmask (n <= 8 in practice)
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best || size < 4) continue;
    subset.clear();
    for (int v = 1; v <= n; ++v)
      if (mask >> (v - 1) & 1) subset.push_back(v);
    bool all = true;
    for (size_t i = 0; i < subset.size() && all; ++i)
      for (size_t j = i + 1; j < subset.size() && all; ++j)
        for (size_t k = j + 1; k < subset.size() && all; ++k)
          for (size_t l = k + 1; l < subset.size() && all; ++l)
            all = quad_crossed(subset[i], subset[j], subset[k], subset[l]);
    if (all) best = size;
  }
  return best;
}

}  // namespace detail

inline ParamProfile param_profile(const GraphFamily& fam, const CrossingSet& x,
                                  const Drawing* witness = nullptr) {
  ParamProfile pr;
  auto es = fam.edges();
  const int m = static_cast<int>(es.size());
  pr.cr_total = x.size();
  pr.cr_per_edge.assign(static_cast<size_t>(m), 0);
  for (const auto& p : x.pairs()) {
    ++pr.cr_per_edge[static_cast<size_t>(p.a)];
    ++pr.cr_per_edge[static_cast<size_t>(p.b)];
  }
  pr.d0_per_vertex.assign(static_cast<size_t>(fam.n), 0);
  pr.m_per_vertex.assign(static_cast<size_t>(fam.n), 0);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = es[static_cast<size_t>(e)];
    int c = pr.cr_per_edge[static_cast<size_t>(e)];
    if (c == 0) {
      pr.g0_edges.push_back(e);
      ++pr.d0_per_vertex[static_cast<size_t>(u - 1)];
      ++pr.d0_per_vertex[static_cast<size_t>(v - 1)];
    }
    pr.m_per_vertex[static_cast<size_t>(u - 1)] = std::max(pr.m_per_vertex[static_cast<size_t>(u - 1)], c);
    pr.m_per_vertex[static_cast<size_t>(v - 1)] = std::max(pr.m_per_vertex[static_cast<size_t>(v - 1)], c);
  }
  pr.e0_count = static_cast<int>(pr.g0_edges.size());
  pr.ex_count = m - pr.e0_count;
  pr.d0_sorted = pr.d0_per_vertex;
  pr.m_sorted = pr.m_per_vertex;
  std::sort(pr.d0_sorted.rbegin(), pr.d0_sorted.rend());
  std::sort(pr.m_sorted.rbegin(), pr.m_sorted.rend());
  if (fam.kind == Kind::Clique) pr.omega_hat = detail::omega_hat_combinatorial(fam, x);
  if (witness) pr.hull = hull_size(*witness);
  return pr;
}

}  // namespace geoposet
