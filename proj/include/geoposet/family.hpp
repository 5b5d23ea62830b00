#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geoposet {

enum class Kind { Path, Cycle, Clique };

struct family_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Path: return "path";
    case Kind::Cycle: return "cycle";
    case Kind::Clique: return "clique";
  }
  return "?";
}

/// One of the three supported graph families with the standard labeling:
/// paths  P_n: vertices 1..n, edges e_i = {i, i+1}
/// cycles C_n: additionally e_n = {n, 1}
/// cliques K_n: edges e_{i,j} = {i, j}, i < j, listed lexicographically.
struct GraphFamily {
  Kind kind;
  int n;

  GraphFamily(Kind k, int nn) : kind(k), n(nn) {
    if ((kind == Kind::Path && n < 2) || (kind != Kind::Path && n < 3))
      throw family_error("vertex count out of range for family");
  }

  static GraphFamily path(int n) { return {Kind::Path, n}; }
  static GraphFamily cycle(int n) { return {Kind::Cycle, n}; }
  static GraphFamily clique(int n) { return {Kind::Clique, n}; }

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

  int edge_count() const {
    switch (kind) {
      case Kind::Path: return n - 1;
      case Kind::Cycle: return n;
      case Kind::Clique: return n * (n - 1) / 2;
    }
    return 0;
  }

  /// Edge endpoints (1-based vertices) in canonical label order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    switch (kind) {
      case Kind::Path:
        for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1);
        break;
      case Kind::Cycle:
        for (int i = 1; i < n; ++i) out.emplace_back(i, i + 1);
        out.emplace_back(1, n);  // e_n = {n, 1}, stored with endpoints sorted
        break;
      case Kind::Clique:
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
        break;
    }
    return out;
  }

  /// Edge index of the vertex pair, or -1 when {u,v} is not an edge.
  int edge_index(int u, int v) const {
    if (u == v || u < 1 || v < 1 || u > n || v > n) return -1;
    if (u > v) std::swap(u, v);
    switch (kind) {
      case Kind::Path:
        return (v == u + 1) ? u - 1 : -1;
      case Kind::Cycle:
        if (v == u + 1) return u - 1;
        if (u == 1 && v == n) return n - 1;
        return -1;
      case Kind::Clique: {
        // offset of row u: (u-1)*n - u*(u+1)/2, then column v
        int row = (u - 1) * n - u * (u + 1) / 2;
        return row + v - 1;
      }
    }
    return -1;
  }

  std::string edge_label(int idx) const {
    if (kind == Kind::Clique) {
      auto e = edges()[static_cast<size_t>(idx)];
      return "e" + std::to_string(e.first) + "-" + std::to_string(e.second);
    }
    return "e" + std::to_string(idx + 1);
  }
};

/// Unordered pair of edge indices, stored (lo, hi).
struct EdgePair {
  int a;
  int b;

  EdgePair(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
  friend std::strong_ordering operator<=>(const EdgePair&, const EdgePair&) = default;
};

/// Set of crossing edge pairs in canonical serialization order: each pair
/// (lo, hi), pairs sorted lexicographically.
class CrossingSet {
 public:
  CrossingSet() = default;
  explicit CrossingSet(std::vector<EdgePair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  const std::vector<EdgePair>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }

  bool contains(EdgePair p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
  }
  bool subset_of(const CrossingSet& o) const {
    return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
  }

  friend bool operator==(const CrossingSet&, const CrossingSet&) = default;
  friend std::strong_ordering operator<=>(const CrossingSet&, const CrossingSet&) = default;

 private:
  std::vector<EdgePair> pairs_;
};

/// All edge pairs that can cross: j-i >= 2 for paths, non-adjacent pairs for
/// cycles, vertex-disjoint pairs for cliques.  Sorted.
inline std::vector<EdgePair> candidate_crossing_pairs(const GraphFamily& fam) {
  auto es = fam.edges();
  std::vector<EdgePair> out;
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [u1, v1] = es[i];
      auto [u2, v2] = es[j];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
      out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct invalid_crossing_pair : std::runtime_error {
  invalid_crossing_pair() : std::runtime_error("crossing pair outside the candidate universe") {}
};

/// Builds a CrossingSet and rejects pairs outside the family's universe.
inline CrossingSet make_crossing_set(const GraphFamily& fam, std::vector<EdgePair> pairs) {
  auto uni = candidate_crossing_pairs(fam);
  for (const auto& p : pairs)
    if (!std::binary_search(uni.begin(), uni.end(), p)) throw invalid_crossing_pair{};
  return CrossingSet(std::move(pairs));
}

/// Vertex permutation, images[v-1] = image of vertex v (1-based).
struct VertexPermutation {
  std::vector<int> images;

  int apply(int v) const { return images[static_cast<size_t>(v - 1)]; }
  bool is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
      if (images[i] != static_cast<int>(i) + 1) return false;
    return true;
  }
  static VertexPermutation identity(int n) {
    VertexPermutation p;
    p.images.resize(static_cast<size_t>(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
  }
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

/// Streams the automorphism group: 2 maps for paths, the 2n dihedral maps
/// for cycles, all n! permutations (lexicographic, lazily) for cliques.
/// Visitor returns false to stop early; function returns false if stopped.
template <typename F>
bool for_each_automorphism(const GraphFamily& fam, F&& visit) {
  const int n = fam.n;
  switch (fam.kind) {
    case Kind::Path: {
      VertexPermutation p = VertexPermutation::identity(n);
      if (!visit(p)) return false;
      for (int i = 1; i <= n; ++i) p.images[static_cast<size_t>(i - 1)] = n + 1 - i;
      return visit(p);
    }
    case Kind::Cycle: {
      VertexPermutation p;
      p.images.resize(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) {
        for (int i = 1; i <= n; ++i) p.images[static_cast<size_t>(i - 1)] = (i - 1 + k) % n + 1;
        if (!visit(p)) return false;
        for (int i = 1; i <= n; ++i) p.images[static_cast<size_t>(i - 1)] = (n + 1 - i + k) % n + 1;
        if (!visit(p)) return false;
      }
      return true;
    }
    case Kind::Clique: {
      VertexPermutation p = VertexPermutation::identity(n);
      do {
        if (!visit(p)) return false;
      } while (std::next_permutation(p.images.begin(), p.images.end()));
      return true;
    }
  }
  return true;
}

inline std::vector<VertexPermutation> automorphisms(const GraphFamily& fam) {
  std::vector<VertexPermutation> out;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

struct image_not_an_edge : std::runtime_error {
  image_not_an_edge() : std::runtime_error("permutation image of an edge is not an edge") {}
};

/// Edge-index map induced by a vertex permutation; bijective on edges for
/// genuine automorphisms, throws image_not_an_edge otherwise.
inline std::vector<int> induced_edge_action(const GraphFamily& fam, const VertexPermutation& p) {
  auto es = fam.edges();
  std::vector<int> out(es.size());
  for (size_t i = 0; i < es.size(); ++i) {
    int img = fam.edge_index(p.apply(es[i].first), p.apply(es[i].second));
    if (img < 0) throw image_not_an_edge{};
    out[i] = img;
  }
  return out;
}

inline CrossingSet act_on_crossing_set(const std::vector<int>& edge_action,
                                       const CrossingSet& x) {
  std::vector<EdgePair> out;
  out.reserve(x.pairs().size());
  for (const auto& p : x.pairs())
    out.emplace_back(edge_action[static_cast<size_t>(p.a)], edge_action[static_cast<size_t>(p.b)]);
  return CrossingSet(std::move(out));
}

inline CrossingSet act_on_crossing_set(const GraphFamily& fam, const VertexPermutation& p,
                                       const CrossingSet& x) {
  return act_on_crossing_set(induced_edge_action(fam, p), x);
}

/// Line graph adjacency: pairs of edge indices sharing a vertex.
inline std::vector<EdgePair> line_graph(const GraphFamily& fam) {
  auto es = fam.edges();
  std::vector<EdgePair> out;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      auto [u1, v1] = es[i];
      auto [u2, v2] = es[j];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// 2-edge-colored line/crossing graph: vertices are the family's edges,
/// red = line-graph adjacency, blue = the crossing set.
struct LEXGraph {
  int vertex_count = 0;
  std::vector<EdgePair> red;
  std::vector<EdgePair> blue;
};

inline LEXGraph lex_graph(const GraphFamily& fam, const CrossingSet& x) {
  LEXGraph g;
  g.vertex_count = fam.edge_count();
  g.red = line_graph(fam);
  g.blue = x.pairs();
  return g;
}

}  // namespace geoposet
