#pragma once

#include "geoposet/filters.hpp"
#include "geoposet/profile.hpp"

#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace geoposet {

struct family_mismatch : std::runtime_error {
  family_mismatch() : std::runtime_error("realizations belong to different families") {}
};
struct duplicate_class : std::runtime_error {
  duplicate_class() : std::runtime_error("duplicate canonical class") {}
};
struct actually_related : std::runtime_error {
  actually_related() : std::runtime_error("pair is related; no nonprecedence certificate") {}
};
struct not_embeddable : std::runtime_error {
  explicit not_embeddable(const std::string& why) : std::runtime_error("subposet embedding failed: " + why) {}
};

/// A geometric isomorphism class: canonical crossing set, optional witness
/// drawing, cached parameter profile.
struct RealizationClass {
  std::string id;
  GraphFamily family;
  CrossingSet crossings;           // canonical form
  std::optional<Drawing> witness;
  ParamProfile profile;

  RealizationClass(std::string ident, GraphFamily fam, CrossingSet x,
                   std::optional<Drawing> wit = std::nullopt)
      : id(std::move(ident)),
        family(fam),
        crossings(std::move(x)),
        witness(std::move(wit)),
        profile(param_profile(fam, crossings, witness ? &*witness : nullptr)) {}
};

enum class CertificateKind {
  CrTotal,
  CrPerEdgeUnmatchable,
  E0Ex,
  G0NotSubgraph,
  OmegaHat,
  D0Dominance,
  MDominance,
  ExhaustiveSearch,
};

inline const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::CrTotal: return "cr-total";
    case CertificateKind::CrPerEdgeUnmatchable: return "cr-per-edge";
    case CertificateKind::E0Ex: return "e0-ex-counts";
    case CertificateKind::G0NotSubgraph: return "g0-not-subgraph";
    case CertificateKind::OmegaHat: return "convex-clique-number";
    case CertificateKind::D0Dominance: return "d0-dominance";
    case CertificateKind::MDominance: return "m-dominance";
    case CertificateKind::ExhaustiveSearch: return "exhaustive-search";
  }
  return "?";
}

struct NonPrecedenceCertificate {
  CertificateKind kind;
  std::string detail;
};

namespace detail {

/// Is there an abstract automorphism mapping dst's uncrossed graph into
/// src's uncrossed graph?  (Necessary for src -> dst precedence.)
inline bool g0_subgraph_feasible(const GraphFamily& fam, const ParamProfile& src,
                                 const ParamProfile& dst) {
  auto es = fam.edges();
  std::vector<char> src_g0(es.size(), 0);
  for (int e : src.g0_edges) src_g0[static_cast<size_t>(e)] = 1;
  bool found = false;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    for (int e : dst.g0_edges) {
      auto [u, v] = es[static_cast<size_t>(e)];
      int img = fam.edge_index(p.apply(u), p.apply(v));
      if (img < 0 || !src_g0[static_cast<size_t>(img)]) return true;  // next automorphism
    }
    found = true;
    return false;
  });
  return found;
}

inline std::string vec_str(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace detail

/// Every violated necessary condition for src -> dst, in the fixed
/// priority order.  An empty result is not a proof of precedence.
inline std::vector<NonPrecedenceCertificate> necessary_conditions(const GraphFamily& fam,
                                                                  const ParamProfile& src,
                                                                  const ParamProfile& dst) {
  std::vector<NonPrecedenceCertificate> out;
  if (src.cr_total > dst.cr_total)
    out.push_back({CertificateKind::CrTotal,
                   "cr " + std::to_string(src.cr_total) + " > " + std::to_string(dst.cr_total)});
  if (src.e0_count < dst.e0_count)
    out.push_back({CertificateKind::E0Ex,
                   "|E0| " + std::to_string(src.e0_count) + " < " + std::to_string(dst.e0_count)});
  if (!detail::g0_subgraph_feasible(fam, src, dst))
    out.push_back({CertificateKind::G0NotSubgraph, "target G0 embeds in no relabeling of source G0"});
  if (src.omega_hat && dst.omega_hat && *src.omega_hat > *dst.omega_hat)
    out.push_back({CertificateKind::OmegaHat,
                   "convex clique number " + std::to_string(*src.omega_hat) + " > " +
                       std::to_string(*dst.omega_hat)});
  if (!sorted_dominance(dst.d0_sorted, src.d0_sorted))
    out.push_back({CertificateKind::D0Dominance,
                   "D0 " + detail::vec_str(src.d0_sorted) + " !>= " + detail::vec_str(dst.d0_sorted)});
  if (!sorted_dominance(src.m_sorted, dst.m_sorted))
    out.push_back({CertificateKind::MDominance,
                   "M " + detail::vec_str(src.m_sorted) + " !<= " + detail::vec_str(dst.m_sorted)});
  if (!sorted_dominance(src.cr_per_edge, dst.cr_per_edge))
    out.push_back({CertificateKind::CrPerEdgeUnmatchable,
                   "sorted cr(e) vector not dominated"});
  return out;
}

struct PrecedesResult {
  bool related = false;
  std::optional<VertexPermutation> map;
};

namespace detail {

/// Clique search: assign vertex images in label order, pruning by the
/// per-vertex d0/m inequalities and by incremental crossing preservation.
struct CliqueHomSearch {
  const GraphFamily& fam;
  const CrossingSet& src;
  const CrossingSet& dst;
  const ParamProfile& sp;
  const ParamProfile& dp;
  std::vector<std::pair<int, int>> edges;
  // src crossing pairs grouped by the highest vertex they mention
  std::vector<std::vector<std::array<int, 4>>> checks;  // [u1,v1,u2,v2] vertex form
  std::vector<int> image;
  std::vector<char> used;

  CliqueHomSearch(const GraphFamily& f, const CrossingSet& s, const CrossingSet& d,
                  const ParamProfile& spr, const ParamProfile& dpr)
      : fam(f), src(s), dst(d), sp(spr), dp(dpr) {
    edges = fam.edges();
    checks.assign(static_cast<size_t>(fam.n + 1), {});
    for (const auto& p : src.pairs()) {
      auto [u1, v1] = edges[static_cast<size_t>(p.a)];
      auto [u2, v2] = edges[static_cast<size_t>(p.b)];
      int hi = std::max(std::max(u1, v1), std::max(u2, v2));
      checks[static_cast<size_t>(hi)].push_back({u1, v1, u2, v2});
    }
    image.assign(static_cast<size_t>(fam.n), 0);
    used.assign(static_cast<size_t>(fam.n + 1), 0);
  }

  bool extend(int v) {
    if (v > fam.n) return true;
    for (int w = 1; w <= fam.n; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (sp.d0_per_vertex[static_cast<size_t>(v - 1)] < dp.d0_per_vertex[static_cast<size_t>(w - 1)])
        continue;
      if (sp.m_per_vertex[static_cast<size_t>(v - 1)] > dp.m_per_vertex[static_cast<size_t>(w - 1)])
        continue;
      image[static_cast<size_t>(v - 1)] = w;
      used[static_cast<size_t>(w)] = 1;
      bool ok = true;
      for (const auto& c : checks[static_cast<size_t>(v)]) {
        int e = fam.edge_index(image[static_cast<size_t>(c[0] - 1)], image[static_cast<size_t>(c[1] - 1)]);
        int f = fam.edge_index(image[static_cast<size_t>(c[2] - 1)], image[static_cast<size_t>(c[3] - 1)]);
        if (!dst.contains(EdgePair(e, f))) {
          ok = false;
          break;
        }
      }
      if (ok && extend(v + 1)) return true;
      used[static_cast<size_t>(w)] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// Decides src <= dst and returns a witnessing vertex permutation.
/// Paths/cycles: some automorphism maps src's crossings into dst's.
/// Cliques: permutation search pruned by the necessary conditions.
inline PrecedesResult precedes(const RealizationClass& src, const RealizationClass& dst) {
  if (!(src.family == dst.family)) throw family_mismatch{};
  const GraphFamily& fam = src.family;
  PrecedesResult res;
  if (fam.kind != Kind::Clique) {
    for_each_automorphism(fam, [&](const VertexPermutation& p) {
      if (act_on_crossing_set(fam, p, src.crossings).subset_of(dst.crossings)) {
        res.related = true;
        res.map = p;
        return false;
      }
      return true;
    });
    return res;
  }
  if (!necessary_conditions(fam, src.profile, dst.profile).empty()) return res;
  detail::CliqueHomSearch search(fam, src.crossings, dst.crossings, src.profile, dst.profile);
  if (search.extend(1)) {
    res.related = true;
    VertexPermutation p;
    p.images = search.image;
    res.map = p;
  }
  return res;
}

/// First certificate in the fixed order (CrTotal, E0Ex, G0, OmegaHat, D0, M,
/// per-edge); ExhaustiveSearch when every parameter condition passes.
inline NonPrecedenceCertificate explain_nonprecedence(const RealizationClass& src,
                                                      const RealizationClass& dst) {
  if (precedes(src, dst).related) throw actually_related{};
  auto conds = necessary_conditions(src.family, src.profile, dst.profile);
  if (!conds.empty()) return conds.front();
  return {CertificateKind::ExhaustiveSearch, "no parameter obstruction; full map search failed"};
}

struct GeoPoset {
  GraphFamily family;
  std::vector<RealizationClass> classes;
  std::vector<std::vector<char>> leq;                    // reflexive relation matrix
  std::vector<std::pair<int, int>> hasse;                // cover edges, index pairs
  std::map<std::pair<int, int>, VertexPermutation> witness_maps;

  GeoPoset(GraphFamily fam) : family(fam) {}

  int index_of(const std::string& id) const {
    for (size_t i = 0; i < classes.size(); ++i)
      if (classes[i].id == id) return static_cast<int>(i);
    return -1;
  }
  bool strictly_less(int a, int b) const { return a != b && leq[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
};

/// Full relation via precedes, Hasse edges by transitive reduction.
/// The comparison matrix is embarrassingly parallel; `threads` > 1 splits
/// it by source row with a deterministic merge.
inline GeoPoset build_poset(const GraphFamily& fam, std::vector<RealizationClass> classes,
                            int threads = 1) {
  GeoPoset poset(fam);
  for (size_t i = 0; i < classes.size(); ++i)
    for (size_t j = i + 1; j < classes.size(); ++j)
      if (classes[i].crossings == classes[j].crossings) throw duplicate_class{};
  poset.classes = std::move(classes);
  const int m = static_cast<int>(poset.classes.size());
  poset.leq.assign(static_cast<size_t>(m), std::vector<char>(static_cast<size_t>(m), 0));

  std::vector<std::map<std::pair<int, int>, VertexPermutation>> maps(
      static_cast<size_t>(std::max(threads, 1)));
  auto run_rows = [&](int lo, int hi, int slot) {
    for (int i = lo; i < hi; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) {
          poset.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
          continue;
        }
        auto r = precedes(poset.classes[static_cast<size_t>(i)], poset.classes[static_cast<size_t>(j)]);
        if (r.related) {
          poset.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
          maps[static_cast<size_t>(slot)].emplace(std::make_pair(i, j), *r.map);
        }
      }
    }
  };
  if (threads <= 1 || m < 4) {
    run_rows(0, m, 0);
  } else {
    int t = std::min(threads, m);
    std::vector<std::thread> workers;
    for (int w = 0; w < t; ++w)
      workers.emplace_back([&, w, t] { run_rows(m * w / t, m * (w + 1) / t, w); });
    for (auto& th : workers) th.join();
  }
  for (auto& part : maps)
    for (auto& [key, perm] : part) poset.witness_maps.emplace(key, perm);

  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!poset.strictly_less(a, b)) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != a && z != b && poset.strictly_less(a, z) && poset.strictly_less(z, b)) cover = false;
      if (cover) poset.hasse.emplace_back(a, b);
    }
  return poset;
}

inline std::pair<std::vector<int>, std::vector<int>> minimal_maximal(const GeoPoset& poset) {
  const int m = static_cast<int>(poset.classes.size());
  std::vector<int> mins, maxs;
  for (int i = 0; i < m; ++i) {
    bool has_pred = false, has_succ = false;
    for (int j = 0; j < m; ++j) {
      has_pred |= poset.strictly_less(j, i);
      has_succ |= poset.strictly_less(i, j);
    }
    if (!has_pred) mins.push_back(i);
    if (!has_succ) maxs.push_back(i);
  }
  return {mins, maxs};
}

struct GradedResult {
  bool graded = false;
  std::vector<int> rank;                      // valid iff graded
  std::vector<int> chain_a, chain_b;          // conflicting cover chains otherwise
};

/// Rank propagation from the minimal elements along cover edges; a conflict
/// yields two cover chains of different lengths to the same element.
inline GradedResult is_graded(const GeoPoset& poset) {
  const int m = static_cast<int>(poset.classes.size());
  GradedResult res;
  res.rank.assign(static_cast<size_t>(m), -1);
  std::vector<int> parent(static_cast<size_t>(m), -1);
  std::vector<std::vector<int>> preds(static_cast<size_t>(m));
  for (auto [a, b] : poset.hasse) preds[static_cast<size_t>(b)].push_back(a);

  // process in order of increasing number of strict predecessors (a linear
  // extension, so all cover-parents are ranked before their children)
  std::vector<int> order(static_cast<size_t>(m));
  std::vector<int> below(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    int c = 0;
    for (int j = 0; j < m; ++j)
      if (poset.strictly_less(j, i)) ++c;
    below[static_cast<size_t>(i)] = c;
    order[static_cast<size_t>(i)] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)]; });

  auto chain_to = [&](int x) {
    std::vector<int> chain;
    for (int cur = x; cur != -1; cur = parent[static_cast<size_t>(cur)]) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  for (int x : order) {
    if (preds[static_cast<size_t>(x)].empty()) {
      res.rank[static_cast<size_t>(x)] = 0;
      continue;
    }
    for (int p : preds[static_cast<size_t>(x)]) {
      int want = res.rank[static_cast<size_t>(p)] + 1;
      if (res.rank[static_cast<size_t>(x)] == -1) {
        res.rank[static_cast<size_t>(x)] = want;
        parent[static_cast<size_t>(x)] = p;
      } else if (res.rank[static_cast<size_t>(x)] != want) {
        res.chain_a = chain_to(x);
        res.chain_b = chain_to(p);
        res.chain_b.push_back(x);
        return res;
      }
    }
  }
  res.graded = true;
  return res;
}

struct LatticeResult {
  bool lattice = true;
  std::optional<std::pair<int, int>> counterexample;
  std::vector<int> bounds;  // the non-unique minimal upper (or maximal lower) bounds
  bool join_failure = false;
};

inline LatticeResult is_lattice(const GeoPoset& poset) {
  const int m = static_cast<int>(poset.classes.size());
  LatticeResult res;
  auto le = [&](int a, int b) { return a == b || poset.strictly_less(a, b); };
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<int> uppers, lowers;
      for (int z = 0; z < m; ++z) {
        if (le(a, z) && le(b, z)) uppers.push_back(z);
        if (le(z, a) && le(z, b)) lowers.push_back(z);
      }
      auto minimal_of = [&](const std::vector<int>& v) {
        std::vector<int> out;
        for (int z : v) {
          bool minimal = true;
          for (int w : v)
            if (w != z && poset.strictly_less(w, z)) minimal = false;
          if (minimal) out.push_back(z);
        }
        return out;
      };
      auto maximal_of = [&](const std::vector<int>& v) {
        std::vector<int> out;
        for (int z : v) {
          bool maximal = true;
          for (int w : v)
            if (w != z && poset.strictly_less(z, w)) maximal = false;
          if (maximal) out.push_back(z);
        }
        return out;
      };
      auto sup = minimal_of(uppers);
      if (sup.size() != 1) {
        res.lattice = false;
        res.counterexample = {a, b};
        res.bounds = sup;
        res.join_failure = true;
        return res;
      }
      auto inf = maximal_of(lowers);
      if (inf.size() != 1) {
        res.lattice = false;
        res.counterexample = {a, b};
        res.bounds = inf;
        res.join_failure = false;
        return res;
      }
    }
  return res;
}

/// Order embedding of a small path/cycle poset into the poset of the same
/// kind on n >= k vertices: crossing sets carry over verbatim (new edges
/// uncrossed; for cycles the subdivided closing edge keeps its index and
/// crossings), then canonicalize in the large family.
inline std::vector<int> embed_subposet(const GeoPoset& small, const GeoPoset& large) {
  if (small.family.kind != large.family.kind || small.family.kind == Kind::Clique)
    throw not_embeddable("kind mismatch or clique");
  if (small.family.n > large.family.n) throw not_embeddable("target family is smaller");
  std::vector<int> image;
  for (const auto& cls : small.classes) {
    CrossingSet reinterpreted = make_crossing_set(large.family, cls.crossings.pairs());
    CrossingSet canon = canonical_form(large.family, reinterpreted);
    int target = -1;
    for (size_t j = 0; j < large.classes.size(); ++j)
      if (large.classes[j].crossings == canon) target = static_cast<int>(j);
    if (target < 0) throw not_embeddable("image class " + cls.id + " missing from target poset");
    image.push_back(target);
  }
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = 0; j < image.size(); ++j) {
      if (i == j) continue;
      bool small_rel = small.leq[i][j] != 0;
      bool large_rel = large.leq[static_cast<size_t>(image[i])][static_cast<size_t>(image[j])] != 0;
      if (small_rel != large_rel)
        throw not_embeddable("relation not preserved between " + small.classes[i].id + " and " +
                             small.classes[j].id);
    }
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j)
      if (image[i] == image[j]) throw not_embeddable("embedding not injective");
  return image;
}

}  // namespace geoposet
