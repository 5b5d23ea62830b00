#pragma once

#include "geoposet/family.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace geoposet {

struct family_not_supported : std::runtime_error {
  explicit family_not_supported(const std::string& op)
      : std::runtime_error(op + ": family not supported") {}
};

struct universe_too_large : std::runtime_error {
  universe_too_large() : std::runtime_error("candidate universe too large to enumerate") {}
};

enum class FilterRule {
  P5Rule,
  P6Rule,
  InsideOutside,
  C6Rule,          // part 1..5 in `part`
  EvenCycleRule,
  MaxCrossingBound,
};

inline const char* filter_rule_name(FilterRule r) {
  switch (r) {
    case FilterRule::P5Rule: return "p5-rule";
    case FilterRule::P6Rule: return "p6-rule";
    case FilterRule::InsideOutside: return "inside-outside";
    case FilterRule::C6Rule: return "c6-rule";
    case FilterRule::EvenCycleRule: return "even-cycle-rule";
    case FilterRule::MaxCrossingBound: return "max-crossing-bound";
  }
  return "?";
}

/// One necessary-condition failure.  `window` is the vertex relabeling
/// (automorphism image) under which the premise matched; for the
/// window-based path rules it is the identity and `shift` gives the window
/// start.  `premise` lists the matched pairs, `implicated` the required or
/// forbidden pairs.
struct FilterViolation {
  FilterRule rule;
  int part = 0;
  int shift = 0;
  VertexPermutation window;
  std::vector<EdgePair> premise;
  std::vector<EdgePair> implicated;
};

namespace detail {

inline int modular_edge(const GraphFamily& fam, int e0based) {
  int m = fam.edge_count();
  return ((e0based % m) + m) % m;
}

}  // namespace detail

/// In any four consecutive edges e_a..e_{a+3}: crossings a x (a+2) and
/// (a+1) x (a+3) force a x (a+3).  Windows wrap for cycles.
inline std::vector<FilterViolation> check_p5_rule(const GraphFamily& fam, const CrossingSet& x) {
  if (fam.kind == Kind::Clique) throw family_not_supported("check_p5_rule");
  std::vector<FilterViolation> out;
  if (fam.n < 5) return out;
  const int starts = fam.kind == Kind::Path ? fam.n - 4 : fam.n;
  for (int a = 0; a < starts; ++a) {
    int w[4];
    for (int t = 0; t < 4; ++t) w[t] = detail::modular_edge(fam, a + t);
    EdgePair p1(w[0], w[2]), p2(w[1], w[3]), concl(w[0], w[3]);
    if (x.contains(p1) && x.contains(p2) && !x.contains(concl)) {
      FilterViolation v{FilterRule::P5Rule, 0, a, VertexPermutation::identity(fam.n), {p1, p2}, {concl}};
      out.push_back(std::move(v));
    }
  }
  return out;
}

/// In any five consecutive edges: the five crossings
/// {a x a+2, a x a+3, a x a+4, a+1 x a+4, a+2 x a+4} force (a+1) x (a+3).
inline std::vector<FilterViolation> check_p6_rule(const GraphFamily& fam, const CrossingSet& x) {
  if (fam.kind == Kind::Clique) throw family_not_supported("check_p6_rule");
  std::vector<FilterViolation> out;
  if (fam.n < 6) return out;
  const int starts = fam.kind == Kind::Path ? fam.n - 5 : fam.n;
  static constexpr int kPrem[5][2] = {{0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}};
  for (int a = 0; a < starts; ++a) {
    int w[5];
    for (int t = 0; t < 5; ++t) w[t] = detail::modular_edge(fam, a + t);
    std::vector<EdgePair> prem;
    bool all = true;
    for (auto& pq : kPrem) {
      EdgePair p(w[pq[0]], w[pq[1]]);
      if (!x.contains(p)) {
        all = false;
        break;
      }
      prem.push_back(p);
    }
    EdgePair concl(w[1], w[3]);
    if (all && !x.contains(concl))
      out.push_back({FilterRule::P6Rule, 0, a, VertexPermutation::identity(fam.n), prem, {concl}});
  }
  return out;
}

/// Two interleaved cycle crossings e_i x e_k, e_j x e_l (i<j<k<l) force a
/// third crossing e_alpha x e_beta with alpha in [i,k] and beta in the
/// cyclic interval [k,i].
inline std::vector<FilterViolation> check_inside_outside(const GraphFamily& fam,
                                                         const CrossingSet& x) {
  if (fam.kind != Kind::Cycle) throw family_not_supported("check_inside_outside");
  std::vector<FilterViolation> out;
  if (fam.n < 5) return out;
  const auto& ps = x.pairs();
  for (size_t s = 0; s < ps.size(); ++s) {
    for (size_t t = 0; t < ps.size(); ++t) {
      if (s == t) continue;
      int i = ps[s].a, k = ps[s].b, j = ps[t].a, l = ps[t].b;
      if (!(i < j && j < k && k < l)) continue;
      bool satisfied = false;
      for (size_t q = 0; q < ps.size() && !satisfied; ++q) {
        if (q == s || q == t) continue;
        for (int swap = 0; swap < 2 && !satisfied; ++swap) {
          int alpha = swap ? ps[q].b : ps[q].a;
          int beta = swap ? ps[q].a : ps[q].b;
          bool in1 = i <= alpha && alpha <= k;
          bool in2 = beta >= k || beta <= i;  // cyclic [k .. m-1] U [0 .. i]
          if (in1 && in2) satisfied = true;
        }
      }
      if (!satisfied)
        out.push_back({FilterRule::InsideOutside, 0, 0, VertexPermutation::identity(fam.n),
                       {ps[s], ps[t]}, {}});
    }
  }
  return out;
}

namespace detail {

struct C6RulePattern {
  std::vector<std::pair<int, int>> premise;      // 1-based edge numbers
  std::vector<std::pair<int, int>> conclusion;
  bool forbid;                                   // true: conclusion must be absent
};

inline const std::vector<C6RulePattern>& c6_rule_patterns() {
  static const std::vector<C6RulePattern> v = {
      {{{1, 3}, {1, 4}, {1, 5}}, {{2, 6}}, true},
      {{{1, 3}, {1, 4}, {1, 5}, {2, 4}, {4, 6}}, {{2, 5}}, false},
      {{{1, 3}, {1, 4}, {2, 4}, {2, 5}}, {{1, 5}, {3, 5}, {3, 6}}, false},
      {{{1, 3}, {1, 4}, {2, 5}, {4, 6}}, {{2, 4}, {3, 5}, {3, 6}}, false},
      {{{1, 3}, {1, 4}, {2, 5}, {3, 6}}, {{2, 4}, {2, 6}, {3, 5}, {4, 6}}, false},
  };
  return v;
}

}  // namespace detail

/// The five C6 crossing implications, applied under all 12 relabelings.
inline std::vector<FilterViolation> check_c6_rules(const GraphFamily& fam, const CrossingSet& x) {
  if (fam.kind != Kind::Cycle || fam.n != 6) throw family_not_supported("check_c6_rules");
  std::vector<FilterViolation> out;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    auto act = induced_edge_action(fam, p);
    const auto& rules = detail::c6_rule_patterns();
    for (size_t r = 0; r < rules.size(); ++r) {
      std::vector<EdgePair> prem;
      bool all = true;
      for (auto [e, f] : rules[r].premise) {
        EdgePair img(act[static_cast<size_t>(e - 1)], act[static_cast<size_t>(f - 1)]);
        if (!x.contains(img)) {
          all = false;
          break;
        }
        prem.push_back(img);
      }
      if (!all) continue;
      std::vector<EdgePair> concl;
      bool any = false;
      for (auto [e, f] : rules[r].conclusion) {
        EdgePair img(act[static_cast<size_t>(e - 1)], act[static_cast<size_t>(f - 1)]);
        concl.push_back(img);
        if (x.contains(img)) any = true;
      }
      bool violated = rules[r].forbid ? any : !any;
      if (violated)
        out.push_back({FilterRule::C6Rule, static_cast<int>(r) + 1, 0, p, prem, concl});
    }
    return true;
  });
  return out;
}

/// Even cycles: e1 crossing every e_3..e_{n-1} forbids e2 x e_n.
/// Applied under all automorphism relabelings.
inline std::vector<FilterViolation> check_even_cycle_rule(const GraphFamily& fam,
                                                          const CrossingSet& x) {
  if (fam.kind != Kind::Cycle || fam.n % 2 != 0 || fam.n < 4)
    throw family_not_supported("check_even_cycle_rule");
  std::vector<FilterViolation> out;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    auto act = induced_edge_action(fam, p);
    std::vector<EdgePair> prem;
    bool all = true;
    for (int j = 3; j < fam.n && all; ++j) {
      EdgePair img(act[0], act[static_cast<size_t>(j - 1)]);
      if (x.contains(img))
        prem.push_back(img);
      else
        all = false;
    }
    if (all) {
      EdgePair forbidden(act[1], act[static_cast<size_t>(fam.n - 1)]);
      if (x.contains(forbidden))
        out.push_back({FilterRule::EvenCycleRule, 0, 0, p, prem, {forbidden}});
    }
    return true;
  });
  return out;
}

/// Maximum crossing count a realization of the family can attain.
inline long max_crossing_bound(const GraphFamily& fam) {
  const long n = fam.n;
  switch (fam.kind) {
    case Kind::Path: return n < 3 ? 0 : (n - 2) * (n - 3) / 2;
    case Kind::Cycle: return n % 2 ? n * (n - 3) / 2 : n * (n - 4) / 2 + 1;
    case Kind::Clique: return n * (n - 1) * (n - 2) * (n - 3) / 24;
  }
  return 0;
}

/// Entry in the open-ended filter registry used by enumeration.
struct RegisteredFilter {
  std::string name;
  std::function<bool(const GraphFamily&)> applies;
  std::function<std::vector<FilterViolation>(const GraphFamily&, const CrossingSet&)> check;
};

inline const std::vector<RegisteredFilter>& default_filter_registry() {
  static const std::vector<RegisteredFilter> v = {
      {"p5-rule",
       [](const GraphFamily& f) { return f.kind != Kind::Clique && f.n >= 5; },
       check_p5_rule},
      {"p6-rule",
       [](const GraphFamily& f) { return f.kind != Kind::Clique && f.n >= 6; },
       check_p6_rule},
      {"inside-outside",
       [](const GraphFamily& f) { return f.kind == Kind::Cycle && f.n >= 5; },
       check_inside_outside},
      {"c6-rules",
       [](const GraphFamily& f) { return f.kind == Kind::Cycle && f.n == 6; },
       check_c6_rules},
      {"even-cycle-rule",
       [](const GraphFamily& f) { return f.kind == Kind::Cycle && f.n % 2 == 0 && f.n >= 4; },
       check_even_cycle_rule},
  };
  return v;
}

/// Whether X and every automorphism image of X pass all applicable rules.
/// Each lemma is stated in one labeling; quantifying over the group applies
/// it "up to symmetry" exactly as realizability demands.
inline bool passes_filters(const GraphFamily& fam, const CrossingSet& x,
                           const std::vector<RegisteredFilter>& registry = default_filter_registry()) {
  if (x.size() > max_crossing_bound(fam)) return false;
  bool ok = true;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    CrossingSet img = act_on_crossing_set(fam, p, x);
    for (const auto& rule : registry) {
      if (!rule.applies(fam)) continue;
      if (!rule.check(fam, img).empty()) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

/// Lexicographic minimum of the automorphism orbit of X.
inline CrossingSet canonical_form(const GraphFamily& fam, const CrossingSet& x) {
  bool first = true;
  CrossingSet best;
  for_each_automorphism(fam, [&](const VertexPermutation& p) {
    CrossingSet img = act_on_crossing_set(fam, p, x);
    if (first || img < best) {
      best = std::move(img);
      first = false;
    }
    return true;
  });
  return best;
}

/// All canonical crossing sets over the candidate universe that survive the
/// bound and every registered filter, sorted by (size, lexicographic).
/// Combinatorial filtering only exists for paths and cycles; clique classes
/// come from sampling and direct realization.
inline std::vector<CrossingSet> enumerate_candidate_classes(
    const GraphFamily& fam,
    const std::vector<RegisteredFilter>& registry = default_filter_registry()) {
  if (fam.kind == Kind::Clique) throw family_not_supported("enumerate_candidate_classes");
  if (fam.n > 8) throw universe_too_large{};
  auto uni = candidate_crossing_pairs(fam);
  const int m = static_cast<int>(uni.size());
  if (m >= 26) throw universe_too_large{};
  const long bound = max_crossing_bound(fam);

  std::vector<CrossingSet> result;
  std::vector<CrossingSet> seen;  // kept sorted
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    if (std::popcount(mask) > static_cast<unsigned>(bound)) continue;
    std::vector<EdgePair> pairs;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) pairs.push_back(uni[static_cast<size_t>(i)]);
    CrossingSet x(std::move(pairs));
    if (!passes_filters(fam, x, registry)) continue;
    CrossingSet canon = canonical_form(fam, x);
    auto it = std::lower_bound(seen.begin(), seen.end(), canon);
    if (it == seen.end() || *it != canon) seen.insert(it, std::move(canon));
  }
  result = std::move(seen);
  std::sort(result.begin(), result.end(), [](const CrossingSet& a, const CrossingSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

}  // namespace geoposet
