#pragma once

#include "geoposet/drawing.hpp"
#include "geoposet/filters.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <vector>

namespace geoposet {

struct SearchBudget {
  int grid_half_width = 8;                 // search box {-g..g}^2 around vertex 1
  std::uint64_t max_nodes = 50'000'000;    // placement attempts before giving up
  std::uint64_t rng_seed = 0x9e3779b97f4a7c15ULL;
};

enum class SearchStatus { Realized, Exhausted, BudgetExceeded };

/// Exhausted means the whole grid tree was searched without success.  That
/// is evidence against realizability at this resolution, not a proof.
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Drawing> witness;
  std::uint64_t nodes_visited = 0;
};

struct invalid_target : std::runtime_error {
  invalid_target() : std::runtime_error("target pair outside the candidate universe") {}
};

/// True iff the drawing is valid and its crossing set equals X exactly.
inline bool verify_witness(const Drawing& d, const CrossingSet& x) {
  auto rep = validate_drawing(d);
  if (!rep.ok) throw invalid_drawing(rep.violations.front().describe());
  return crossing_set_unchecked(d) == x;
}

namespace detail {

struct GridSearch {
  const GraphFamily& fam;
  const CrossingSet& target;
  const SearchBudget& budget;
  std::vector<Point2> box;                       // scan order: (chebyshev, x, y)
  std::vector<std::pair<int, int>> edges;        // vertex pairs per edge index
  std::vector<std::vector<int>> completed_after; // edges fully placed once vertex k is set
  std::vector<Point2> placed;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;

  GridSearch(const GraphFamily& f, const CrossingSet& x, const SearchBudget& b)
      : fam(f), target(x), budget(b) {
    const int g = budget.grid_half_width;
    for (int cheb = 0; cheb <= g; ++cheb)
      for (int px = -cheb; px <= cheb; ++px)
        for (int py = -cheb; py <= cheb; ++py)
          if (std::max(std::abs(px), std::abs(py)) == cheb)
            box.push_back(Point2{Rational(px), Rational(py)});
    edges = fam.edges();
    completed_after.assign(static_cast<size_t>(fam.n + 1), {});
    for (size_t e = 0; e < edges.size(); ++e) {
      int last = std::max(edges[e].first, edges[e].second);
      completed_after[static_cast<size_t>(last)].push_back(static_cast<int>(e));
    }
  }

  bool edge_done(int e, int upto) const {
    return edges[static_cast<size_t>(e)].first <= upto && edges[static_cast<size_t>(e)].second <= upto;
  }

  bool consistent_after_placing(int k) {
    // general position among placed vertices
    const Point2& p = placed[static_cast<size_t>(k - 1)];
    for (int u = 1; u < k; ++u) {
      if (placed[static_cast<size_t>(u - 1)] == p) return false;
      for (int v = u + 1; v < k; ++v)
        if (collinear(placed[static_cast<size_t>(u - 1)], placed[static_cast<size_t>(v - 1)], p))
          return false;
    }
    // crossings among fully placed edges must equal the target restriction
    for (int e : completed_after[static_cast<size_t>(k)]) {
      auto [a1, b1] = edges[static_cast<size_t>(e)];
      for (size_t f = 0; f < edges.size(); ++f) {
        if (static_cast<int>(f) == e || !edge_done(static_cast<int>(f), k)) continue;
        auto [a2, b2] = edges[f];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
        bool crossed = proper_cross(placed[static_cast<size_t>(a1 - 1)], placed[static_cast<size_t>(b1 - 1)],
                                    placed[static_cast<size_t>(a2 - 1)], placed[static_cast<size_t>(b2 - 1)]);
        if (crossed != target.contains(EdgePair(e, static_cast<int>(f)))) return false;
      }
    }
    return true;
  }

  bool place(int k, SearchOutcome& out) {
    if (k > fam.n) {
      Drawing d(fam, placed);
      if (!validate_drawing(d).ok) return false;           // concurrent crossings
      if (crossing_set_unchecked(d) != target) return false;
      out.status = SearchStatus::Realized;
      out.witness = d;
      return true;
    }
    for (const Point2& cand : box) {
      if (++nodes > budget.max_nodes) {
        out_of_budget = true;
        return false;
      }
      if (k == 1 && !(cand.x.sign() == 0 && cand.y.sign() == 0)) break;  // vertex 1 pinned
      if (k == 2 && cand.y.sign() < 0) continue;                         // reflection quotient
      bool dup = false;
      for (int u = 1; u < k && !dup; ++u) dup = placed[static_cast<size_t>(u - 1)] == cand;
      if (dup) continue;
      placed.push_back(cand);
      if (consistent_after_placing(k)) {
        if (place(k + 1, out)) return true;
        if (out_of_budget) {
          placed.pop_back();
          return false;
        }
      }
      placed.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking grid search for a drawing whose crossing set is exactly X.
/// Vertices are placed in label order on integer points of the box; vertex 1
/// sits at the origin (the least point of the center-out scan) and vertex 2
/// is restricted to the closed upper half plane.
inline SearchOutcome realize(const GraphFamily& fam, const CrossingSet& x,
                             const SearchBudget& budget = {}) {
  auto uni = candidate_crossing_pairs(fam);
  for (const auto& p : x.pairs())
    if (!std::binary_search(uni.begin(), uni.end(), p)) throw invalid_target{};
  detail::GridSearch search(fam, x, budget);
  search.placed.reserve(static_cast<size_t>(fam.n));
  SearchOutcome out;
  bool found = search.place(1, out);
  out.nodes_visited = search.nodes;
  if (!found) out.status = search.out_of_budget ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  return out;
}

namespace detail {

/// Deterministic counter-based stream: sample i depends only on (seed, i),
/// so results are identical for any thread count.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t s) : state(s) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

inline Drawing draw_sample(const GraphFamily& fam, std::uint64_t seed, std::uint64_t index) {
  SplitMix gen(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
  const BigInt denom = 1'000'000'000;
  while (true) {
    std::vector<Point2> pts;
    pts.reserve(static_cast<size_t>(fam.n));
    for (int v = 0; v < fam.n; ++v) {
      BigInt ax = static_cast<long long>(gen.next() % 1'000'000'000ULL);
      BigInt ay = static_cast<long long>(gen.next() % 1'000'000'000ULL);
      pts.push_back(Point2{Rational(ax, denom), Rational(ay, denom)});
    }
    Drawing d(fam, std::move(pts));
    if (validate_drawing(d).ok) return d;
  }
}

}  // namespace detail

/// Random rational point sets, rejected until in general position; returns
/// the first witness drawing per canonical class.  Deterministic in (seed,
/// samples) regardless of `threads`.
inline std::map<CrossingSet, Drawing> sample_classes(const GraphFamily& fam, long samples,
                                                     std::uint64_t seed, int threads = 1) {
  if (fam.kind != Kind::Clique) throw family_not_supported("sample_classes");
  if (fam.n > 8) throw family_not_supported("sample_classes: n > 8");
  if (samples < 1) throw std::invalid_argument("samples must be positive");

  struct Hit {
    long index;
    Drawing witness;
  };
  auto run_range = [&](long lo, long hi, std::map<CrossingSet, Hit>& found) {
    std::map<CrossingSet, CrossingSet> canon_cache;
    for (long s = lo; s < hi; ++s) {
      Drawing d = detail::draw_sample(fam, seed, static_cast<std::uint64_t>(s));
      CrossingSet raw = crossing_set_unchecked(d);
      auto it = canon_cache.find(raw);
      if (it == canon_cache.end())
        it = canon_cache.emplace(raw, canonical_form(fam, raw)).first;
      const CrossingSet& canon = it->second;
      auto fit = found.find(canon);
      if (fit == found.end())
        found.emplace(canon, Hit{s, std::move(d)});
    }
  };

  std::map<CrossingSet, Hit> merged;
  if (threads <= 1) {
    run_range(0, samples, merged);
  } else {
    const int t = std::min<long>(threads, samples);
    std::vector<std::map<CrossingSet, Hit>> parts(static_cast<size_t>(t));
    std::vector<std::thread> workers;
    for (int w = 0; w < t; ++w) {
      long lo = samples * w / t, hi = samples * (w + 1) / t;
      workers.emplace_back([&, lo, hi, w] { run_range(lo, hi, parts[static_cast<size_t>(w)]); });
    }
    for (auto& th : workers) th.join();
    for (auto& part : parts)
      for (auto& [canon, hit] : part) {
        auto it = merged.find(canon);
        if (it == merged.end() || hit.index < it->second.index)
          merged.insert_or_assign(canon, std::move(hit));
      }
  }
  std::map<CrossingSet, Drawing> out;
  for (auto& [canon, hit] : merged) out.emplace(canon, std::move(hit.witness));
  return out;
}

}  // namespace geoposet
