#pragma once

#include "geoposet/family.hpp"
#include "geoposet/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geoposet {

/// Straight-line drawing of a family member: one exact point per vertex.
/// positions[v-1] is the location of vertex v.
struct Drawing {
  GraphFamily family;
  std::vector<Point2> positions;

  Drawing(GraphFamily fam, std::vector<Point2> pos)
      : family(fam), positions(std::move(pos)) {}

  const Point2& at(int v) const { return positions[static_cast<size_t>(v - 1)]; }
};

/// Why a drawing fails general position.
struct DrawingViolation {
  enum class What { MissingPosition, DuplicatePosition, CollinearTriple, ConcurrentCrossings };
  What what;
  std::vector<int> vertices;      // offending vertices (collinear/duplicate)
  std::vector<int> edges;         // offending edges (concurrent crossings)

  std::string describe() const {
    std::string s;
    switch (what) {
      case What::MissingPosition: s = "missing position"; break;
      case What::DuplicatePosition: s = "duplicate position, vertices"; break;
      case What::CollinearTriple: s = "collinear triple, vertices"; break;
      case What::ConcurrentCrossings: s = "three edges concurrent, edges"; break;
    }
    for (int v : vertices) s += " " + std::to_string(v);
    for (int e : edges) s += " #" + std::to_string(e);
    return s;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<DrawingViolation> violations;
};

struct invalid_drawing : std::runtime_error {
  explicit invalid_drawing(const std::string& why) : std::runtime_error("invalid drawing: " + why) {}
};

namespace detail {

inline bool edges_disjoint(const std::pair<int, int>& e, const std::pair<int, int>& f) {
  return e.first != f.first && e.first != f.second && e.second != f.first && e.second != f.second;
}

}  // namespace detail

/// Checks all general-position invariants: positions present and pairwise
/// distinct, no three vertices collinear, no three edges through one
/// crossing point.  The report names every offending tuple.
inline ValidationReport validate_drawing(const Drawing& d) {
  ValidationReport rep;
  const int n = d.family.n;
  if (static_cast<int>(d.positions.size()) != n) {
    rep.ok = false;
    rep.violations.push_back({DrawingViolation::What::MissingPosition, {}, {}});
    return rep;
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (d.at(u) == d.at(v)) {
        rep.ok = false;
        rep.violations.push_back({DrawingViolation::What::DuplicatePosition, {u, v}, {}});
      }
  if (!rep.ok) return rep;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      for (int w = v + 1; w <= n; ++w)
        if (collinear(d.at(u), d.at(v), d.at(w))) {
          rep.ok = false;
          rep.violations.push_back({DrawingViolation::What::CollinearTriple, {u, v, w}, {}});
        }
  if (!rep.ok) return rep;

  // exact pairwise comparison of the crossing points of crossing edge pairs
  auto es = d.family.edges();
  std::vector<std::pair<EdgePair, Point2>> xpts;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      if (!detail::edges_disjoint(es[i], es[j])) continue;
      const Point2 &a = d.at(es[i].first), &b = d.at(es[i].second);
      const Point2 &c = d.at(es[j].first), &e = d.at(es[j].second);
      if (proper_cross(a, b, c, e))
        xpts.emplace_back(EdgePair(static_cast<int>(i), static_cast<int>(j)),
                          line_intersection(a, b, c, e));
    }
  for (size_t i = 0; i < xpts.size(); ++i)
    for (size_t j = i + 1; j < xpts.size(); ++j)
      if (xpts[i].second == xpts[j].second) {
        rep.ok = false;
        rep.violations.push_back({DrawingViolation::What::ConcurrentCrossings,
                                  {},
                                  {xpts[i].first.a, xpts[i].first.b, xpts[j].first.a,
                                   xpts[j].first.b}});
      }
  return rep;
}

/// Crossing set of a validated drawing, in canonical order.
/// Only pairs from the candidate universe are tested (edges sharing an
/// endpoint never properly cross under general position).
inline CrossingSet crossing_set(const Drawing& d) {
  auto rep = validate_drawing(d);
  if (!rep.ok) throw invalid_drawing(rep.violations.front().describe());
  auto es = d.family.edges();
  std::vector<EdgePair> out;
  for (const auto& cand : candidate_crossing_pairs(d.family)) {
    const auto& e = es[static_cast<size_t>(cand.a)];
    const auto& f = es[static_cast<size_t>(cand.b)];
    if (proper_cross(d.at(e.first), d.at(e.second), d.at(f.first), d.at(f.second)))
      out.push_back(cand);
  }
  return CrossingSet(std::move(out));
}

/// Crossing set without re-validating (callers that just validated).
inline CrossingSet crossing_set_unchecked(const Drawing& d) {
  auto es = d.family.edges();
  std::vector<EdgePair> out;
  for (const auto& cand : candidate_crossing_pairs(d.family)) {
    const auto& e = es[static_cast<size_t>(cand.a)];
    const auto& f = es[static_cast<size_t>(cand.b)];
    if (proper_cross(d.at(e.first), d.at(e.second), d.at(f.first), d.at(f.second)))
      out.push_back(cand);
  }
  return CrossingSet(std::move(out));
}

inline int hull_size(const Drawing& d) {
  return convex_hull_vertex_count(d.positions);
}

}  // namespace geoposet
