#pragma once

#include "geoposet/drawing.hpp"
#include "geoposet/filters.hpp"
#include "geoposet/realize.hpp"

#include <stdexcept>
#include <vector>

namespace geoposet {

struct no_crossings : std::runtime_error {
  no_crossings() : std::runtime_error("drawing has no crossing to remove") {}
};

struct construction_failed : std::runtime_error {
  explicit construction_failed(const std::string& what)
      : std::runtime_error("construction failed: " + what) {}
};

namespace detail {

/// Rational point on the unit circle at parameter u = tan(theta/2).
inline Point2 unit_circle_point(const Rational& u) {
  Rational d = Rational(1) + u * u;
  return Point2{(Rational(1) - u * u) / d, (Rational(2) * u) / d};
}

/// Rational point on the circle x^2 + (y+1)^2 = 4.
inline Point2 chain_circle_point(const Rational& u) {
  Rational d = Rational(1) + u * u;
  return Point2{Rational(2) * (Rational(1) - u * u) / d, Rational(-1) + Rational(4) * u / d};
}

/// Second intersection of line(apex, s) with that circle, s on the circle.
inline Point2 chain_circle_second_intersection(const Point2& apex, const Point2& s) {
  Rational dx = s.x - apex.x, dy = s.y - apex.y;
  Rational ex = apex.x, ey = apex.y + Rational(1);
  Rational a = dx * dx + dy * dy;
  Rational c = ex * ex + ey * ey - Rational(4);
  Rational t2 = c / a;  // the roots of the quadratic are 1 and c/a
  return Point2{apex.x + t2 * dx, apex.y + t2 * dy};
}

}  // namespace detail

/// Path drawing attaining the (n-2)(n-3)/2 crossing maximum: vertices on a
/// circle in the star order (odd labels descending, then even labels
/// descending), which makes every pair of non-adjacent edges interleave.
inline Drawing max_crossing_path(int n) {
  if (n < 4) throw std::invalid_argument("max_crossing_path needs n >= 4");
  GraphFamily fam = GraphFamily::path(n);
  std::vector<int> order;
  for (int v = n; v >= 1; --v)
    if (v % 2 == 1) order.push_back(v);
  for (int v = n; v >= 1; --v)
    if (v % 2 == 0) order.push_back(v);
  const long want = max_crossing_bound(fam);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<Point2> pos(static_cast<size_t>(n));
    for (int slot = 0; slot < n; ++slot) {
      long jitter_num = ((slot * slot + attempt * (slot + 3) * (slot + 3) * (slot + 3)) % 17) - 8;
      Rational u = Rational(slot + 1) + Rational(jitter_num, 103);
      pos[static_cast<size_t>(order[static_cast<size_t>(slot)] - 1)] = detail::unit_circle_point(u);
    }
    Drawing d(fam, std::move(pos));
    if (!validate_drawing(d).ok) continue;
    if (crossing_set_unchecked(d).size() == want) return d;
  }
  throw construction_failed("max_crossing_path");
}

/// Removes exactly one crossing from a path drawing: the terminal vertex of
/// the deepest crossed edge slides just past the crossing nearest to it, and
/// the uncrossed tail is rebuilt on a tiny convex arc next to the landing
/// point.  The output's crossing set is the input's minus that one pair.
inline Drawing uncross_step(const Drawing& d) {
  if (d.family.kind != Kind::Path) throw family_not_supported("uncross_step");
  const GraphFamily& fam = d.family;
  CrossingSet x = crossing_set(d);
  if (x.empty()) throw no_crossings{};

  std::vector<int> cr(static_cast<size_t>(fam.edge_count()), 0);
  for (const auto& p : x.pairs()) {
    ++cr[static_cast<size_t>(p.a)];
    ++cr[static_cast<size_t>(p.b)];
  }
  int deepest = -1;
  for (int e = 0; e < fam.edge_count(); ++e)
    if (cr[static_cast<size_t>(e)] > 0) deepest = e;

  const Point2 a = d.at(deepest + 1);  // fixed end
  const Point2 b = d.at(deepest + 2);  // terminal-side end
  // crossing parameters along a -> b
  struct Event {
    Rational t;
    EdgePair pair;
  };
  std::vector<Event> events;
  auto es = fam.edges();
  for (const auto& p : x.pairs()) {
    if (p.a != deepest && p.b != deepest) continue;
    int other = p.a == deepest ? p.b : p.a;
    Point2 q = line_intersection(a, b, d.at(es[static_cast<size_t>(other)].first),
                                 d.at(es[static_cast<size_t>(other)].second));
    Rational dxv = b.x - a.x, dyv = b.y - a.y;
    Rational t = (dxv * (q.x - a.x) + dyv * (q.y - a.y)) / (dxv * dxv + dyv * dyv);
    events.push_back({t, p});
  }
  std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) { return l.t < r.t; });
  const EdgePair removed = events.back().pair;
  const Rational t_hi = events.back().t;
  const Rational t_lo = events.size() > 1 ? events[events.size() - 2].t : Rational(0);

  CrossingSet expected([&] {
    std::vector<EdgePair> keep;
    for (const auto& p : x.pairs())
      if (!(p == removed)) keep.push_back(p);
    return keep;
  }());

  const Rational dxv = b.x - a.x, dyv = b.y - a.y;
  // landing weights and tail scales tried in a fixed order until the exact
  // checks pass; only degenerate coincidences reject a choice
  static const std::pair<int, int> kWeights[] = {{1, 2}, {1, 3}, {2, 3}, {1, 5}, {4, 5}, {3, 7}};
  for (auto [wn, wd] : kWeights) {
    Rational tstar = t_lo + Rational(wn, wd) * (t_hi - t_lo);
    Point2 q0{a.x + tstar * dxv, a.y + tstar * dyv};
    for (int m = 6; m <= 48; m += 6) {
      Rational eps(1, BigInt(1) << m);
      std::vector<Point2> pos = d.positions;
      pos[static_cast<size_t>(deepest + 1)] = q0;
      for (int j = 1; deepest + 2 + j <= fam.n; ++j) {
        Rational s = Rational(j) * eps;
        pos[static_cast<size_t>(deepest + 1 + j)] =
            Point2{q0.x - s * dxv + s * s * (-dyv), q0.y - s * dyv + s * s * dxv};
      }
      Drawing cand(fam, std::move(pos));
      if (!validate_drawing(cand).ok) continue;
      if (crossing_set_unchecked(cand) == expected) return cand;
    }
  }
  throw construction_failed("uncross_step");
}

/// The circle-and-tangents chain template: apex vertex 1 above a circle,
/// vertices 2..n on it.  H_3 has hull size 3; each step slides the current
/// rightmost upper vertex to a marked lower-arc point and shifts the others
/// one spot clockwise, growing the hull by one vertex and only ever adding
/// crossings.  Returns H_3 .. H_n.
inline std::vector<Drawing> clique_chain_template(int n) {
  if (n < 3) throw std::invalid_argument("clique_chain_template needs n >= 3");
  GraphFamily fam = GraphFamily::clique(n);
  const Point2 apex{Rational(0), Rational(3)};
  const Rational u_left(18, 5), u_right(3, 10);

  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Point2> spots(static_cast<size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
      Rational u = u_left + (u_right - u_left) * Rational(i - 1, n - 2 > 0 ? n - 2 : 1);
      if (i != 1 && i != n - 1) {
        long jn = ((i * i + attempt * i * 7) % 11) - 5;
        u += Rational(jn, 997);
      }
      spots[static_cast<size_t>(i - 1)] = detail::chain_circle_point(u);
    }
    std::vector<Point2> marks(static_cast<size_t>(n));  // marks[k] for k = 2..n-2
    for (int k = 2; k <= n - 2; ++k)
      marks[static_cast<size_t>(k)] =
          detail::chain_circle_second_intersection(apex, spots[static_cast<size_t>(k - 1)]);

    std::vector<Drawing> out;
    bool ok = true;
    for (int t = 0; t <= n - 3 && ok; ++t) {
      std::vector<Point2> pos(static_cast<size_t>(n));
      pos[0] = apex;
      pos[static_cast<size_t>(n - 1)] = spots[0];
      for (int i = 2; i <= n - 1 - t; ++i)
        pos[static_cast<size_t>(i - 1)] = spots[static_cast<size_t>(i + t - 1)];
      for (int j = 1; j <= t; ++j)
        pos[static_cast<size_t>(n - j - 1)] = marks[static_cast<size_t>(j + 1)];
      Drawing h(fam, std::move(pos));
      if (!validate_drawing(h).ok) {
        ok = false;
        break;
      }
      out.push_back(std::move(h));
    }
    if (ok) return out;
  }
  throw construction_failed("clique_chain_template");
}

}  // namespace geoposet
