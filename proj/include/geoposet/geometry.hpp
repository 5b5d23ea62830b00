#pragma once

#include "geoposet/rational.hpp"

#include <optional>
#include <vector>

namespace geoposet {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

enum class Orient { CW = -1, Collinear = 0, CCW = 1 };

namespace detail {

// sign of (a/ad)*(d/dd) - (b/bd)*(c/cd) with all denominators positive
inline int cross_sign(const BigInt& a, const BigInt& ad, const BigInt& b, const BigInt& bd,
                      const BigInt& c, const BigInt& cd, const BigInt& d, const BigInt& dd) {
  BigInt lhs = a * d * bd * cd;
  BigInt rhs = b * c * ad * dd;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace detail

/// Sign of the 2x2 determinant of (q-p, r-p): CCW left turn, CW right turn.
inline Orient orientation(const Point2& p, const Point2& q, const Point2& r) {
  const Rational &px = p.x, &py = p.y, &qx = q.x, &qy = q.y, &rx = r.x, &ry = r.y;
  // common-denominator fast path (grid points, fixed-denominator samples)
  if (px.den() == qx.den() && qx.den() == rx.den() && px.den() == py.den() &&
      py.den() == qy.den() && qy.den() == ry.den()) {
    BigInt det = (qx.num() - px.num()) * (ry.num() - py.num()) -
                 (rx.num() - px.num()) * (qy.num() - py.num());
    return static_cast<Orient>(det.sign());
  }
  // (qx-px)(ry-py) - (rx-px)(qy-py), tracked as unreduced num/den pairs
  BigInt a = qx.num() * px.den() - px.num() * qx.den();
  BigInt ad = qx.den() * px.den();
  BigInt b = rx.num() * px.den() - px.num() * rx.den();
  BigInt bd = rx.den() * px.den();
  BigInt c = qy.num() * py.den() - py.num() * qy.den();
  BigInt cd = qy.den() * py.den();
  BigInt d = ry.num() * py.den() - py.num() * ry.den();
  BigInt dd = ry.den() * py.den();
  return static_cast<Orient>(detail::cross_sign(a, ad, c, cd, b, bd, d, dd));
}

inline bool collinear(const Point2& p, const Point2& q, const Point2& r) {
  return orientation(p, q, r) == Orient::Collinear;
}

/// True iff the open segments (a,b) and (c,d) meet in exactly one interior
/// point.  Callers only pass segments with four distinct endpoints; touching
/// at an endpoint (or any collinearity) reports false.
inline bool proper_cross(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  int o1 = static_cast<int>(orientation(a, b, c));
  int o2 = static_cast<int>(orientation(a, b, d));
  if (o1 * o2 >= 0) return false;
  int o3 = static_cast<int>(orientation(c, d, a));
  int o4 = static_cast<int>(orientation(c, d, b));
  return o3 * o4 < 0;
}

/// Intersection point of the (non-parallel) supporting lines of ab and cd.
inline Point2 line_intersection(const Point2& a, const Point2& b, const Point2& c,
                                const Point2& d) {
  Rational a1 = b.y - a.y, b1 = a.x - b.x;
  Rational c1 = a1 * a.x + b1 * a.y;
  Rational a2 = d.y - c.y, b2 = c.x - d.x;
  Rational c2 = a2 * c.x + b2 * c.y;
  Rational det = a1 * b2 - a2 * b1;
  return Point2{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

struct collinear_input : std::runtime_error {
  collinear_input() : std::runtime_error("input points contain a collinear triple") {}
};

/// Number of points on the convex hull boundary.  Under general position
/// every hull point is a hull vertex, so this is the hull vertex count.
inline int convex_hull_vertex_count(const std::vector<Point2>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (collinear(pts[i], pts[j], pts[k])) throw collinear_input{};
  int on_hull = 0;
  for (int i = 0; i < n; ++i) {
    bool interior = false;
    for (int a = 0; a < n && !interior; ++a) {
      if (a == i) continue;
      for (int b = a + 1; b < n && !interior; ++b) {
        if (b == i) continue;
        for (int c = b + 1; c < n && !interior; ++c) {
          if (c == i) continue;
          auto o1 = orientation(pts[a], pts[b], pts[i]);
          auto o2 = orientation(pts[b], pts[c], pts[i]);
          auto o3 = orientation(pts[c], pts[a], pts[i]);
          interior = (o1 == o2 && o2 == o3);
        }
      }
    }
    if (!interior) ++on_hull;
  }
  return on_hull;
}

inline bool convex_position(const std::vector<Point2>& pts) {
  return convex_hull_vertex_count(pts) == static_cast<int>(pts.size());
}

}  // namespace geoposet
