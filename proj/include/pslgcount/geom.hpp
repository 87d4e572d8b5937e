#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pslgcount/detail/mpfr_value.hpp"
#include "pslgcount/rational.hpp"

namespace pslgcount {

struct Vec2 {
  Rational dx;
  Rational dy;

  bool is_zero() const { return sgn(dx) == 0 && sgn(dy) == 0; }
  Vec2 operator-() const { return {-dx, -dy}; }
  Vec2 operator+(const Vec2& o) const { return {dx + o.dx, dy + o.dy}; }
  Vec2 operator*(const Rational& s) const { return {dx * s, dy * s}; }
  /// Rotation by +90 degrees.
  Vec2 perp() const { return {-dy, dx}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.dx == b.dx && a.dy == b.dy; }
};

struct Point {
  Rational x;
  Rational y;

  Vec2 operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator+(const Vec2& v) const { return {x + v.dx, y + v.dy}; }
  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  /// Lexicographic (x, then y).
  friend bool operator<(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    return c != 0 ? c < 0 : a.y < b.y;
  }
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << format_rational(p.x) << ", " << format_rational(p.y) << ')';
}

/// The open half-plane {p : a*p.x + b*p.y + c > 0}.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;

  bool contains(const Point& p) const { return sgn(a * p.x + b * p.y + c) > 0; }

  /// Open half-plane strictly to the left of the directed line p -> q.
  static HalfPlane left_of(const Point& p, const Point& q) {
    Rational a = -(q.y - p.y);
    Rational b = q.x - p.x;
    Rational c = -(a * p.x) - b * p.y;
    return {std::move(a), std::move(b), std::move(c)};
  }
};

enum class Orientation { CW = -1, COLLINEAR = 0, CCW = 1 };

inline Rational cross(const Vec2& u, const Vec2& v) { return u.dx * v.dy - u.dy * v.dx; }
inline Rational dot(const Vec2& u, const Vec2& v) { return u.dx * v.dx + u.dy * v.dy; }

inline Orientation orient(const Point& p, const Point& q, const Point& r) {
  int s = sgn(cross(q - p, r - p));
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::COLLINEAR);
}

inline int dot_sign(const Vec2& u, const Vec2& v) { return sgn(dot(u, v)); }

/// Strict angular order of nonzero directions, starting at angle 0 (positive x axis)
/// and increasing counter-clockwise. Parallel same-sense vectors compare equal.
inline bool angle_less(const Vec2& u, const Vec2& v) {
  auto half = [](const Vec2& w) { return (sgn(w.dy) > 0 || (sgn(w.dy) == 0 && sgn(w.dx) > 0)) ? 0 : 1; };
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(cross(u, v)) > 0;
}

inline bool same_direction(const Vec2& u, const Vec2& v) {
  return sgn(cross(u, v)) == 0 && dot_sign(u, v) > 0;
}

// ---------------------------------------------------------------------------
// Segment classification
// ---------------------------------------------------------------------------

enum class SegmentRelation { DISJOINT, SHARED_ENDPOINT, CROSSING, OVERLAPPING, TOUCHING };

inline const char* to_string(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::DISJOINT: return "DISJOINT";
    case SegmentRelation::SHARED_ENDPOINT: return "SHARED_ENDPOINT";
    case SegmentRelation::CROSSING: return "CROSSING";
    case SegmentRelation::OVERLAPPING: return "OVERLAPPING";
    case SegmentRelation::TOUCHING: return "TOUCHING";
  }
  return "?";
}

struct Segment {
  Point a;
  Point b;
};

/// r lies on the closed segment [p,q], given that p, q, r are collinear.
inline bool within_box(const Point& p, const Point& q, const Point& r) {
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

/// r lies strictly inside segment (p,q).
inline bool strictly_inside_segment(const Point& p, const Point& q, const Point& r) {
  return orient(p, q, r) == Orientation::COLLINEAR && within_box(p, q, r) && !(r == p) && !(r == q);
}

inline SegmentRelation segment_relation(const Segment& s1, const Segment& s2) {
  if (s1.a == s1.b || s2.a == s2.b) throw std::invalid_argument("segment_relation: degenerate segment");
  const Point &p1 = s1.a, &p2 = s1.b, &q1 = s2.a, &q2 = s2.b;

  const bool same_a = p1 == q1 || p1 == q2;
  const bool same_b = p2 == q1 || p2 == q2;
  if (same_a && same_b) return SegmentRelation::OVERLAPPING;
  if (same_a || same_b) {
    const Point& shared = same_a ? p1 : p2;
    const Point& mine = same_a ? p2 : p1;
    const Point& theirs = (q1 == shared) ? q2 : q1;
    Vec2 u = mine - shared, v = theirs - shared;
    if (sgn(cross(u, v)) == 0 && dot_sign(u, v) > 0) return SegmentRelation::OVERLAPPING;
    return SegmentRelation::SHARED_ENDPOINT;
  }

  Orientation o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  Orientation o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);

  if (o1 == Orientation::COLLINEAR && o2 == Orientation::COLLINEAR) {
    // Collinear with no shared endpoint: either disjoint or overlapping with positive length.
    if (within_box(p1, p2, q1) || within_box(p1, p2, q2) || within_box(q1, q2, p1))
      return SegmentRelation::OVERLAPPING;
    return SegmentRelation::DISJOINT;
  }
  if (o1 != Orientation::COLLINEAR && o2 != Orientation::COLLINEAR && o3 != Orientation::COLLINEAR &&
      o4 != Orientation::COLLINEAR) {
    return (o1 != o2 && o3 != o4) ? SegmentRelation::CROSSING : SegmentRelation::DISJOINT;
  }
  if ((o1 == Orientation::COLLINEAR && within_box(p1, p2, q1)) ||
      (o2 == Orientation::COLLINEAR && within_box(p1, p2, q2)) ||
      (o3 == Orientation::COLLINEAR && within_box(q1, q2, p1)) ||
      (o4 == Orientation::COLLINEAR && within_box(q1, q2, p2)))
    return SegmentRelation::TOUCHING;
  return SegmentRelation::DISJOINT;
}

// ---------------------------------------------------------------------------
// Certified comparison of an angle against pi / 2^m
// ---------------------------------------------------------------------------

enum class AngleComparison { LESS, EQUAL, GREATER };

/// Compares the angle at `apex` between rays to p and q with pi/2^m.
/// For m >= 3, tan(pi/2^m) is irrational, so the interval refinement always separates.
inline AngleComparison compare_angle_dyadic(const Point& apex, const Point& p, const Point& q, unsigned m) {
  if (m == 0) throw std::invalid_argument("compare_angle_dyadic: m must be positive");
  if (p == apex || q == apex) throw std::invalid_argument("compare_angle_dyadic: ray endpoint equals apex");
  const Vec2 u = p - apex, v = q - apex;
  Rational cr = abs(cross(u, v));
  const Rational dt = dot(u, v);

  if (sgn(dt) == 0) return m == 1 ? AngleComparison::EQUAL : AngleComparison::GREATER;
  if (sgn(dt) < 0) return AngleComparison::GREATER;  // angle > pi/2 >= pi/2^m
  if (sgn(cr) == 0) return AngleComparison::LESS;     // zero angle
  if (m == 1) return AngleComparison::LESS;
  const Rational tangent = cr / dt;
  if (m == 2) {
    int c = cmp(tangent, Rational(1));
    return c < 0 ? AngleComparison::LESS : (c == 0 ? AngleComparison::EQUAL : AngleComparison::GREATER);
  }

  for (mpfr_prec_t bits = 64; bits <= (mpfr_prec_t(1) << 20); bits *= 2) {
    detail::MpfrValue lo(bits), hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    mpfr_div_2ui(lo.get(), lo.get(), m, MPFR_RNDD);
    mpfr_div_2ui(hi.get(), hi.get(), m, MPFR_RNDU);
    // tan is increasing on (0, pi/2), so these bracket tan(pi/2^m).
    mpfr_tan(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_tan(hi.get(), hi.get(), MPFR_RNDU);
    if (mpfr_cmp_q(lo.get(), tangent.get_mpq_t()) > 0) return AngleComparison::LESS;
    if (mpfr_cmp_q(hi.get(), tangent.get_mpq_t()) < 0) return AngleComparison::GREATER;
  }
  throw std::runtime_error("compare_angle_dyadic: precision limit reached without separation");
}

/// True iff angle(p, apex, q) < pi/2^m. An exact tie is reported through
/// compare_angle_dyadic; here it counts as "not less".
inline bool angle_less_than_dyadic(const Point& apex, const Point& p, const Point& q, unsigned m) {
  return compare_angle_dyadic(apex, p, q, m) == AngleComparison::LESS;
}

// ---------------------------------------------------------------------------
// Open half-plane intersection (exact two-variable Fourier-Motzkin)
// ---------------------------------------------------------------------------

namespace detail {

// Strict bounds on one variable: lo < t < hi, either side possibly absent.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  void raise_lo(const Rational& v) {
    if (!lo || v > *lo) lo = v;
  }
  void lower_hi(const Rational& v) {
    if (!hi || v < *hi) hi = v;
  }
  bool empty() const { return lo && hi && *lo >= *hi; }
  Rational pick() const {
    if (lo && hi) return (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    if (hi) return *hi - 1;
    return Rational(0);
  }
};

// A line y = slope * x + offset.
struct LineFn {
  Rational slope;
  Rational offset;
  Rational at(const Rational& x) const { return slope * x + offset; }
};

}  // namespace detail

/// A point strictly inside every open half-plane, or nullopt if their
/// intersection is empty.
inline std::optional<Point> halfplane_intersection_witness(std::span<const HalfPlane> hs) {
  if (hs.empty()) throw std::invalid_argument("halfplane_intersection_witness: empty list");
  std::vector<detail::LineFn> lowers, uppers;  // y > lower(x), y < upper(x)
  detail::OpenInterval xr;
  bool infeasible = false;

  auto add_x_constraint = [&](const Rational& a, const Rational& c) {  // a*x + c > 0
    int s = sgn(a);
    if (s == 0) {
      if (sgn(c) <= 0) infeasible = true;
    } else if (s > 0) {
      xr.raise_lo(-c / a);
    } else {
      xr.lower_hi(-c / a);
    }
  };

  for (const auto& h : hs) {
    if (sgn(h.a) == 0 && sgn(h.b) == 0) throw std::invalid_argument("halfplane: (a,b) = (0,0)");
    int sb = sgn(h.b);
    if (sb == 0) {
      add_x_constraint(h.a, h.c);
    } else {
      detail::LineFn f{-h.a / h.b, -h.c / h.b};
      (sb > 0 ? lowers : uppers).push_back(std::move(f));
    }
  }
  for (const auto& l : lowers)
    for (const auto& u : uppers) add_x_constraint(u.slope - l.slope, u.offset - l.offset);
  if (infeasible || xr.empty()) return std::nullopt;

  Rational x = xr.pick();
  detail::OpenInterval yr;
  for (const auto& l : lowers) yr.raise_lo(l.at(x));
  for (const auto& u : uppers) yr.lower_hi(u.at(x));
  if (yr.empty()) return std::nullopt;  // unreachable when the elimination is exact
  return Point{x, yr.pick()};
}

inline std::optional<Point> halfplane_intersection_witness(const std::vector<HalfPlane>& hs) {
  return halfplane_intersection_witness(std::span<const HalfPlane>(hs));
}

}  // namespace pslgcount
