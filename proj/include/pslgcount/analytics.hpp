#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pslgcount/detail/mpfr_value.hpp"
#include "pslgcount/rational.hpp"

namespace pslgcount {

// ---------------------------------------------------------------------------
// Transfer matrices
// ---------------------------------------------------------------------------

/// 2x2 integer matrix [[a, b], [c, d]].
struct Matrix2 {
  BigInt a, b, c, d;

  Matrix2 operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Matrix2 operator+(const Matrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  std::pair<BigInt, BigInt> apply(const BigInt& x, const BigInt& y) const { return {a * x + b * y, c * x + d * y}; }
  BigInt trace() const { return a + d; }
  friend bool operator==(const Matrix2& l, const Matrix2& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d;
  }
  static Matrix2 identity() { return {1, 0, 0, 1}; }
};

inline Matrix2 power(Matrix2 base, unsigned long e) {
  Matrix2 r = Matrix2::identity();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

struct TransferMatrix {
  Matrix2 entries;
  int level = 2;
};

/// M_2 = [[2,1],[1,1]], M_k = M_{k-1}^2 + [[1,0],[1,1]].
inline TransferMatrix transfer_matrix(int k) {
  if (k < 2) throw std::invalid_argument("transfer_matrix: k must be >= 2");
  Matrix2 m{2, 1, 1, 1};
  const Matrix2 bump{1, 0, 1, 1};
  for (int level = 3; level <= k; ++level) m = m * m + bump;
  return {m, k};
}

// ---------------------------------------------------------------------------
// Quadratic surds
// ---------------------------------------------------------------------------

/// (p + q*sqrt(r)) / s with s > 0, r square-free (or 0 together with q = 0),
/// gcd(p, q, s) = 1.
struct QuadraticSurd {
  BigInt p, q, r, s{1};
  /// False when r was too large to certify square-freeness by trial division.
  bool fully_reduced = true;

  std::string to_string() const { return p.get_str() + " " + q.get_str() + " " + r.get_str() + " " + s.get_str(); }
  friend bool operator==(const QuadraticSurd& l, const QuadraticSurd& r) {
    return l.p == r.p && l.q == r.q && l.r == r.r && l.s == r.s;
  }
};

namespace detail {

// r = f^2 * rest. Exact when every prime below cbrt(r) can be trial-divided within
// `max_divisor`; the cofactor then has at most two prime factors.
inline std::pair<BigInt, BigInt> split_square(BigInt r, bool& complete, unsigned long max_divisor = 1ul << 22) {
  BigInt f = 1;
  complete = true;
  if (r <= 1) return {f, r};
  BigInt cube_root;
  mpz_root(cube_root.get_mpz_t(), r.get_mpz_t(), 3);
  unsigned long bound = max_divisor;
  if (cube_root < max_divisor) bound = cube_root.get_ui() + 1;
  else complete = false;
  for (unsigned long d = 2; d <= bound && d * d <= r; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(r.get_mpz_t(), d * d)) {
      r /= d * d;
      f *= d;
    }
  }
  if (mpz_perfect_square_p(r.get_mpz_t())) {
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
    f *= root;
    r = 1;
  }
  return {f, r};
}

}  // namespace detail

inline QuadraticSurd make_surd(BigInt p, BigInt q, BigInt r, BigInt s) {
  if (s == 0) throw std::invalid_argument("make_surd: zero denominator");
  if (r < 0) throw std::invalid_argument("make_surd: negative radicand");
  QuadraticSurd out;
  if (q == 0 || r == 0) {
    q = 0;
    r = 0;
  } else {
    auto [f, rest] = detail::split_square(r, out.fully_reduced);
    q *= f;
    r = rest;
    if (r == 1) {
      p += q;
      q = 0;
      r = 0;
    }
  }
  if (s < 0) {
    p = -p;
    q = -q;
    s = -s;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  if (g > 1) {
    p /= g;
    q /= g;
    s /= g;
  }
  out.p = std::move(p);
  out.q = std::move(q);
  out.r = std::move(r);
  out.s = std::move(s);
  return out;
}

/// Largest eigenvalue of a 2x2 matrix with real spectrum:
/// (a + d + sqrt((a - d)^2 + 4bc)) / 2.
inline QuadraticSurd dominant_eigenvalue(const Matrix2& m) {
  BigInt diff = m.a - m.d;
  BigInt disc = diff * diff + 4 * m.b * m.c;
  if (disc < 0) throw std::invalid_argument("dominant_eigenvalue: complex spectrum");
  return make_surd(m.trace(), 1, disc, 2);
}

inline QuadraticSurd dominant_eigenvalue(const TransferMatrix& t) { return dominant_eigenvalue(t.entries); }

// ---------------------------------------------------------------------------
// Certified reals
// ---------------------------------------------------------------------------

/// A closed interval [lo, hi] known to contain the exact value.
struct CertifiedReal {
  detail::MpfrValue lo;
  detail::MpfrValue hi;

  double approx() const { return (lo.to_double() + hi.to_double()) / 2; }

  /// Decimal rounded to `digits` places, certified: both ends must round alike.
  std::optional<std::string> rounded(int digits) const {
    auto a = lo.to_fixed(digits), b = hi.to_fixed(digits);
    if (a != b) return std::nullopt;
    return a;
  }

  /// Digits of the lower end, truncated: every printed digit is certified when the
  /// enclosure is narrower than one unit in the last place.
  std::string truncated(int digits) const { return lo.to_fixed(digits, MPFR_RNDD); }

  bool width_below_pow2(long bits) const {
    detail::MpfrValue w(mpfr_get_prec(hi.get()) + 8);
    mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
    return mpfr_cmp_ui_2exp(w.get(), 1, -bits) < 0;
  }
};

namespace detail {

// Evaluates a nonnegative surd with directed rounding.
inline void eval_surd(mpfr_ptr out, const QuadraticSurd& x, mpfr_rnd_t rnd) {
  if (x.p < 0 || x.q < 0) throw std::invalid_argument("eval_surd: expects nonnegative p and q");
  mpfr_prec_t prec = mpfr_get_prec(out);
  MpfrValue t(prec);
  mpfr_set_z(t.get(), x.r.get_mpz_t(), rnd);
  mpfr_sqrt(t.get(), t.get(), rnd);
  mpfr_mul_z(t.get(), t.get(), x.q.get_mpz_t(), rnd);
  mpfr_add_z(t.get(), t.get(), x.p.get_mpz_t(), rnd);
  mpfr_div_z(out, t.get(), x.s.get_mpz_t(), rnd);
}

}  // namespace detail

/// lambda(M_k)^(1 / 2^(k-1)) enclosed to width below 2^-precision_bits.
inline CertifiedReal growth_rate(int k, long precision_bits) {
  if (precision_bits < 1) throw std::invalid_argument("growth_rate: precision must be positive");
  const QuadraticSurd lambda = dominant_eigenvalue(transfer_matrix(k));
  for (mpfr_prec_t w = precision_bits + 32;; w *= 2) {
    CertifiedReal out{detail::MpfrValue(w), detail::MpfrValue(w)};
    detail::eval_surd(out.lo.get(), lambda, MPFR_RNDD);
    detail::eval_surd(out.hi.get(), lambda, MPFR_RNDU);
    for (int i = 0; i < k - 1; ++i) {
      mpfr_sqrt(out.lo.get(), out.lo.get(), MPFR_RNDD);
      mpfr_sqrt(out.hi.get(), out.hi.get(), MPFR_RNDU);
    }
    if (out.width_below_pow2(precision_bits)) return out;
  }
}

/// Real root of x^3 - x^2 - x - 1 (the tribonacci constant), by exact bisection.
inline std::pair<Rational, Rational> tribonacci_root(long precision_bits) {
  if (precision_bits < 1) throw std::invalid_argument("tribonacci_root: precision must be positive");
  auto f = [](const Rational& x) -> Rational { return x * x * x - x * x - x - 1; };
  Rational lo = 1, hi = 2;  // f(1) < 0 < f(2)
  // f' <= 7 on [1,2]; the extra bits make the residual at any enclosed point < 2^-precision.
  for (long i = 0; i < precision_bits + 3; ++i) {
    Rational mid = (lo + hi) / 2;
    (sgn(f(mid)) < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

inline Rational tribonacci_residual(const Rational& x) { return x * x * x - x * x - x - 1; }

/// Golden ratio enclosure (for growth comparisons).
inline CertifiedReal golden_ratio(long precision_bits) {
  CertifiedReal out{detail::MpfrValue(precision_bits + 16), detail::MpfrValue(precision_bits + 16)};
  detail::eval_surd(out.lo.get(), make_surd(1, 1, 5, 2), MPFR_RNDD);
  detail::eval_surd(out.hi.get(), make_surd(1, 1, 5, 2), MPFR_RNDU);
  return out;
}

// ---------------------------------------------------------------------------
// Integer sequences and bounds
// ---------------------------------------------------------------------------

/// F(1) = F(2) = 1.
inline Count fibonacci(long n) {
  if (n < 1) throw std::invalid_argument("fibonacci: n must be >= 1");
  Count f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

/// B(1) = B(2) = 1, B(3) = 2, B(i) = B(i-1) + B(i-2) + B(i-3).
inline std::vector<Count> tribonacci_sequence(long n) {
  if (n < 1) throw std::invalid_argument("tribonacci_bound: n must be >= 1");
  std::vector<Count> b{1, 1, 2};
  while (static_cast<long>(b.size()) < n) b.push_back(b[b.size() - 1] + b[b.size() - 2] + b[b.size() - 3]);
  b.resize(n);
  return b;
}

inline Count tribonacci_bound(long n) { return tribonacci_sequence(n).back(); }

/// Sum of B(i) for i = 1..n.
inline Count tribonacci_bound_sum(long n) {
  Count s = 0;
  for (const auto& v : tribonacci_sequence(n)) s += v;
  return s;
}

/// Upper bound on the number of x-monotone paths (>= 1 edge) in an n-vertex graph
/// whose out-edges from each vertex reach distances at least 1, 2, 3: the number of
/// paths starting at the i-th vertex from the right, empty path included, is at most
/// B(1) + ... + B(i).
inline Count monotone_total_bound(long n) {
  Count total = 0, prefix = 0;
  for (const auto& v : tribonacci_sequence(n)) {
    prefix += v;
    total += prefix - 1;
  }
  return total;
}

/// Lower bound on star-shaped polygons of an n-vertex triangulation with k interior
/// vertices: 3n + 4k - 14 + 2(k-3)^2 / n.
inline Rational star_lb_bound(long n, long k) {
  if (n < 3 || k < 0 || k > n - 3) throw std::invalid_argument("star_lb_bound: need n >= 3 and 0 <= k <= n-3");
  Rational v = Rational(3 * n + 4 * k - 14) + Rational(2 * (k - 3) * (k - 3), n);
  v.canonicalize();
  return v;
}

struct DirectedPathBound {
  Count product_bound;  // ceil((3n/l)^l)
  Count global_cap;     // n^2 * 3^n
};

inline DirectedPathBound directed_path_bound(long n, long l) {
  if (l < 1 || l > n) throw std::invalid_argument("directed_path_bound: need 1 <= l <= n");
  Rational base(3 * n, l);
  base.canonicalize();
  Rational p = 1;
  for (long i = 0; i < l; ++i) p *= base;
  return {ceil(p), BigInt(n) * BigInt(n) * pow_ui(3, static_cast<unsigned long>(n))};
}

/// Natural log of a positive big integer.
inline double log_count(const Count& c) {
  if (sgn(c) <= 0) throw std::invalid_argument("log_count: count must be positive");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, c.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

/// exp of the least-squares slope of log(count) against n. Diagnostic only.
inline double estimate_growth(const std::vector<long>& sizes, const std::vector<Count>& counts) {
  if (sizes.size() != counts.size() || sizes.size() < 3)
    throw std::invalid_argument("estimate_growth: need at least 3 (n, count) pairs");
  const double m = static_cast<double>(sizes.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double x = static_cast<double>(sizes[i]), y = log_count(counts[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("estimate_growth: sizes must not all be equal");
  return std::exp((m * sxy - sx * sy) / denom);
}

}  // namespace pslgcount
