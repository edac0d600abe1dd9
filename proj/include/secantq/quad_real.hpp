#pragma once

#include "secantq/numeric.hpp"

#include <string>

namespace secantq {

// Sign of a + b*sqrt(d), d >= 0, computed exactly by squaring away the
// radical with sign bookkeeping.
int sign_linear_radical(const Rat& a, const Rat& b, const Int& d);

// Sign of a + b*sqrt(u) + c*sqrt(v), exactly.
int sign_two_radicals(const Rat& a, const Rat& b, const Int& u, const Rat& c,
                      const Int& v);

// An element a + b*sqrt(d) of a fixed real quadratic extension. Values with
// b == 0 are field-agnostic and combine with any d.
struct ExtScalar {
  Rat a;
  Rat b;
  Int d;

  ExtScalar() : a(0), b(0), d(0) {}
  explicit ExtScalar(Rat rational) : a(std::move(rational)), b(0), d(0) {}
  ExtScalar(Rat a, Rat b, Int d);

  ExtScalar operator+(const ExtScalar& o) const;
  ExtScalar operator-(const ExtScalar& o) const;
  ExtScalar operator*(const ExtScalar& o) const;
  ExtScalar operator*(const Rat& s) const { return {a * s, b * s, d}; }
  ExtScalar operator-() const { return {-a, -b, d}; }

  bool is_zero() const { return a == 0 && b == 0; }
  int sign() const { return sign_linear_radical(a, b, d); }
};

struct ExtVec2 {
  ExtScalar x;
  ExtScalar y;

  ExtVec2 operator-(const ExtVec2& o) const { return {x - o.x, y - o.y}; }
};

inline ExtScalar ext_det2(const ExtVec2& u, const ExtVec2& v) {
  return u.x * v.y - u.y * v.x;
}
inline ExtScalar ext_dot2(const ExtVec2& u, const ExtVec2& v) {
  return u.x * v.x + u.y * v.y;
}

// Exact real number (p + q*sqrt(d)) / r with integer p, q, r and d >= 0.
// Canonical form: r > 0, gcd(p, q, r) = 1, square factors pulled out of d,
// q == 0 implies d == 0. Ordering across different extensions is decided by
// exact sign-of-difference evaluation, never by representation.
class QuadReal {
 public:
  QuadReal() : p_(0), q_(0), r_(1), d_(0) {}
  QuadReal(Int p, Int q, Int r, Int d);
  explicit QuadReal(const Rat& v);

  static QuadReal from_rational(const Rat& v) { return QuadReal(v); }

  bool is_rational() const { return q_ == 0; }
  Rat as_rational() const;  // requires is_rational()

  // Value as an element of its own extension field.
  ExtScalar as_ext() const;

  int cmp(const QuadReal& o) const;
  int cmp(const Rat& o) const;
  bool operator==(const QuadReal& o) const { return cmp(o) == 0; }
  bool operator<(const QuadReal& o) const { return cmp(o) < 0; }

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& d() const { return d_; }

  double approx() const;
  std::string to_string() const;  // "<p>/<r>" or "<p>/<r>+<q>*sqrt(<d>)/<r>"

 private:
  void canonicalize();

  Int p_, q_, r_, d_;
};

struct QuadraticRoots {
  enum class Kind { IdenticallyZero, NoRoot, OneRoot, DoubleRoot, TwoRoots };
  Kind kind = Kind::NoRoot;
  // Real roots in increasing order (one entry for OneRoot/DoubleRoot).
  QuadReal first;
  QuadReal second;
};

// Exact real roots of A*t^2 + B*t + C.
QuadraticRoots solve_quadratic(const Rat& A, const Rat& B, const Rat& C);

// Evaluate c2*t^2 + c1*t + c0 at t exactly, inside t's extension field.
ExtScalar eval_quadratic(const Rat& c2, const Rat& c1, const Rat& c0,
                         const QuadReal& t);

}  // namespace secantq
