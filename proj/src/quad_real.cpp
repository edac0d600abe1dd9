#include "secantq/quad_real.hpp"

#include "secantq/errors.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace secantq {

std::string to_string(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int sign_linear_radical(const Rat& a, const Rat& b, const Int& d) {
  if (b == 0 || d == 0) return sign_of(a);
  if (a == 0) return sign_of(b);
  int sa = sign_of(a);
  int sb = sign_of(b);
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by squaring.
  int s = sign_of(a * a - b * b * Rat(d));
  return s == 0 ? 0 : sa * s;
}

int sign_two_radicals(const Rat& a, const Rat& b, const Int& u, const Rat& c,
                      const Int& v) {
  if (c == 0 || v == 0) return sign_linear_radical(a, b, u);
  if (b == 0 || u == 0) return sign_linear_radical(a, c, v);
  if (u == v) return sign_linear_radical(a, b + c, u);
  // X = a + b*sqrt(u), Y = c*sqrt(v). sign(X + Y) by comparing X^2 and Y^2
  // when the parts disagree in sign.
  int sx = sign_linear_radical(a, b, u);
  int sy = sign_of(c);
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // X^2 - Y^2 = (a^2 + b^2 u - c^2 v) + 2ab*sqrt(u)
  int s = sign_linear_radical(a * a + b * b * Rat(u) - c * c * Rat(v),
                              2 * a * b, u);
  return s == 0 ? 0 : sx * s;
}

ExtScalar::ExtScalar(Rat a, Rat b, Int d)
    : a(std::move(a)), b(std::move(b)), d(std::move(d)) {
  if (this->b == 0) this->d = 0;
  if (this->d == 0) this->b = 0;
}

namespace {

const Int& merge_fields(const Int& d1, const Int& d2) {
  if (d1 == 0) return d2;
  if (d2 == 0) return d1;
  if (d1 != d2)
    throw SqError("ExtScalar: mixing distinct quadratic extensions");
  return d1;
}

}  // namespace

ExtScalar ExtScalar::operator+(const ExtScalar& o) const {
  return {a + o.a, b + o.b, merge_fields(d, o.d)};
}

ExtScalar ExtScalar::operator-(const ExtScalar& o) const {
  return {a - o.a, b - o.b, merge_fields(d, o.d)};
}

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
  const Int& dd = merge_fields(d, o.d);
  return {a * o.a + b * o.b * Rat(dd), a * o.b + b * o.a, dd};
}

QuadReal::QuadReal(Int p, Int q, Int r, Int d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  if (r_ == 0) throw SqError("QuadReal: zero denominator");
  if (d_ < 0) throw SqError("QuadReal: negative radicand");
  canonicalize();
}

QuadReal::QuadReal(const Rat& v)
    : p_(boost::multiprecision::numerator(v)),
      q_(0),
      r_(boost::multiprecision::denominator(v)),
      d_(0) {
  canonicalize();
}

void QuadReal::canonicalize() {
  using boost::multiprecision::gcd;
  using boost::multiprecision::sqrt;
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 0;
  } else {
    // Pull square factors out of the radicand: small primes, then a full
    // perfect-square test on the remainder.
    static const int kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                       31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                       73, 79, 83, 89, 97, 101, 103, 107};
    for (int prime : kSmallPrimes) {
      Int sq = Int(prime) * prime;
      while (d_ % sq == 0) {
        d_ /= sq;
        q_ *= prime;
      }
    }
    Int root = sqrt(d_);
    if (root * root == d_) {
      q_ *= root;
      d_ = 1;
    }
    if (d_ == 1) {
      p_ += q_;
      q_ = 0;
      d_ = 0;
    }
  }
  if (r_ < 0) {
    r_ = -r_;
    p_ = -p_;
    q_ = -q_;
  }
  Int g = gcd(gcd(abs(p_), abs(q_)), r_);
  if (g > 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
}

Rat QuadReal::as_rational() const {
  if (!is_rational()) throw SqError("QuadReal: not rational");
  return Rat(p_, r_);
}

ExtScalar QuadReal::as_ext() const { return {Rat(p_, r_), Rat(q_, r_), d_}; }

int QuadReal::cmp(const QuadReal& o) const {
  // this - o = (p r' - p' r) + q r' sqrt(d) - q' r sqrt(d'), over r r' > 0.
  return sign_two_radicals(Rat(p_ * o.r_ - o.p_ * r_), Rat(q_ * o.r_), d_,
                           Rat(-o.q_ * r_), o.d_);
}

int QuadReal::cmp(const Rat& o) const {
  ExtScalar diff = as_ext() - ExtScalar(o);
  return diff.sign();
}

double QuadReal::approx() const {
  double num = static_cast<double>(p_) +
               static_cast<double>(q_) * std::sqrt(static_cast<double>(d_));
  return num / static_cast<double>(r_);
}

std::string QuadReal::to_string() const {
  std::ostringstream os;
  os << p_ << "/" << r_;
  if (q_ != 0) os << "+" << q_ << "*sqrt(" << d_ << ")/" << r_;
  return os.str();
}

QuadraticRoots solve_quadratic(const Rat& A, const Rat& B, const Rat& C) {
  QuadraticRoots out;
  if (A == 0) {
    if (B == 0) {
      out.kind = C == 0 ? QuadraticRoots::Kind::IdenticallyZero
                        : QuadraticRoots::Kind::NoRoot;
      return out;
    }
    out.kind = QuadraticRoots::Kind::OneRoot;
    out.first = QuadReal(Rat(-C / B));
    return out;
  }
  Rat disc = B * B - 4 * A * C;
  int s = sign_of(disc);
  if (s < 0) {
    out.kind = QuadraticRoots::Kind::NoRoot;
    return out;
  }
  // Clear denominators so the discriminant is an integer radicand.
  using boost::multiprecision::denominator;
  using boost::multiprecision::lcm;
  using boost::multiprecision::numerator;
  Int scale = lcm(lcm(denominator(A), denominator(B)), denominator(C));
  Int a = numerator(Rat(A * scale));
  Int b = numerator(Rat(B * scale));
  Int c = numerator(Rat(C * scale));
  if (s == 0) {
    out.kind = QuadraticRoots::Kind::DoubleRoot;
    out.first = QuadReal(Rat(-b, 2 * a));
    return out;
  }
  Int delta = b * b - 4 * a * c;
  out.kind = QuadraticRoots::Kind::TwoRoots;
  QuadReal r1(-b, 1, 2 * a, delta);
  QuadReal r2(-b, -1, 2 * a, delta);
  if (r2 < r1) std::swap(r1, r2);
  out.first = std::move(r1);
  out.second = std::move(r2);
  return out;
}

ExtScalar eval_quadratic(const Rat& c2, const Rat& c1, const Rat& c0,
                         const QuadReal& t) {
  ExtScalar x = t.as_ext();
  return x * x * c2 + x * c1 + ExtScalar(c0);
}

}  // namespace secantq
