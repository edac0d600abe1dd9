#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace secantq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

struct Vec2 {
  Rat x;
  Rat y;

  Vec2() = default;
  Vec2(Rat x, Rat y) : x(std::move(x)), y(std::move(y)) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2& o) const = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

inline Rat det2(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }
inline Rat dot2(const Vec2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

// Counterclockwise quarter turn.
inline Vec2 perp(const Vec2& v) { return {-v.y, v.x}; }

std::string to_string(const Rat& v);

}  // namespace secantq
