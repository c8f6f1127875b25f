#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace tilecover {

using Rational = boost::rational<std::int64_t>;

/// Exact element p + q*sqrt(3) of Q(sqrt 3). Every vertex coordinate of an
/// edge-to-edge tiling by unit regular 3-, 4-, 6- and 12-gons lies in this
/// field, so geometry checks need no tolerances.
class QuadExact {
 public:
  constexpr QuadExact() = default;
  QuadExact(Rational p, Rational q = Rational(0)) : p_(p), q_(q) {}
  QuadExact(std::int64_t p) : p_(p) {}

  static QuadExact sqrt3() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt3_part() const { return q_; }

  QuadExact& operator+=(const QuadExact& o) { p_ += o.p_; q_ += o.q_; return *this; }
  QuadExact& operator-=(const QuadExact& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
  QuadExact& operator*=(const QuadExact& o) {
    Rational p = p_ * o.p_ + 3 * q_ * o.q_;
    q_ = p_ * o.q_ + q_ * o.p_;
    p_ = p;
    return *this;
  }
  /// Throws std::domain_error on division by zero.
  QuadExact& operator/=(const QuadExact& o);

  friend QuadExact operator+(QuadExact x, const QuadExact& y) { return x += y; }
  friend QuadExact operator-(QuadExact x, const QuadExact& y) { return x -= y; }
  friend QuadExact operator*(QuadExact x, const QuadExact& y) { return x *= y; }
  friend QuadExact operator/(QuadExact x, const QuadExact& y) { return x /= y; }
  friend QuadExact operator-(const QuadExact& x) { return {-x.p_, -x.q_}; }

  friend bool operator==(const QuadExact& x, const QuadExact& y) { return x.p_ == y.p_ && x.q_ == y.q_; }

  /// -1, 0 or +1.
  int sign() const;
  friend std::strong_ordering operator<=>(const QuadExact& x, const QuadExact& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Conjugate p - q*sqrt(3).
  QuadExact conjugate() const { return {p_, -q_}; }
  bool is_integer() const { return q_ == Rational(0) && p_.denominator() == 1; }
  std::int64_t floor() const;
  double to_double() const;

 private:
  Rational p_{0};
  Rational q_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadExact& x);

/// A point of the plane with coordinates in Q(sqrt 3).
struct QuadPoint {
  QuadExact x;
  QuadExact y;

  friend QuadPoint operator+(const QuadPoint& a, const QuadPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend QuadPoint operator-(const QuadPoint& a, const QuadPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend QuadPoint operator*(const QuadExact& k, const QuadPoint& a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const QuadPoint&, const QuadPoint&) = default;
};

inline QuadExact dot(const QuadPoint& a, const QuadPoint& b) { return a.x * b.x + a.y * b.y; }
inline QuadExact cross(const QuadPoint& a, const QuadPoint& b) { return a.x * b.y - a.y * b.x; }
inline QuadExact norm2(const QuadPoint& a) { return dot(a, a); }

/// Unit vector at angle k * 30 degrees.
QuadPoint unit_direction(int k);

/// Total order used only for keyed containers (not geometric).
struct QuadPointKeyLess {
  bool operator()(const QuadPoint& a, const QuadPoint& b) const;
};

}  // namespace tilecover
