#include "tilecover/quad_exact.hpp"

#include <stdexcept>
#include <tuple>

namespace tilecover {

namespace {

int rational_sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

QuadExact& QuadExact::operator/=(const QuadExact& o) {
  Rational n = o.p_ * o.p_ - 3 * o.q_ * o.q_;
  if (n == Rational(0)) throw std::domain_error("QuadExact division by zero");
  *this *= o.conjugate();
  p_ /= n;
  q_ /= n;
  return *this;
}

int QuadExact::sign() const {
  int sp = rational_sign(p_);
  int sq = rational_sign(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 with 3 q^2.
  Rational diff = p_ * p_ - 3 * q_ * q_;
  return rational_sign(diff) > 0 ? sp : sq;
}

std::int64_t QuadExact::floor() const {
  auto guess = static_cast<std::int64_t>(std::floor(to_double()));
  while (QuadExact(guess) > *this) --guess;
  while (QuadExact(guess + 1) <= *this) ++guess;
  return guess;
}

double QuadExact::to_double() const {
  return boost::rational_cast<double>(p_) + boost::rational_cast<double>(q_) * std::sqrt(3.0);
}

std::ostream& operator<<(std::ostream& os, const QuadExact& x) {
  os << x.rational_part();
  if (x.sqrt3_part() != Rational(0)) os << (x.sqrt3_part() > 0 ? "+" : "-") << abs(x.sqrt3_part()) << "*r3";
  return os;
}

QuadPoint unit_direction(int k) {
  const QuadExact half(Rational(1, 2));
  const QuadExact half_r3(Rational(0), Rational(1, 2));
  static const QuadPoint table[3] = {{1, 0}, {half_r3, half}, {half, half_r3}};
  int kk = ((k % 12) + 12) % 12;
  QuadPoint p = table[kk % 3];
  // Rotate by 90 degrees (kk / 3) times.
  for (int i = 0; i < kk / 3; ++i) p = {-p.y, p.x};
  return p;
}

bool QuadPointKeyLess::operator()(const QuadPoint& a, const QuadPoint& b) const {
  auto key = [](const QuadPoint& p) {
    return std::make_tuple(p.x.rational_part(), p.x.sqrt3_part(), p.y.rational_part(), p.y.sqrt3_part());
  };
  return key(a) < key(b);
}

}  // namespace tilecover
