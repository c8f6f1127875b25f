#include "tilecover/lattice.hpp"

#include <numeric>
#include <sstream>

namespace tilecover {

namespace {

Int floor_div(Int p, Int q) {
  Int r = p / q;
  if ((p % q != 0) && ((p < 0) != (q < 0))) --r;
  return r;
}

Int floor_mod(Int p, Int q) { return p - q * floor_div(p, q); }

void require_nonsingular(const IntMatrix2& m) {
  if (m.det() == 0) throw SingularMatrix();
}

}  // namespace

int PointSymmetry::order() const {
  IntMatrix2 power = matrix;
  for (int k = 1; k <= 12; ++k) {
    if (power == IntMatrix2::identity()) return k;
    power = power * matrix;
  }
  return 0;
}

SublatticeHNF hnf(const IntMatrix2& m) {
  require_nonsingular(m);
  // Column operations only: clear the lower-left entry with an extended gcd
  // on the bottom row.
  Vec2i c0 = m.column(0);
  Vec2i c1 = m.column(1);
  while (c0.y != 0) {
    Int q = c1.y / c0.y;
    c1 = c1 - q * c0;
    std::swap(c0, c1);
  }
  // Now c0 = (a', 0); c1 = (b', d').
  if (c0.x < 0) c0 = -c0;
  if (c1.y < 0) c1 = -c1;
  SublatticeHNF h{c0.x, floor_mod(c1.x, c0.x), c1.y};
  return h;
}

Int lattice_index(const IntMatrix2& m) {
  require_nonsingular(m);
  Int det = m.det();
  return det < 0 ? -det : det;
}

bool contains(const IntMatrix2& m, Vec2i v) {
  require_nonsingular(m);
  // x = adj(m) v / det
  Int det = m.det();
  Int x0 = m.d * v.x - m.b * v.y;
  Int x1 = -m.c * v.x + m.a * v.y;
  return x0 % det == 0 && x1 % det == 0;
}

Vec2i coset_rep(const SublatticeHNF& h, Vec2i v) {
  Int k = floor_div(v.y, h.d);
  Vec2i r{v.x - k * h.b, v.y - k * h.d};
  r.x = floor_mod(r.x, h.a);
  return r;
}

std::vector<Vec2i> coset_reps(const SublatticeHNF& h) {
  std::vector<Vec2i> reps;
  reps.reserve(static_cast<std::size_t>(h.index()));
  for (Int x = 0; x < h.a; ++x)
    for (Int y = 0; y < h.d; ++y) reps.push_back({x, y});
  return reps;
}

Int minimal_exponent(const IntMatrix2& m) {
  Int det = lattice_index(m);
  Int g = std::gcd(std::gcd(m.a, m.b), std::gcd(m.c, m.d));
  return det / std::gcd(det, g);
}

std::vector<SublatticeHNF> enumerate_sublattices(Int n) {
  std::vector<SublatticeHNF> out;
  for (Int a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    for (Int b = 0; b < a; ++b) out.push_back({a, b, n / a});
  }
  return out;
}

bool is_invariant(const IntMatrix2& m, const PointSymmetry& p) {
  require_nonsingular(m);
  return contains(m, p.matrix.apply(m.column(0))) && contains(m, p.matrix.apply(m.column(1)));
}

std::string to_string(const SublatticeHNF& h) {
  std::ostringstream os;
  os << '[' << h.a << ',' << h.b << ",0," << h.d << ']';
  return os.str();
}

}  // namespace tilecover
