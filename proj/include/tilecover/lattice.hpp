#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilecover {

using Int = std::int64_t;

/// Integer pair, used both for translation offsets and lattice points in the
/// tiling's translation basis (A, B).
struct Vec2i {
  Int x = 0;
  Int y = 0;

  friend constexpr Vec2i operator+(Vec2i p, Vec2i q) { return {p.x + q.x, p.y + q.y}; }
  friend constexpr Vec2i operator-(Vec2i p, Vec2i q) { return {p.x - q.x, p.y - q.y}; }
  friend constexpr Vec2i operator-(Vec2i p) { return {-p.x, -p.y}; }
  friend constexpr Vec2i operator*(Int k, Vec2i p) { return {k * p.x, k * p.y}; }
  friend constexpr auto operator<=>(const Vec2i&, const Vec2i&) = default;
};

/// 2x2 integer matrix [[a, b], [c, d]]. Used as a sublattice generator its
/// columns (a, c) and (b, d) are the generators C, D in the basis (A, B).
struct IntMatrix2 {
  Int a = 1, b = 0, c = 0, d = 1;

  constexpr Int det() const { return a * d - b * c; }
  constexpr Vec2i column(int i) const { return i == 0 ? Vec2i{a, c} : Vec2i{b, d}; }
  constexpr Vec2i apply(Vec2i v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  static constexpr IntMatrix2 identity() { return {}; }
  static constexpr IntMatrix2 scalar(Int m) { return {m, 0, 0, m}; }
  static constexpr IntMatrix2 from_columns(Vec2i c0, Vec2i c1) { return {c0.x, c1.x, c0.y, c1.y}; }

  friend constexpr IntMatrix2 operator*(const IntMatrix2& p, const IntMatrix2& q) {
    return {p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
            p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d};
  }
  friend constexpr bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

/// Column-style Hermite normal form [[a, b], [0, d]] with a, d >= 1 and
/// 0 <= b < a. Every finite-index sublattice of Z^2 has exactly one.
struct SublatticeHNF {
  Int a = 1, b = 0, d = 1;

  constexpr Int index() const { return a * d; }
  constexpr IntMatrix2 matrix() const { return {a, b, 0, d}; }

  friend constexpr auto operator<=>(const SublatticeHNF&, const SublatticeHNF&) = default;
};

/// Linear part of a point symmetry acting on the translation basis.
struct PointSymmetry {
  IntMatrix2 matrix;

  /// Multiplicative order, or 0 if it exceeds 12.
  int order() const;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("singular sublattice matrix (det = 0)") {}
};

SublatticeHNF hnf(const IntMatrix2& m);
Int lattice_index(const IntMatrix2& m);

/// True iff v lies in the lattice generated by the columns of m. Decided by
/// solving m x = v over the rationals and testing integrality.
bool contains(const IntMatrix2& m, Vec2i v);

/// Canonical coset representative: second coordinate reduced modulo d, then
/// the first modulo a. Constant on cosets of the sublattice.
Vec2i coset_rep(const SublatticeHNF& h, Vec2i v);

/// All a*d canonical coset representatives in lexicographic order.
std::vector<Vec2i> coset_reps(const SublatticeHNF& h);

/// Least m >= 1 such that m * inverse(m) is integral, i.e. (m,0) and (0,m)
/// both lie in the sublattice.
Int minimal_exponent(const IntMatrix2& m);

/// All sublattices of index n in HNF, ordered lexicographically by (a, b, d).
std::vector<SublatticeHNF> enumerate_sublattices(Int n);

/// True iff P maps the sublattice generated by m onto itself.
bool is_invariant(const IntMatrix2& m, const PointSymmetry& p);

/// "[a,b,0,d]" style text, matching the JSON layout.
std::string to_string(const SublatticeHNF& h);

}  // namespace tilecover
