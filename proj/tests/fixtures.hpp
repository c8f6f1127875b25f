// Hand-built tilings used as negative controls and odd cases in the tests.
#pragma once

#include "tilecover/periodic.hpp"

namespace testfix {

using namespace tilecover;

inline const QuadExact kHalf{Rational(1, 2)};
inline const QuadExact kHalfR3{Rational(0), Rational(1, 2)};

/// Two rows of squares then two rows of triangles, repeating: vertex types
/// [4^4], [3^3,4^2] and [3^6].
inline PeriodicTiling three_type_rows() {
  const QuadExact top = QuadExact(2) + QuadExact::sqrt3();
  return assemble_tiling("three-type-rows", {1, 0}, {0, top},
                         {{"s", {0, 0}}, {"m", {0, 1}}, {"u", {0, 2}}, {"t", {kHalf, QuadExact(2) + kHalfR3}}},
                         {{{0, {0, 0}}, {0, {1, 0}}, {1, {1, 0}}, {1, {0, 0}}},
                          {{1, {0, 0}}, {1, {1, 0}}, {2, {1, 0}}, {2, {0, 0}}},
                          {{2, {0, 0}}, {2, {1, 0}}, {3, {0, 0}}},
                          {{2, {1, 0}}, {3, {1, 0}}, {3, {0, 0}}},
                          {{3, {0, 0}}, {3, {1, 0}}, {0, {1, 1}}},
                          {{3, {0, 0}}, {0, {1, 1}}, {0, {0, 1}}}},
                         {VertexType::parse("[4^4]"), VertexType::parse("[3^3,4^2]"), VertexType::parse("[3^6]")});
}

/// Square grid with side 2: combinatorially fine, geometrically wrong.
inline PeriodicTiling long_edges() {
  return assemble_tiling("long-edges", {2, 0}, {0, 2}, {{"a0", {0, 0}}},
                         {{{0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}}, {VertexType::parse("[4^4]")});
}

/// Triangular lattice declared with the wrong vertex type.
inline PeriodicTiling mislabeled_triangles() {
  PeriodicTiling t = fixtures::triangle_grid();
  t.name = "mislabeled";
  t.declared_types = {VertexType::parse("[3^4,6]")};
  return t;
}

}  // namespace testfix
