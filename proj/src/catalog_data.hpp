#pragma once

#include <array>
#include <vector>

namespace tilecover::detail {

/// Element of Z[w], w = exp(i*pi/6), on the basis 1, w, w^2, w^3.
using Cyclo = std::array<int, 4>;

struct RawCorner {
  int vclass;
  int dx, dy;
};

struct RawEntry {
  const char* name;
  const char* first_type;
  const char* second_type;
  Cyclo a, b;
  std::vector<Cyclo> vertices;
  std::vector<std::vector<RawCorner>> faces;
};

const std::vector<RawEntry>& raw_catalog();

}  // namespace tilecover::detail
