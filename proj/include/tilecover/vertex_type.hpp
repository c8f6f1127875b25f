#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tilecover {

/// Face-cycle type [p1^n1, ..., pk^nk] of a vertex. Stored as the expanded
/// cycle of gon sizes in canonical form: the lexicographically least sequence
/// over all rotations and reflections.
class VertexType {
 public:
  VertexType() = default;
  /// Throws std::invalid_argument for an empty cycle or a gon size below 3.
  explicit VertexType(std::vector<int> cycle);

  /// Accepts "[3^2,4,3,4]", "3^2,4,3,4" and "3.3.4.3.4".
  static VertexType parse(std::string_view text);

  const std::vector<int>& cycle() const { return cycle_; }
  /// Run-length form; adjacent runs (cyclically) have different gon sizes.
  std::vector<std::pair<int, int>> runs() const;
  /// "[3^2,4,3,4]".
  std::string to_string() const;
  /// "33434", used in catalog names.
  std::string compact() const;

  friend auto operator<=>(const VertexType&, const VertexType&) = default;

 private:
  std::vector<int> cycle_;
};

/// "[3^6;3^4,6]".
std::string pair_to_string(const VertexType& first, const VertexType& second);

}  // namespace tilecover
