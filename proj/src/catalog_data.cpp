#include "catalog_data.hpp"

// Generated from an exhaustive search over small translation lattices; each
// entry is re-validated at run time by validate_geometry.
namespace tilecover::detail {

const std::vector<RawEntry>& raw_catalog() {
  static const std::vector<RawEntry> entries = {
    {"K-333333_33336-a", "3.3.3.3.3.3", "3.3.3.3.6",
     {3,0,0,0}, {0,0,3,0},
     {{0,0,0,0}, {2,0,2,0}, {0,0,1,0}, {0,0,2,0}, {1,0,0,0}, {1,0,2,0}, {2,0,0,0}, {2,0,1,0}},
     {{{0,0,0}, {4,0,0}, {2,0,0}},
      {{0,0,0}, {2,0,0}, {7,-1,0}},
      {{0,0,0}, {7,-1,0}, {6,-1,0}},
      {{0,0,0}, {6,-1,0}, {3,0,-1}},
      {{0,0,0}, {3,0,-1}, {5,0,-1}},
      {{0,0,0}, {5,0,-1}, {4,0,0}},
      {{4,0,0}, {5,0,-1}, {1,0,-1}},
      {{4,0,0}, {1,0,-1}, {6,0,0}},
      {{6,0,0}, {1,0,-1}, {3,1,-1}},
      {{4,0,0}, {6,0,0}, {7,0,0}, {5,0,0}, {3,0,0}, {2,0,0}},
      {{2,0,0}, {3,0,0}, {1,-1,0}},
      {{2,0,0}, {1,-1,0}, {7,-1,0}},
      {{7,0,0}, {1,0,0}, {5,0,0}}}},
    {"K-333333_33336-b", "3.3.3.3.3.3", "3.3.3.3.6",
     {4,0,-1,0}, {1,0,3,0},
     {{0,0,0,0}, {0,0,1,0}, {0,0,2,0}, {0,0,3,0}, {0,0,6,0}, {0,0,10,0}, {0,0,4,0}, {0,0,5,0}, {0,0,7,0}, {0,0,9,0}, {0,0,11,0}, {0,0,12,0}},
     {{{0,0,0}, {5,1,-3}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {6,0,-1}},
      {{0,0,0}, {6,0,-1}, {3,0,-1}},
      {{0,0,0}, {3,0,-1}, {11,1,-4}},
      {{0,0,0}, {11,1,-4}, {9,1,-3}},
      {{0,0,0}, {9,1,-3}, {5,1,-3}},
      {{5,0,0}, {9,0,0}, {4,0,1}},
      {{5,0,0}, {4,0,1}, {8,0,1}},
      {{5,0,0}, {8,0,1}, {10,0,0}},
      {{5,0,0}, {10,0,0}, {1,-1,3}},
      {{1,0,0}, {10,1,-3}, {2,0,0}},
      {{1,0,0}, {2,0,0}, {7,0,-1}},
      {{1,0,0}, {7,0,-1}, {6,0,-1}},
      {{6,0,0}, {7,0,0}, {9,0,-1}, {11,0,-2}, {10,0,-2}, {8,0,-1}},
      {{6,0,0}, {8,0,-1}, {3,0,0}},
      {{11,0,0}, {3,-1,3}, {2,-1,3}},
      {{11,0,0}, {2,-1,3}, {10,0,0}},
      {{9,0,0}, {7,0,1}, {4,0,1}},
      {{8,0,0}, {4,0,0}, {3,0,1}},
      {{3,0,0}, {4,0,-1}, {2,0,0}},
      {{4,0,0}, {7,0,0}, {2,0,1}}}},
    {"K-333333_33344-a", "3.3.3.3.3.3", "3.3.3.4.4",
     {1,0,0,0}, {-1,0,2,1},
     {{0,0,0,0}, {0,0,1,0}, {0,0,1,1}},
     {{{0,0,0}, {0,1,0}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {1,-1,0}},
      {{0,0,0}, {0,-1,0}, {2,-1,-1}},
      {{0,0,0}, {2,-1,-1}, {2,0,-1}},
      {{1,0,0}, {1,1,0}, {2,1,0}, {2,0,0}}}},
    {"K-333333_33344-b", "3.3.3.3.3.3", "3.3.3.4.4",
     {1,0,0,0}, {-1,0,3,1},
     {{0,0,0,0}, {0,0,1,0}, {0,0,2,0}, {0,0,2,1}},
     {{{0,0,0}, {0,1,0}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {1,-1,0}},
      {{0,0,0}, {0,-1,0}, {3,-1,-1}},
      {{0,0,0}, {3,-1,-1}, {3,0,-1}},
      {{1,0,0}, {1,1,0}, {2,0,0}},
      {{1,0,0}, {2,0,0}, {2,-1,0}},
      {{3,0,0}, {3,-1,0}, {2,-1,0}, {2,0,0}}}},
    {"K-333333_33434-a", "3.3.3.3.3.3", "3.3.4.3.4",
     {2,1,-1,-1}, {1,1,1,0},
     {{0,0,0,0}, {0,0,-2,-1}, {0,0,-1,-1}, {0,0,-1,0}, {0,0,1,0}, {0,0,1,1}, {0,0,2,1}},
     {{{0,0,0}, {6,1,-1}, {4,0,0}},
      {{0,0,0}, {4,0,0}, {2,-1,1}},
      {{0,0,0}, {2,-1,1}, {1,-1,1}},
      {{0,0,0}, {1,-1,1}, {3,0,0}},
      {{0,0,0}, {3,0,0}, {5,1,-1}},
      {{0,0,0}, {5,1,-1}, {6,1,-1}},
      {{6,0,0}, {5,0,0}, {1,-1,2}, {2,-1,2}},
      {{6,0,0}, {2,-1,2}, {3,-1,2}},
      {{6,0,0}, {3,-1,2}, {1,-2,3}, {4,-1,1}},
      {{4,0,0}, {1,-1,2}, {5,0,0}},
      {{4,0,0}, {5,0,0}, {3,-1,1}, {2,-1,1}}}},
    {"K-333333_33412-a", "3.3.3.3.3.3", "3.3.4.12",
     {3,2,0,-1}, {0,1,3,1},
     {{0,0,0,0}, {2,0,-4,-2}, {0,0,-1,0}, {0,0,1,0}, {0,0,1,1}, {0,0,2,1}, {1,0,-4,-2}, {1,0,-3,-2}, {1,0,-1,0}, {1,0,0,0}, {2,0,-6,-3}, {2,0,-5,-3}, {2,0,-5,-2}, {2,0,-3,-2}},
     {{{0,0,0}, {9,0,0}, {3,0,0}},
      {{0,0,0}, {3,0,0}, {11,-1,2}},
      {{0,0,0}, {11,-1,2}, {10,-1,2}},
      {{0,0,0}, {10,-1,2}, {2,0,0}},
      {{0,0,0}, {2,0,0}, {8,0,0}},
      {{0,0,0}, {8,0,0}, {9,0,0}},
      {{9,0,0}, {8,0,0}, {6,0,1}, {7,0,1}},
      {{9,0,0}, {7,0,1}, {13,0,1}, {10,0,2}, {11,0,2}, {12,0,2}, {6,0,2}, {8,0,1}, {2,0,1}, {5,0,0}, {4,0,0}, {3,0,0}},
      {{3,0,0}, {4,0,0}, {12,-1,2}, {11,-1,2}},
      {{10,0,0}, {13,0,-1}, {5,1,-3}, {2,1,-2}},
      {{6,0,0}, {12,0,0}, {1,0,0}},
      {{6,0,0}, {1,0,0}, {7,0,0}},
      {{7,0,0}, {1,0,0}, {13,0,0}},
      {{13,0,0}, {1,0,0}, {5,1,-2}},
      {{12,0,0}, {4,1,-2}, {1,0,0}},
      {{5,0,0}, {1,-1,2}, {4,0,0}}}},
    {"K-333333_3366-a", "3.3.3.3.3.3", "3.3.6.6",
     {3,0,0,0}, {0,0,3,0},
     {{0,0,0,0}, {0,0,1,0}, {0,0,2,0}, {1,0,0,0}, {1,0,2,0}, {2,0,0,0}, {2,0,1,0}},
     {{{0,0,0}, {3,0,0}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {6,-1,0}},
      {{0,0,0}, {6,-1,0}, {5,-1,0}},
      {{0,0,0}, {5,-1,0}, {2,0,-1}},
      {{0,0,0}, {2,0,-1}, {4,0,-1}},
      {{0,0,0}, {4,0,-1}, {3,0,0}},
      {{3,0,0}, {4,0,-1}, {6,0,-1}, {1,1,-1}, {2,1,-1}, {5,0,0}},
      {{3,0,0}, {5,0,0}, {6,0,0}, {4,0,0}, {2,0,0}, {1,0,0}}}},
    {"K-33336_3366-a", "3.3.3.3.6", "3.3.6.6",
     {0,2,0,-1}, {0,1,0,2},
     {{0,0,0,0}, {0,0,0,2}, {0,0,0,3}, {0,0,0,4}},
     {{{0,0,0}, {2,0,-1}, {1,0,-1}},
      {{0,0,0}, {1,0,-1}, {3,1,-2}},
      {{0,0,0}, {3,1,-2}, {1,1,-1}},
      {{0,0,0}, {1,1,-1}, {2,1,-1}},
      {{0,0,0}, {2,1,-1}, {3,1,-1}, {1,0,0}, {3,0,-1}, {2,0,-1}}}},
    {"K-33344_33434-a", "3.3.3.4.4", "3.3.4.3.4",
     {3,2,0,-1}, {1,1,1,1},
     {{0,0,-1,-2}, {0,0,0,-1}, {0,0,0,0}, {0,0,1,1}, {0,0,-2,-4}, {0,0,-2,-3}, {0,0,-1,-3}, {0,0,-1,-1}, {0,0,1,0}, {0,0,1,2}, {0,0,2,2}, {0,0,2,3}},
     {{{2,0,0}, {11,1,-2}, {8,0,0}},
      {{2,0,0}, {8,0,0}, {6,-1,2}},
      {{2,0,0}, {6,-1,2}, {5,-1,2}},
      {{2,0,0}, {5,-1,2}, {4,-1,2}, {1,0,0}},
      {{2,0,0}, {1,0,0}, {10,1,-2}, {11,1,-2}},
      {{1,0,0}, {4,-1,2}, {7,0,0}},
      {{1,0,0}, {7,0,0}, {9,1,-2}},
      {{1,0,0}, {9,1,-2}, {10,1,-2}},
      {{11,0,0}, {10,0,0}, {0,-1,3}},
      {{11,0,0}, {0,-1,3}, {7,-1,3}},
      {{11,0,0}, {7,-1,3}, {4,-2,5}, {8,-1,2}},
      {{4,0,0}, {5,0,0}, {3,1,-3}},
      {{4,0,0}, {3,1,-3}, {8,1,-3}},
      {{8,0,0}, {3,0,0}, {0,-1,2}, {6,-1,2}},
      {{7,0,0}, {0,0,0}, {3,1,-2}, {9,1,-2}},
      {{0,0,0}, {10,1,-3}, {6,0,0}},
      {{6,0,0}, {10,1,-3}, {9,1,-3}, {5,0,0}},
      {{5,0,0}, {9,1,-3}, {3,1,-3}}}},
    {"K-33344_33434-b", "3.3.3.4.4", "3.3.4.3.4",
     {1,1,0,0}, {-2,0,2,2},
     {{0,0,0,0}, {0,0,1,1}, {0,1,1,1}, {0,1,2,2}, {0,0,0,-1}, {0,0,0,1}, {0,1,2,1}, {0,1,2,3}},
     {{{0,0,0}, {5,0,0}, {7,-2,-1}},
      {{0,0,0}, {7,-2,-1}, {3,-2,-1}},
      {{0,0,0}, {3,-2,-1}, {4,0,0}},
      {{0,0,0}, {4,0,0}, {6,-1,-1}, {3,-1,-1}},
      {{0,0,0}, {3,-1,-1}, {7,-1,-1}, {5,0,0}},
      {{3,0,0}, {6,0,0}, {4,2,1}},
      {{5,0,0}, {7,-1,-1}, {1,0,0}},
      {{7,0,0}, {5,2,1}, {2,1,1}, {1,1,1}},
      {{5,0,0}, {1,0,0}, {2,-1,0}},
      {{4,0,0}, {6,-2,-1}, {1,-1,-1}, {2,-1,-1}},
      {{4,0,0}, {2,-1,-1}, {6,-1,-1}},
      {{6,0,0}, {2,0,0}, {1,1,0}}}},
    {"K-33344_3464-a", "3.3.3.4.4", "3.4.6.4",
     {2,2,0,-1}, {0,1,2,1},
     {{0,0,-1,-1}, {0,0,0,-1}, {0,0,0,0}, {0,0,1,0}, {1,0,-3,-3}, {1,0,-1,-1}, {1,0,-4,-4}, {1,0,-4,-3}, {1,0,-2,-3}, {1,0,-2,-1}, {1,0,0,-1}, {1,0,0,0}},
     {{{2,0,0}, {11,0,0}, {3,0,0}},
      {{2,0,0}, {3,0,0}, {4,-1,2}},
      {{2,0,0}, {4,-1,2}, {7,-1,2}},
      {{2,0,0}, {7,-1,2}, {6,-1,2}, {1,0,0}},
      {{2,0,0}, {1,0,0}, {10,0,0}, {11,0,0}},
      {{1,0,0}, {6,-1,2}, {0,0,0}},
      {{1,0,0}, {0,0,0}, {5,0,0}},
      {{1,0,0}, {5,0,0}, {10,0,0}},
      {{11,0,0}, {10,0,0}, {8,0,1}, {6,0,2}, {7,0,2}, {9,0,1}},
      {{11,0,0}, {9,0,1}, {0,0,1}, {3,0,0}},
      {{3,0,0}, {0,0,1}, {6,-1,3}, {8,-1,2}},
      {{3,0,0}, {8,-1,2}, {4,-1,2}},
      {{4,0,0}, {8,0,0}, {10,0,-1}, {5,0,-1}},
      {{4,0,0}, {5,0,-1}, {9,0,-1}, {7,0,0}},
      {{0,0,0}, {9,0,0}, {5,0,0}}}},
    {"K-33344_4444-a", "3.3.3.4.4", "4.4.4.4",
     {1,0,0,0}, {0,0,1,2},
     {{0,0,0,-2}, {0,0,0,0}, {0,0,0,-1}},
     {{{1,0,0}, {1,1,0}, {0,0,1}},
      {{1,0,0}, {0,0,1}, {0,-1,1}},
      {{1,0,0}, {1,-1,0}, {2,-1,0}, {2,0,0}},
      {{0,0,0}, {0,1,0}, {2,1,0}, {2,0,0}}}},
    {"K-33344_4444-b", "3.3.3.4.4", "4.4.4.4",
     {1,0,0,0}, {0,0,1,3},
     {{0,0,0,-3}, {0,0,0,0}, {0,0,0,-2}, {0,0,0,-1}},
     {{{1,0,0}, {1,1,0}, {0,0,1}},
      {{1,0,0}, {0,0,1}, {0,-1,1}},
      {{1,0,0}, {1,-1,0}, {3,-1,0}, {3,0,0}},
      {{0,0,0}, {0,1,0}, {2,1,0}, {2,0,0}},
      {{3,0,0}, {3,-1,0}, {2,-1,0}, {2,0,0}}}},
    {"K-33434_3464-a", "3.3.4.3.4", "3.4.6.4",
     {2,2,0,-1}, {0,1,2,1},
     {{0,0,-1,0}, {0,0,0,0}, {0,0,0,1}, {0,0,1,1}, {1,0,-3,-2}, {1,0,-1,0}, {0,0,-2,-1}, {0,0,-1,-1}, {0,0,1,2}, {0,0,2,2}, {1,0,-3,-1}, {1,0,-1,-1}},
     {{{1,0,0}, {6,0,1}, {2,0,0}},
      {{1,0,0}, {2,0,0}, {9,0,-1}},
      {{1,0,0}, {9,0,-1}, {8,0,-1}, {0,0,0}},
      {{1,0,0}, {0,0,0}, {5,0,0}},
      {{1,0,0}, {5,0,0}, {10,0,1}, {6,0,1}},
      {{2,0,0}, {6,0,1}, {7,0,1}, {3,0,0}},
      {{2,0,0}, {3,0,0}, {4,-1,2}},
      {{2,0,0}, {4,-1,2}, {11,-1,1}, {9,0,-1}},
      {{6,0,0}, {10,0,0}, {8,1,-2}, {9,1,-2}, {11,0,0}, {7,0,0}},
      {{8,0,0}, {10,-1,2}, {4,-1,2}, {3,0,0}},
      {{8,0,0}, {3,0,0}, {0,0,1}},
      {{10,0,0}, {5,0,-1}, {4,0,0}},
      {{7,0,0}, {11,0,0}, {5,0,0}, {0,0,0}},
      {{0,0,0}, {3,0,-1}, {7,0,0}},
      {{5,0,0}, {11,0,0}, {4,0,1}}}},
    {"K-3366_3636-a", "3.3.6.6", "3.6.3.6",
     {0,2,0,-1}, {0,0,0,2},
     {{0,0,0,0}, {0,0,0,1}, {0,1,0,0}},
     {{{0,0,0}, {2,0,0}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {2,-1,0}},
      {{0,0,0}, {2,-1,0}, {0,-1,0}, {1,-1,-1}, {2,-1,-1}, {1,0,-1}}}},
    {"K-34312_31212-a", "3.4.3.12", "3.12.12",
     {2,2,0,-1}, {-1,0,2,2},
     {{0,0,-2,-2}, {0,0,-2,-1}, {0,0,0,0}, {0,0,0,1}, {0,0,-1,-1}, {0,0,-1,0}, {0,1,0,0}, {0,1,2,2}},
     {{{2,0,0}, {6,0,0}, {3,0,0}},
      {{2,0,0}, {3,0,0}, {1,0,1}, {0,0,1}},
      {{2,0,0}, {0,0,1}, {5,0,0}},
      {{2,0,0}, {5,0,0}, {4,0,0}, {3,0,-1}, {6,0,-1}, {7,0,-2}, {1,1,0}, {4,1,0}, {5,1,0}, {0,1,1}, {7,0,-1}, {6,0,0}},
      {{3,0,0}, {4,0,1}, {1,0,1}},
      {{1,0,0}, {7,-1,-2}, {0,0,0}}}},
    {"K-3446_3464-a", "3.4.4.6", "3.4.6.4",
     {3,2,0,-1}, {0,1,3,1},
     {{0,0,-1,0}, {0,0,0,0}, {0,0,2,2}, {0,0,3,2}, {1,0,-3,-1}, {1,0,-2,-1}, {1,0,-2,0}, {1,0,0,0}, {2,0,-4,-1}, {2,0,-2,-1}, {2,0,-2,0}, {2,0,-1,0}, {0,0,-2,-1}, {0,0,-2,0}, {0,0,1,0}, {0,0,1,2}, {0,0,4,2}, {0,0,4,3}},
     {{{1,0,0}, {7,0,0}, {14,0,0}},
      {{1,0,0}, {14,0,0}, {16,0,-1}, {3,0,-1}},
      {{1,0,0}, {3,0,-1}, {2,0,-1}, {0,0,0}},
      {{1,0,0}, {0,0,0}, {6,0,0}, {10,0,0}, {11,0,0}, {7,0,0}},
      {{7,0,0}, {11,0,0}, {8,0,1}, {4,0,1}},
      {{7,0,0}, {4,0,1}, {12,0,1}, {14,0,0}},
      {{14,0,0}, {12,0,1}, {13,0,1}, {15,0,0}, {17,0,-1}, {16,0,-1}},
      {{16,0,0}, {17,0,0}, {10,-1,2}, {9,-1,2}},
      {{16,0,0}, {9,-1,2}, {3,0,0}},
      {{3,0,0}, {9,-1,2}, {5,-1,2}, {4,-1,2}, {8,-1,2}, {2,0,0}},
      {{10,0,0}, {6,0,0}, {5,0,0}, {9,0,0}},
      {{10,0,0}, {17,1,-2}, {11,0,0}},
      {{11,0,0}, {17,1,-2}, {15,1,-1}, {8,0,1}},
      {{8,0,0}, {15,1,-2}, {2,1,-2}},
      {{2,0,0}, {15,0,0}, {13,0,1}, {0,0,1}},
      {{0,0,0}, {13,0,0}, {6,0,0}},
      {{6,0,0}, {13,0,0}, {12,0,0}, {5,0,0}},
      {{4,0,0}, {5,0,0}, {12,0,0}}}},
    {"K-3446_3636-a", "3.4.4.6", "3.6.3.6",
     {1,2,0,-1}, {0,0,0,2},
     {{0,0,0,0}, {0,0,0,1}, {0,2,0,0}, {0,2,0,1}, {0,1,0,0}},
     {{{0,0,0}, {4,0,0}, {1,0,0}},
      {{0,0,0}, {1,0,0}, {2,-1,0}, {3,-1,-1}},
      {{0,0,0}, {3,-1,-1}, {2,-1,-1}, {1,0,-1}},
      {{0,0,0}, {1,0,-1}, {4,0,-1}, {2,0,-1}, {3,0,-1}, {4,0,0}},
      {{4,0,0}, {3,0,-1}, {2,0,0}}}},
    {"K-3446_3636-b", "3.4.4.6", "3.6.3.6",
     {2,0,0,0}, {0,0,2,1},
     {{0,0,0,-1}, {0,0,0,0}, {1,0,0,-1}, {1,0,0,0}, {1,0,1,0}},
     {{{1,0,0}, {4,-1,0}, {3,-1,0}},
      {{1,0,0}, {3,-1,0}, {2,-1,0}, {0,0,0}},
      {{1,0,0}, {0,0,0}, {2,0,0}, {3,0,0}},
      {{1,0,0}, {3,0,0}, {4,0,0}, {0,0,1}, {2,-1,1}, {4,-1,0}},
      {{4,0,0}, {2,0,1}, {0,0,1}}}},
    {"K-3464_4612-a", "3.4.6.4", "4.6.12",
     {4,2,-2,-2}, {2,2,2,0},
     {{0,0,-2,-1}, {0,0,-2,0}, {0,0,0,0}, {0,0,0,1}, {0,1,0,0}, {0,1,4,2}, {0,0,-3,-1}, {0,0,1,1}, {0,1,1,0}, {0,1,3,2}, {1,0,-5,-2}, {1,0,-4,-2}, {1,0,-4,-1}, {1,0,-2,-1}, {1,0,-2,0}, {1,0,-1,0}, {1,1,-1,0}, {1,1,1,0}},
     {{{2,0,0}, {4,0,0}, {3,0,0}},
      {{2,0,0}, {3,0,0}, {12,-1,1}, {11,-1,1}},
      {{2,0,0}, {11,-1,1}, {10,-1,1}, {1,0,0}, {14,0,0}, {15,0,0}},
      {{2,0,0}, {15,0,0}, {16,0,0}, {4,0,0}},
      {{4,0,0}, {16,0,0}, {9,1,-1}, {5,1,-1}, {17,0,0}, {8,0,0}},
      {{4,0,0}, {8,0,0}, {7,0,0}, {3,0,0}},
      {{3,0,0}, {7,0,0}, {13,-1,1}, {0,-1,1}, {6,-1,1}, {12,-1,1}},
      {{12,0,0}, {6,0,0}, {9,1,-2}, {16,0,-1}, {15,0,-1}, {14,0,-1}, {13,0,-1}, {7,1,-2}, {8,1,-2}, {17,1,-2}, {10,0,0}, {11,0,0}},
      {{10,0,0}, {17,1,-2}, {5,2,-3}, {1,1,-1}},
      {{14,0,0}, {1,0,0}, {0,0,0}, {13,0,0}},
      {{1,0,0}, {5,1,-2}, {0,0,0}},
      {{9,0,0}, {6,-1,2}, {0,-1,2}, {5,0,0}}}},
  };
  return entries;
}

}  // namespace tilecover::detail
