#pragma once

#include <functional>
#include <vector>

#include "polyenum/polyomino.hpp"

namespace polyenum {

struct EnumerationCaps {
  int maxArea = 14;
  int maxSemiPerimeter = 14;
};

struct EnumerationLimit {
  enum class Kind { Area, SemiPerimeter };
  Kind kind = Kind::Area;
  int bound = 1;

  static EnumerationLimit byArea(int a) { return {Kind::Area, a}; }
  static EnumerationLimit bySemiPerimeter(int s) { return {Kind::SemiPerimeter, s}; }
};

enum class EnumerationStrategy {
  Default,    // growth for area limits, row scan for semi-perimeter limits
  Growth,     // cell addition from the unit cell, one canonical parent per shape
  RowByRow,   // bounding box by bounding box, rows top to bottom
};

using PolyominoVisitor = std::function<void(const Polyomino&)>;

// Visits every polyomino with exactly the given area or semi-perimeter,
// once each, in canonical order.
void forEachPolyomino(EnumerationLimit limit, const PolyominoVisitor& fn, EnumerationCaps caps = {},
                      EnumerationStrategy strategy = EnumerationStrategy::Default);

std::vector<Polyomino> enumeratePolyominoes(EnumerationLimit limit, EnumerationCaps caps = {},
                                            EnumerationStrategy strategy = EnumerationStrategy::Default);

// Every polyomino with semi-perimeter 2..maxSp, in canonical order.
void forEachPolyominoUpTo(int maxSp, const PolyominoVisitor& fn, EnumerationCaps caps = {});

}  // namespace polyenum
