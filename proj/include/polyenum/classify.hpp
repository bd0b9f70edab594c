#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyenum/polyomino.hpp"

namespace polyenum {

enum class Family {
  ColumnConvex,
  RowConvex,
  Convex,
  Directed,
  DirectedConvex,
  Parallelogram,
  Stack,
  Ferrer,
  LConvex,
  KConvex,
};

struct FamilyTag {
  Family family = Family::Convex;
  int k = 0;  // only meaningful for KConvex

  std::string name() const;
  // "convex", "directed-convex", "l-convex", "k-convex:3", ...
  static FamilyTag parse(const std::string& name);
};

bool isColumnConvex(const Polyomino& p);
bool isRowConvex(const Polyomino& p);
bool isConvex(const Polyomino& p);
// Every cell is reachable from the leftmost cell of the bottom row with
// north and east steps inside the polyomino.
bool isDirected(const Polyomino& p);
bool isDirectedConvex(const Polyomino& p);
bool isParallelogram(const Polyomino& p);
bool isStack(const Polyomino& p);
bool isFerrer(const Polyomino& p);
bool isLConvex(const Polyomino& p);
bool isKConvex(const Polyomino& p, int k);

bool belongsTo(const Polyomino& p, const FamilyTag& tag);

// Least k such that any two cells are joined by a monotone internal path
// with at most k changes of direction. Throws NotConvex.
int convexityDegree(const Polyomino& p);

// Fewest direction changes over the two greedy paths between two cells
// (one starting vertically, one horizontally, every side maximal), or
// nullopt when neither reaches the target. Requires a convex polyomino.
std::optional<int> greedyPairChanges(const Polyomino& p, Cell a, Cell b);

// Inclusion-maximal rectangles of cells inside p, as
// {rowLo, rowHi, colLo, colHi} with inclusive bounds.
struct Rect {
  int rowLo, rowHi, colLo, colHi;
  auto operator<=>(const Rect&) const = default;
};
std::vector<Rect> maximalRectangles(const Polyomino& p);

// Every two maximal rectangles cross (one spans the rows of the other,
// the other spans its columns).
bool maximalRectanglesPairwiseCross(const Polyomino& p);

}  // namespace polyenum
