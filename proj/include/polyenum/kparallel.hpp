#pragma once

#include <string>
#include <vector>

#include "polyenum/polyomino.hpp"

namespace polyenum {

// Internal path of cells joined by north and east steps.
struct MonotonePath {
  std::vector<Cell> cells;
  std::string steps;  // over {n, e}, one fewer than cells

  int sides() const;
  int changes() const { return steps.empty() ? 0 : sides() - 1; }
};

// Number of east / north steps in a word over {n, e}.
int widthOf(const std::string& word);
int heightOf(const std::string& word);
// Nonempty and made of a single step type.
bool isFlatWord(const std::string& word);

// Greedy paths from S (bottom-left cell) to E (top-right cell), every side
// maximal; v starts north, h starts east. When the first column (bottom row)
// is a single cell the two paths coincide. Throw NotParallelogram.
MonotonePath pathV(const Polyomino& p);
MonotonePath pathH(const Polyomino& p);

// First cell from which h and v run together up to E; E when they only meet
// at E. Throws NotParallelogram.
Cell cellC(const Polyomino& p);

enum class KParKind { Flat, Up, Right };

struct KParClass {
  KParKind kind = KParKind::Flat;
  int k = 0;
  bool operator==(const KParClass&) const = default;
};

std::string kindName(KParKind kind);

// Throws NotParallelogram, DegreeZero.
KParClass classifyKPar(const Polyomino& p);

// Upper boundary from the bottom-left corner, starting north; lower
// boundary from the same corner, starting east. Both end at the top-right
// corner.
std::string upperPath(const Polyomino& p);
std::string lowerPath(const Polyomino& p);
// Inverse of the two functions above; throws InvalidDecomposition when the
// words do not bound a parallelogram polyomino.
Polyomino fromBoundaryPaths(const std::string& upper, const std::string& lower);

// alpha[0] is alpha_1: the upper boundary cut into k pieces read right to
// left, likewise beta for the lower boundary.
struct Decomposition {
  int k = 0;
  std::vector<std::string> alpha;
  std::vector<std::string> beta;
  bool operator==(const Decomposition&) const = default;
};

// Throws NotParallelogram, DegreeZero.
Decomposition decompose(const Polyomino& p);

// Throws InvalidDecomposition naming the first violated constraint.
void checkDecomposition(const Decomposition& d);

// The unique polyomino with decompose(P) == d. Throws InvalidDecomposition.
Polyomino recompose(const Decomposition& d);

}  // namespace polyenum
