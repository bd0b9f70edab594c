#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyenum/binary_matrix.hpp"
#include "polyenum/permutation.hpp"
#include "polyenum/polyomino.hpp"

namespace polyenum {

// ---------------------------------------------------------------------------
// Submatrix order

// Host rows and columns (increasing) that restrict to the pattern.
struct SubmatrixWitness {
  std::vector<int> rows;
  std::vector<int> cols;
};

std::optional<SubmatrixWitness> findSubmatrix(const BinaryMatrix& host, const BinaryMatrix& pattern);
bool containsSubmatrix(const BinaryMatrix& host, const BinaryMatrix& pattern);
bool containsAnySubmatrix(const BinaryMatrix& host, const std::vector<BinaryMatrix>& patterns);

// A matrix with at most one 1 per row and per column. A 0 is uncovered when
// its row and its column hold no 1.
class QuasiPermMatrix {
 public:
  // Throws NotQuasiPermutation.
  explicit QuasiPermMatrix(BinaryMatrix m);
  const BinaryMatrix& matrix() const { return m_; }
  bool isUncoveredZero(int i, int j) const;
  std::vector<Cell> uncoveredZeros() const;

 private:
  BinaryMatrix m_;
};

// Zeros of an arbitrary matrix whose row and column hold no 1.
std::vector<Cell> uncoveredZeros(const BinaryMatrix& m);

// Some submatrix of the permutation matrix of pi, with the dimensions of p,
// has a 1 wherever p has one.
bool marcusTardosContains(const Permutation& pi, const BinaryMatrix& p);
// Every matrix obtained from p by turning some uncovered 0s into 1s.
std::vector<BinaryMatrix> uncoveredZeroFlips(const BinaryMatrix& p);

// A polyomino having m as a submatrix: the columns of m interleaved with
// full columns, under a full row.
Polyomino polyominoContaining(const BinaryMatrix& m);

// ---------------------------------------------------------------------------
// Generalized patterns

// Entries are '0', '1' or '*'. Rows are indexed from the bottom like
// BinaryMatrix. A column bar after column j forces the host columns matched
// to j and j + 1 to be consecutive; a row bar after row i does the same for
// rows. A border mark forces the pattern's outer row or column onto the
// matching side of the host's bounding box.
class GenPattern {
 public:
  struct Borders {
    bool north = false;
    bool east = false;
    bool south = false;
    bool west = false;
    bool operator==(const Borders&) const = default;
  };

  GenPattern() = default;
  GenPattern(int rows, int cols);  // all '*'
  static GenPattern fromMatrix(const BinaryMatrix& m);

  // Text form, rows top first:
  //   borders:NE        optional header, any subset of NESW
  //   0|*1              '|' between entries is a column bar
  //   ---               a line of '-' between rows is a row bar
  //   *|10
  // A '|' before the first or after the last entry of every row, or a '-'
  // line above the first or below the last row, sets the W, E, N or S border
  // mark. Throws ParseError.
  static GenPattern parse(std::string_view text);
  std::string toText() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  char at(int i, int j) const { return cells_[i][j]; }
  // Throws InvalidArgument for a symbol outside {0,1,*} or a bad index.
  void set(int i, int j, char symbol);

  // Bar between columns j and j + 1 (resp. rows i and i + 1). Throws
  // InvalidArgument when the gap does not exist.
  void setColumnBar(int j, bool on = true);
  void setRowBar(int i, bool on = true);
  bool columnBar(int j) const { return colBars_[j]; }
  bool rowBar(int i) const { return rowBars_[i]; }
  Borders borders;

  // Column bitmasks of the '1' and '0' entries of row i.
  std::uint64_t onesMask(int i) const;
  std::uint64_t zerosMask(int i) const;

  GenPattern transpose() const;
  GenPattern mirrorColumns() const;
  GenPattern mirrorRows() const;
  GenPattern rotate90() const;

  bool operator==(const GenPattern& o) const = default;
  bool operator<(const GenPattern& o) const { return toText() < o.toText(); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::string> cells_;  // cells_[i][j], row 0 at the bottom
  std::vector<bool> colBars_;
  std::vector<bool> rowBars_;
};

std::optional<SubmatrixWitness> findGenPattern(const BinaryMatrix& host, const GenPattern& g);
bool genPatternMatch(const BinaryMatrix& host, const GenPattern& g);
bool genPatternMatch(const Polyomino& p, const GenPattern& g);

// The four quarter turns, duplicates removed.
std::vector<GenPattern> rotations(const GenPattern& g);
// The eight images under the symmetries of the square, duplicates removed.
std::vector<GenPattern> symmetries(const GenPattern& g);

// The two generalized patterns Z1 (3x3) and Z2 (4x4) for 2-convexity.
GenPattern patternZ1();
GenPattern patternZ2();
// Z1, Z2 and their rotations.
std::vector<GenPattern> twoConvexPatterns();

// The matrix of a pattern without '*' entries, bars or border marks.
std::optional<BinaryMatrix> plainMatrix(const GenPattern& g);

// A pattern file holds patterns separated by blank lines; lines starting with
// '#' are comments. An entry is a pattern in the text form above, or a single
// line holding a permutation in one-line notation (it contains a digit other
// than 0 and 1), which stands for its permutation matrix. Throws ParseError.
std::vector<GenPattern> parsePatternFile(std::string_view text);

// ---------------------------------------------------------------------------
// Permutation patterns

// (sigma, X, Y): with occurrence positions i_1 < ... < i_k, the sorted values
// j_1 < ... < j_k, and i_0 = j_0 = 0, i_{k+1} = j_{k+1} = n + 1, every x in X
// requires i_{x+1} = i_x + 1 and every y in Y requires j_{y+1} = j_y + 1.
struct BivincularPattern {
  Permutation sigma;
  std::set<int> X;
  std::set<int> Y;

  static BivincularPattern classical(const Permutation& sigma) { return {sigma, {}, {}}; }
  // Dashed notation: "12-3-4" forces the first two letters to be adjacent.
  // Throws ParseError.
  static BivincularPattern parseVincular(std::string_view text);
};

// (sigma, R): R holds unit squares (a, b), 0 <= a, b <= k, by lower-left
// corner; no point of pi may lie strictly inside a shaded region.
struct MeshPattern {
  Permutation sigma;
  std::set<std::pair<int, int>> shaded;
};

// Occurrences as 0-based position lists, in lexicographic order. Patterns
// longer than pi have none. Throw InvalidArgument for X, Y or R out of range.
std::vector<std::vector<int>> occurrences(const Permutation& pi, const BivincularPattern& p);
std::vector<std::vector<int>> occurrences(const Permutation& pi, const MeshPattern& p);

bool permContains(const Permutation& pi, const Permutation& sigma);
bool permContains(const Permutation& pi, const BivincularPattern& p);
bool permContains(const Permutation& pi, const MeshPattern& p);

// ---------------------------------------------------------------------------
// Avoidance sets

constexpr int kMaxAvPermSize = 10;
constexpr int kMaxAvSemiPerimeter = 12;

template <class T>
struct AvResult {
  std::vector<T> members;             // in enumeration order
  std::map<int, std::size_t> counts;  // size (or semi-perimeter) -> count
};

// Permutations of size 1..n avoiding every matrix. Checks that the result is
// closed under deleting a point and throws IdentityFailed otherwise. Throws
// CapExceeded for n > kMaxAvPermSize.
AvResult<Permutation> avPermutations(int n, const std::vector<BinaryMatrix>& patterns);
// Same with classical permutation patterns.
AvResult<Permutation> avPermutationsClassical(int n, const std::vector<Permutation>& patterns);
// Permutations of size exactly n.
std::vector<Permutation> avPermutationsOfSize(int n, const std::vector<BinaryMatrix>& patterns);

// Polyominoes with semi-perimeter 2..maxSp avoiding every matrix. Throws
// CapExceeded for maxSp > kMaxAvSemiPerimeter.
AvResult<Polyomino> avPolyominoes(int maxSp, const std::vector<BinaryMatrix>& patterns);
// Polyominoes among the members whose polyomino submatrices are not all
// members (empty for a downward closed set).
std::vector<Polyomino> downwardClosureViolations(const std::vector<Polyomino>& members);

// ---------------------------------------------------------------------------
// Characterizations

// Named matrices: H = [1 0 1], V = its transpose, D = [1 1; 0 1],
// S1 = [1 0; 0 1], S2 = [0 1; 1 0], H' = [0; 1; 0], V' = [0 1 0], and the
// permutation-class matrices M_F, M_G, M_H, M_J, M_K (all top row first).
BinaryMatrix namedMatrix(const std::string& name);

enum class Characterization {
  Convex,               // Av(H, V)
  DirectedConvex,       // Av(H, V, D)
  Parallelogram,        // Av([1 0; 1 1], [1 1; 0 1])
  LConvex,              // Av(H, V, S1, S2)
  TwoConvex,            // convex and avoiding twoConvexPatterns()
  LPolyomino,           // Av(S1, S2): rows and columns pairwise comparable
  CPrime,               // Av(H', V'): maximal segments touch the bounding box
  RectanglesWithHoles,  // six patterns; holes are rectangles, one 0-run per line
  Ryser,                // unique under projections iff Av(S1, S2), all matrices
};

std::string characterizationName(Characterization c);
// Throws UnknownFamily.
Characterization parseCharacterization(const std::string& name);
std::vector<Characterization> allCharacterizations();

struct CharacterizationReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<BinaryMatrix> counterexample;
};

// Compares the geometric predicate with the pattern filter on every
// polyomino with semi-perimeter <= bound (convex ones only for TwoConvex),
// or, for Ryser, on every matrix with at most bound rows and columns.
// Throws CapExceeded above kMaxAvSemiPerimeter (Ryser: above 4).
CharacterizationReport verifyCharacterization(Characterization c, int bound);
// Generic form: predicate against Av(patterns) on polyominoes with sp <= bound.
CharacterizationReport verifyCharacterization(const std::function<bool(const Polyomino&)>& predicate,
                                              const std::vector<BinaryMatrix>& patterns, int bound);

// Geometric predicates used above.
bool rowsAndColumnsComparable(const BinaryMatrix& m);
bool segmentsTouchBoundingBox(const BinaryMatrix& m);
bool isRectangleWithHoles(const BinaryMatrix& m);
// Uniquely determined among 0/1 matrices of its size by its projections,
// by brute force over all matrices of that size (at most 16 entries).
bool uniqueUnderProjections(const BinaryMatrix& m);

// 2m x 2m polyomino from a permutation of size m >= 2. Each 0 of the
// permutation matrix becomes a full 2x2 block and each 1 a 2x2 block with a
// single cell: at the bottom right for the 1 in the leftmost column, bottom
// left for the top row, top left for the rightmost column, top right for the
// bottom row (first matching rule wins) and top left otherwise. Distinct
// permutations give distinct members of C'.
BinaryMatrix cPrimeFromPermutation(const Permutation& pi);
// The variant with only two special cases (leftmost column: top right, top
// row: bottom left). Its images are not always connected; 312 is the
// smallest failure.
BinaryMatrix cPrimeFromPermutationPrinted(const Permutation& pi);

}  // namespace polyenum
