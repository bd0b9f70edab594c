#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyenum/binary_matrix.hpp"
#include "polyenum/patterns.hpp"
#include "polyenum/permutation.hpp"
#include "polyenum/polyomino.hpp"

namespace polyenum {

// ---------------------------------------------------------------------------
// Pattern sets

// A finite set of matrices, sorted and deduplicated.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<BinaryMatrix> matrices);
  static PatternSet fromTopRows(const std::vector<std::vector<std::string>>& matrices);
  static PatternSet fromPermutations(const std::vector<Permutation>& perms);

  const std::vector<BinaryMatrix>& matrices() const { return m_; }
  std::size_t size() const { return m_.size(); }
  bool empty() const { return m_.empty(); }
  bool contains(const BinaryMatrix& m) const;
  // Pairwise incomparable for the submatrix order.
  bool isAntichain() const { return antichain_; }

  bool operator==(const PatternSet& o) const { return m_ == o.m_; }
  bool operator<(const PatternSet& o) const { return m_ < o.m_; }

 private:
  std::vector<BinaryMatrix> m_;
  bool antichain_ = true;
};

// The minimal elements of a set of matrices for the submatrix order.
PatternSet minimalMatrices(const std::vector<BinaryMatrix>& matrices);

// ---------------------------------------------------------------------------
// Classes

enum class Universe { Permutations, Polyominoes };

// Membership test for a class. The argument is a permutation matrix or a
// polyomino matrix, depending on the universe.
struct ClassOracle {
  std::string name;
  Universe universe = Universe::Polyominoes;
  std::function<bool(const BinaryMatrix&)> member;
};

ClassOracle permutationClass(std::string name, std::function<bool(const Permutation&)> member);
ClassOracle polyominoClass(std::string name, std::function<bool(const Polyomino&)> member);
// Av(patterns) in the given universe.
ClassOracle avoidanceClass(std::string name, Universe universe, const PatternSet& patterns);

// The bounded universe: permutations of size 1..bound, or polyominoes with
// semi-perimeter 2..bound. Throws CapExceeded above kMaxAvPermSize
// (resp. kMaxAvSemiPerimeter).
std::vector<BinaryMatrix> boundedUniverse(Universe universe, int bound);

// Av(patterns) equals the class on the bounded universe.
bool describesClass(const PatternSet& patterns, const ClassOracle& c, int bound);

// ---------------------------------------------------------------------------
// Bases

// A computed basis. complete is true only when the result does not depend on
// the bound.
struct BasisReport {
  std::string className;
  int bound = 0;
  bool complete = false;
  PatternSet basis;
};

nlohmann::json basisReportToJson(const BasisReport& r);
// Throws ParseError.
BasisReport basisReportFromJson(const nlohmann::json& j);

// Cap on the size of the permutations built by minimalPermsContaining.
constexpr int kMaxMinimalPermSize = 9;

// Minimal permutations containing q: q with one row inserted for each zero
// column and one column inserted for each zero row, every inserted line
// holding a single 1 that falls in a zero line of q. Their size is
// rows + zero columns = columns + zero rows. Sorted. Throws CapExceeded when
// that size exceeds kMaxMinimalPermSize.
std::vector<Permutation> minimalPermsContaining(const QuasiPermMatrix& q);

// p contains a member of m, and no proper submatrix of p that is a
// polyomino does. Throws CapExceeded for semi-perimeter above 20.
bool isMinimalContaining(const Polyomino& p, const PatternSet& m);

// The p-basis of Av(mBasis). For permutations it is exact (complete) and
// bound caps the size of its members, throwing CapExceeded beyond. For
// polyominoes it lists the minimal polyominoes containing a member of
// mBasis with semi-perimeter <= bound and is never marked complete.
BasisReport pBasisFromMBasis(const PatternSet& mBasis, Universe universe, int bound, std::string className = "");

constexpr int kMaxCanonicalDim = 4;
constexpr int kMaxCanonicalSearchSp = 10;

// The minimal matrices with at most dimBound rows and columns that are not
// submatrices of a member of the class. For permutation classes candidates
// are quasi-permutation matrices, and membership of a candidate in the
// closure is decided exactly through minimalPermsContaining. For polyomino
// classes the closure is built from members with semi-perimeter <= searchSp
// (default dimBound * 2 + 2, at most kMaxCanonicalSearchSp). Never complete.
// Throws CapExceeded.
BasisReport canonicalMBasis(const ClassOracle& c, int dimBound, int searchSp = 0);

// The inclusion-minimal subsets B of the canonical m-basis with Av(B) equal
// to the class on the bounded universe, each checked not to allow replacing
// a matrix by a proper submatrix. Sorted. Throws IdentityFailed when the
// canonical set itself does not describe the class on that universe and
// CapExceeded for more than 16 canonical matrices.
std::vector<PatternSet> minimalMBases(const PatternSet& canonical, const ClassOracle& c, int bound);

// ---------------------------------------------------------------------------
// Robustness and meets

// The maximal common submatrices of a and b. Throws CapExceeded when a has
// more than 20 rows plus columns.
std::vector<BinaryMatrix> meet(const BinaryMatrix& a, const BinaryMatrix& b);

// Av(M) is robust iff M is a polyomino.
bool isRobustSingleton(const BinaryMatrix& m);

// A class is robust iff its p-basis lies in its canonical m-basis, that is
// iff every matrix obtained from a p-basis element by deleting one row or
// column is a submatrix of some member. The search looks for such members
// with semi-perimeter <= bound. When all are found the class is robust for
// certain. Otherwise the result is "not robust within the bound" and the
// witness is the m-basis obtained by that replacement.
struct RobustnessReport {
  bool robust = true;
  bool certain = true;
  std::optional<PatternSet> witness;
};
RobustnessReport isRobust(const PatternSet& pBasis, int bound);

// The sufficient condition for Av(p1, p2): every element of the meet is a
// polyomino, or every chain from it up to p1 (resp. p2) passes through a
// polyomino other than p1 (resp. p2).
bool robustByMeetCondition(const BinaryMatrix& p1, const BinaryMatrix& p2);

// Member k >= 2 of an infinite antichain in the p-basis of
// Av([1 0 0 1; 1 1 0 1]): a (k + 2) x (k + 3) staircase whose left column is
// full, whose top row starts with three cells, whose rows below hold two
// cells shifted one column right per row, and whose bottom row is 1 1 0..0 1.
Polyomino infiniteAntichainMember(int k);

// ---------------------------------------------------------------------------
// Padded permutation matrices

enum class Side { Top, Bottom, Left, Right };

// The permutation matrix of tau with a row (Top, Bottom) or column (Left,
// Right) of zeros added on that side.
BinaryMatrix paddedPermutationMatrix(const Permutation& tau, Side side);

// ---------------------------------------------------------------------------
// Finite posets

class FinitePoset {
 public:
  // leq[i][j] is i <= j. Throws NotAPartialOrder unless it is reflexive,
  // antisymmetric and transitive, and InvalidArgument for a non-square table
  // or a label count that does not match.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);
  static FinitePoset fromRelation(std::vector<std::string> labels,
                                  const std::function<bool(int, int)>& leq);

  static FinitePoset singleton();
  static FinitePoset chain(int n);
  static FinitePoset antichain(int n);
  // Subsets of {1..n} ordered by inclusion, labelled like "{1,3}".
  static FinitePoset booleanLattice(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  bool leq(int i, int j) const { return leq_[i][j]; }
  bool less(int i, int j) const { return i != j && leq_[i][j]; }

  // Pairs (x, y) with y covering x.
  std::vector<std::pair<int, int>> covers() const;
  std::vector<int> minimalElements() const;
  std::vector<int> maximalElements() const;
  // Points strictly above (resp. below) every point of ys.
  std::vector<int> filter(const std::vector<int>& ys) const;
  std::vector<int> ideal(const std::vector<int>& ys) const;
  // Length of the longest chain.
  int rank() const;
  // Throws CapExceeded above kMaxLinearExtensionElements.
  std::uint64_t linearExtensionCount() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

constexpr int kMaxLinearExtensionElements = 20;

// Labels of P come first, then those of Q.
FinitePoset disjointUnion(const FinitePoset& p, const FinitePoset& q);
FinitePoset ordinalSum(const FinitePoset& p, const FinitePoset& q);
// Element (x, y) has index x * |Q| + y and label "(x,y)".
FinitePoset cartesianProduct(const FinitePoset& p, const FinitePoset& q);

}  // namespace polyenum
