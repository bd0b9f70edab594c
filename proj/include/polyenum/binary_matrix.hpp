#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyenum {

// A 0/1 grid. Row 0 is the BOTTOM row, column 0 the leftmost one; the
// text and JSON forms list rows top first. At most 64 columns.
class BinaryMatrix {
 public:
  static constexpr int kMaxCols = 64;

  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);

  // Rows given top first, each a string of '0'/'1'.
  static BinaryMatrix fromTopRows(const std::vector<std::string>& topRows);
  // Rows given bottom first as column bitmasks.
  static BinaryMatrix fromRowMasks(int cols, std::vector<std::uint64_t> bottomRows);
  static BinaryMatrix parse(std::string_view text);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  bool at(int i, int j) const { return (bits_[i] >> j) & 1U; }
  void set(int i, int j, bool v);
  std::uint64_t rowMask(int i) const { return bits_[i]; }
  std::uint64_t colMask(int j) const;  // bit i = entry (i, j)
  const std::vector<std::uint64_t>& rowMasks() const { return bits_; }

  int count() const;
  int rowSum(int i) const;
  int colSum(int j) const;

  std::vector<std::string> topRows() const;
  std::string toText() const;

  BinaryMatrix transpose() const;
  BinaryMatrix mirrorColumns() const;  // left-right reflection
  BinaryMatrix mirrorRows() const;     // top-bottom reflection
  BinaryMatrix rotate90() const;       // quarter turn counterclockwise
  BinaryMatrix complement() const;

  // Rows and columns given as increasing index lists.
  BinaryMatrix submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const;
  BinaryMatrix withoutRow(int i) const;
  BinaryMatrix withoutColumn(int j) const;

  bool operator==(const BinaryMatrix& o) const = default;
  // Canonical order: rows, then cols, then entries read from the top row
  // down and left to right within a row.
  std::strong_ordering operator<=>(const BinaryMatrix& o) const;

  std::size_t hash() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct BinaryMatrixHash {
  std::size_t operator()(const BinaryMatrix& m) const { return m.hash(); }
};

std::uint64_t lowMask(int n);

// Row sums bottom to top and column sums left to right.
std::pair<std::vector<int>, std::vector<int>> projections(const BinaryMatrix& m);

// All distinct submatrices obtained by keeping a nonempty set of rows and
// columns, sorted canonically. Includes m itself.
std::vector<BinaryMatrix> allSubmatrices(const BinaryMatrix& m);

}  // namespace polyenum
