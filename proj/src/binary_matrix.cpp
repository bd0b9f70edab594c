#include "polyenum/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "polyenum/error.hpp"

namespace polyenum {

std::uint64_t lowMask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
  if (rows < 1 || cols < 1) throw Error(Errc::InvalidArgument, "matrix dimensions must be positive");
  if (cols > kMaxCols) throw Error(Errc::InvalidArgument, "at most 64 columns are supported");
}

BinaryMatrix BinaryMatrix::fromTopRows(const std::vector<std::string>& topRows) {
  if (topRows.empty()) throw Error(Errc::ParseError, "no rows");
  const int r = static_cast<int>(topRows.size());
  const int c = static_cast<int>(topRows.front().size());
  BinaryMatrix m(r, c);
  for (int t = 0; t < r; ++t) {
    const std::string& line = topRows[t];
    if (static_cast<int>(line.size()) != c) throw Error(Errc::ParseError, "ragged rows");
    for (int j = 0; j < c; ++j) {
      if (line[j] == '1') {
        m.set(r - 1 - t, j, true);
      } else if (line[j] != '0') {
        throw Error(Errc::ParseError, std::string("unexpected character '") + line[j] + "'");
      }
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::fromRowMasks(int cols, std::vector<std::uint64_t> bottomRows) {
  BinaryMatrix m(static_cast<int>(bottomRows.size()), cols);
  for (auto& row : bottomRows) row &= lowMask(cols);
  m.bits_ = std::move(bottomRows);
  return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](char ch) { return ch == ' ' || ch == '\r' || ch == '\t'; }),
               line.end());
    if (!line.empty()) lines.push_back(line);
  }
  return fromTopRows(lines);
}

void BinaryMatrix::set(int i, int j, bool v) {
  if (v) {
    bits_[i] |= std::uint64_t{1} << j;
  } else {
    bits_[i] &= ~(std::uint64_t{1} << j);
  }
}

std::uint64_t BinaryMatrix::colMask(int j) const {
  std::uint64_t out = 0;
  for (int i = 0; i < rows_; ++i) out |= ((bits_[i] >> j) & 1U) << i;
  return out;
}

int BinaryMatrix::count() const {
  int n = 0;
  for (auto row : bits_) n += std::popcount(row);
  return n;
}

int BinaryMatrix::rowSum(int i) const { return std::popcount(bits_[i]); }

int BinaryMatrix::colSum(int j) const {
  int n = 0;
  for (auto row : bits_) n += static_cast<int>((row >> j) & 1U);
  return n;
}

std::vector<std::string> BinaryMatrix::topRows() const {
  std::vector<std::string> out;
  out.reserve(rows_);
  for (int i = rows_ - 1; i >= 0; --i) {
    std::string line(cols_, '0');
    for (int j = 0; j < cols_; ++j)
      if (at(i, j)) line[j] = '1';
    out.push_back(std::move(line));
  }
  return out;
}

std::string BinaryMatrix::toText() const {
  std::string out;
  for (const auto& line : topRows()) {
    out += line;
    out += '\n';
  }
  return out;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j)) t.set(j, i, true);
  return t;
}

BinaryMatrix BinaryMatrix::mirrorColumns() const {
  BinaryMatrix t(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j)) t.set(i, cols_ - 1 - j, true);
  return t;
}

BinaryMatrix BinaryMatrix::mirrorRows() const {
  BinaryMatrix t = *this;
  std::reverse(t.bits_.begin(), t.bits_.end());
  return t;
}

BinaryMatrix BinaryMatrix::rotate90() const {
  // (i, j) -> (j, rows-1-i): the bottom row becomes the rightmost column.
  BinaryMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j)) t.set(j, rows_ - 1 - i, true);
  return t;
}

BinaryMatrix BinaryMatrix::complement() const {
  BinaryMatrix t(rows_, cols_);
  for (int i = 0; i < rows_; ++i) t.bits_[i] = ~bits_[i] & lowMask(cols_);
  return t;
}

BinaryMatrix BinaryMatrix::submatrix(const std::vector<int>& rowIdx, const std::vector<int>& colIdx) const {
  BinaryMatrix t(static_cast<int>(rowIdx.size()), static_cast<int>(colIdx.size()));
  for (std::size_t a = 0; a < rowIdx.size(); ++a) {
    const std::uint64_t row = bits_[rowIdx[a]];
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < colIdx.size(); ++b) out |= ((row >> colIdx[b]) & 1U) << b;
    t.bits_[a] = out;
  }
  return t;
}

BinaryMatrix BinaryMatrix::withoutRow(int i) const {
  BinaryMatrix t = *this;
  t.bits_.erase(t.bits_.begin() + i);
  --t.rows_;
  return t;
}

BinaryMatrix BinaryMatrix::withoutColumn(int j) const {
  BinaryMatrix t = *this;
  const std::uint64_t low = lowMask(j);
  for (auto& row : t.bits_) row = (row & low) | ((row >> 1) & ~low);
  --t.cols_;
  return t;
}

namespace {

// Row masks store column j at bit j, so reading left to right corresponds
// to comparing from the lowest bit.
std::strong_ordering compareRows(std::uint64_t a, std::uint64_t b) {
  if (a == b) return std::strong_ordering::equal;
  const int j = std::countr_zero(a ^ b);
  return ((a >> j) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace

std::strong_ordering BinaryMatrix::operator<=>(const BinaryMatrix& o) const {
  if (auto c = rows_ <=> o.rows_; c != 0) return c;
  if (auto c = cols_ <=> o.cols_; c != 0) return c;
  for (int i = rows_ - 1; i >= 0; --i)
    if (auto c = compareRows(bits_[i], o.bits_[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t BinaryMatrix::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(rows_) << 8) ^ cols_;
  for (auto row : bits_) {
    h ^= row + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::pair<std::vector<int>, std::vector<int>> projections(const BinaryMatrix& m) {
  std::vector<int> rowSums(m.rows()), colSums(m.cols());
  for (int i = 0; i < m.rows(); ++i) rowSums[i] = m.rowSum(i);
  for (int j = 0; j < m.cols(); ++j) colSums[j] = m.colSum(j);
  return {rowSums, colSums};
}

std::vector<BinaryMatrix> allSubmatrices(const BinaryMatrix& m) {
  if (m.rows() > 20 || m.cols() > 20) throw Error(Errc::CapExceeded, "submatrix listing limited to 20x20");
  std::set<BinaryMatrix> seen;
  std::vector<int> rowIdx, colIdx;
  for (std::uint32_t rs = 1; rs < (1U << m.rows()); ++rs) {
    rowIdx.clear();
    for (int i = 0; i < m.rows(); ++i)
      if ((rs >> i) & 1U) rowIdx.push_back(i);
    for (std::uint32_t cs = 1; cs < (1U << m.cols()); ++cs) {
      colIdx.clear();
      for (int j = 0; j < m.cols(); ++j)
        if ((cs >> j) & 1U) colIdx.push_back(j);
      seen.insert(m.submatrix(rowIdx, colIdx));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string_view errcName(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::NotConnected: return "NotConnected";
    case Errc::LooseBoundingBox: return "LooseBoundingBox";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotAPermutation: return "NotAPermutation";
    case Errc::NotAPermutationMatrix: return "NotAPermutationMatrix";
    case Errc::NotQuasiPermutation: return "NotQuasiPermutation";
    case Errc::NotConvex: return "NotConvex";
    case Errc::NotParallelogram: return "NotParallelogram";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::InvalidDecomposition: return "InvalidDecomposition";
    case Errc::NonInvertibleConstantTerm: return "NonInvertibleConstantTerm";
    case Errc::NonSquareConstantTerm: return "NonSquareConstantTerm";
    case Errc::ConstantTermNotZero: return "ConstantTermNotZero";
    case Errc::IdentityFailed: return "IdentityFailed";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::MalformedTree: return "MalformedTree";
    case Errc::NotAPartialOrder: return "NotAPartialOrder";
    case Errc::CorruptCache: return "CorruptCache";
  }
  return "Unknown";
}

}  // namespace polyenum
