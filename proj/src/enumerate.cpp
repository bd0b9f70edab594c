#include "polyenum/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "polyenum/error.hpp"

namespace polyenum {

namespace {

constexpr int kMaxScanWidth = 30;

std::uint64_t reverseBits(std::uint64_t v, int width) {
  std::uint64_t out = 0;
  for (int j = 0; j < width; ++j)
    if ((v >> j) & 1U) out |= std::uint64_t{1} << (width - 1 - j);
  return out;
}

// Nonzero row masks of the given width, ordered as strings read left to
// right with '0' < '1'.
const std::vector<std::uint64_t>& orderedMasks(int width) {
  static std::map<int, std::vector<std::uint64_t>> cache;
  auto& out = cache[width];
  if (out.empty()) {
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << width); ++v) out.push_back(reverseBits(v, width));
  }
  return out;
}

// Maximal horizontal runs of a row mask.
int splitRuns(std::uint64_t mask, std::array<std::uint64_t, 32>& runs) {
  int n = 0;
  while (mask != 0) {
    const std::uint64_t low = mask & (~mask + 1);
    std::uint64_t run = low;
    while ((run << 1) & mask & ~run) run |= run << 1;
    runs[n++] = run;
    mask &= ~run;
  }
  return n;
}

// Rows are chosen top to bottom. The frontier is the last chosen row, its
// runs tagged with the component they belong to within the rows above.
class RowScan {
 public:
  RowScan(int rows, int cols, int area, const PolyominoVisitor& fn)
      : rows_(rows), cols_(cols), area_(area), fn_(fn), masks_(orderedMasks(cols)), chosen_(rows, 0) {}

  void run() {
    Frontier empty;
    recurse(0, empty, 0, 0);
  }

 private:
  struct Frontier {
    std::array<std::uint64_t, 32> runs{};
    std::array<int, 32> label{};
    int nRuns = 0;
    int nLabels = 0;
  };

  void recurse(int depth, const Frontier& prev, int areaSoFar, std::uint64_t colUnion) {
    const int remaining = rows_ - depth - 1;
    std::uint64_t prevMask = 0;
    for (int r = 0; r < prev.nRuns; ++r) prevMask |= prev.runs[r];
    for (std::uint64_t mask : masks_) {
      if (depth > 0 && (mask & prevMask) == 0) continue;
      const int a = areaSoFar + std::popcount(mask);
      if (area_ >= 0) {
        if (a + remaining > area_) continue;
        if (a + remaining * cols_ < area_) continue;
      }
      Frontier next;
      if (!advance(prev, depth == 0, mask, next)) continue;
      chosen_[depth] = mask;
      const std::uint64_t cu = colUnion | mask;
      if (remaining == 0) {
        if (next.nLabels != 1) continue;
        if (area_ >= 0 && a != area_) continue;
        if (!(cu & 1U) || !((cu >> (cols_ - 1)) & 1U)) continue;
        emit();
      } else {
        recurse(depth + 1, next, a, cu);
      }
    }
  }

  // Links the runs of `mask` to the frontier. Fails when a component of
  // the frontier is not continued by the new row.
  static bool advance(const Frontier& prev, bool first, std::uint64_t mask, Frontier& next) {
    std::array<int, 64> parent{};
    const int base = prev.nLabels;
    next.nRuns = splitRuns(mask, next.runs);
    for (int i = 0; i < base + next.nRuns; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::array<bool, 32> touched{};
    for (int r = 0; r < next.nRuns; ++r) {
      const int self = base + r;
      if (!first) {
        for (int q = 0; q < prev.nRuns; ++q) {
          if (prev.runs[q] & next.runs[r]) {
            touched[prev.label[q]] = true;
            const int a = find(prev.label[q]);
            const int b = find(self);
            if (a != b) parent[b] = a;
          }
        }
      }
    }
    for (int l = 0; l < base; ++l)
      if (!touched[l]) return false;
    std::array<int, 64> relabel;
    relabel.fill(-1);
    int n = 0;
    for (int r = 0; r < next.nRuns; ++r) {
      const int root = find(base + r);
      if (relabel[root] < 0) relabel[root] = n++;
      next.label[r] = relabel[root];
    }
    next.nLabels = n;
    return true;
  }

  void emit() {
    std::vector<std::uint64_t> bottomFirst(chosen_.rbegin(), chosen_.rend());
    fn_(Polyomino::trusted(BinaryMatrix::fromRowMasks(cols_, std::move(bottomFirst))));
  }

  int rows_;
  int cols_;
  int area_;  // -1 when unconstrained
  const PolyominoVisitor& fn_;
  const std::vector<std::uint64_t>& masks_;
  std::vector<std::uint64_t> chosen_;
};

void scanBox(int rows, int cols, int area, const PolyominoVisitor& fn) {
  if (cols > kMaxScanWidth || rows > 32) throw Error(Errc::CapExceeded, "bounding box too large for row scan");
  RowScan(rows, cols, area, fn).run();
}

// ---------------------------------------------------------------------------
// Growth by cell addition. A shape of area n+1 is accepted as a child of
// its parent only when the added cell is the last removable cell of the
// shape in reading order (bottom row first, right to left), so every shape
// has exactly one parent and no lookup table is needed.

bool lastRemovableIs(const BinaryMatrix& q, int row, int col) {
  for (int i = 0; i < q.rows(); ++i) {
    std::uint64_t mask = q.rowMask(i);
    while (mask != 0) {
      const int j = 63 - std::countl_zero(mask);
      mask &= ~(std::uint64_t{1} << j);
      BinaryMatrix without = q;
      without.set(i, j, false);
      if (onesConnected(without)) return i == row && j == col;
    }
  }
  return false;
}

BinaryMatrix addCell(const BinaryMatrix& p, int row, int col, int& newRow, int& newCol) {
  const int shiftR = row < 0 ? 1 : 0;
  const int shiftC = col < 0 ? 1 : 0;
  const int rows = std::max(p.rows(), row + 1) + shiftR;
  const int cols = std::max(p.cols(), col + 1) + shiftC;
  std::vector<std::uint64_t> masks(rows, 0);
  for (int i = 0; i < p.rows(); ++i) masks[i + shiftR] = p.rowMask(i) << shiftC;
  newRow = row + shiftR;
  newCol = col + shiftC;
  masks[newRow] |= std::uint64_t{1} << newCol;
  return BinaryMatrix::fromRowMasks(cols, std::move(masks));
}

void grow(const BinaryMatrix& p, int area, int targetArea, int maxSp, std::vector<BinaryMatrix>& out) {
  if (targetArea >= 0 && area == targetArea) {
    out.push_back(p);
    return;
  }
  if (targetArea < 0) out.push_back(p);
  for (int i = -1; i <= p.rows(); ++i) {
    for (int j = -1; j <= p.cols(); ++j) {
      const bool inside = i >= 0 && i < p.rows() && j >= 0 && j < p.cols();
      if (inside && p.at(i, j)) continue;
      auto occupied = [&](int a, int b) { return a >= 0 && a < p.rows() && b >= 0 && b < p.cols() && p.at(a, b); };
      if (!occupied(i - 1, j) && !occupied(i + 1, j) && !occupied(i, j - 1) && !occupied(i, j + 1)) continue;
      int qi = 0, qj = 0;
      BinaryMatrix q = addCell(p, i, j, qi, qj);
      if (maxSp > 0 && q.rows() + q.cols() > maxSp) continue;
      if (!lastRemovableIs(q, qi, qj)) continue;
      grow(q, area + 1, targetArea, maxSp, out);
    }
  }
}

void checkCaps(EnumerationLimit limit, const EnumerationCaps& caps) {
  if (limit.bound < 1) throw Error(Errc::InvalidArgument, "bound must be positive");
  if (limit.kind == EnumerationLimit::Kind::Area && limit.bound > caps.maxArea)
    throw Error(Errc::CapExceeded, "area " + std::to_string(limit.bound) + " above cap " + std::to_string(caps.maxArea));
  if (limit.kind == EnumerationLimit::Kind::SemiPerimeter && limit.bound > caps.maxSemiPerimeter)
    throw Error(Errc::CapExceeded, "semi-perimeter " + std::to_string(limit.bound) + " above cap " +
                                       std::to_string(caps.maxSemiPerimeter));
}

}  // namespace

void forEachPolyomino(EnumerationLimit limit, const PolyominoVisitor& fn, EnumerationCaps caps,
                      EnumerationStrategy strategy) {
  checkCaps(limit, caps);
  const bool byArea = limit.kind == EnumerationLimit::Kind::Area;
  if (strategy == EnumerationStrategy::Default)
    strategy = byArea ? EnumerationStrategy::Growth : EnumerationStrategy::RowByRow;

  if (strategy == EnumerationStrategy::RowByRow) {
    const int s = limit.bound;
    if (byArea) {
      for (int r = 1; r <= s; ++r)
        for (int c = 1; c <= s; ++c)
          if (r + c - 1 <= s && r * c >= s) scanBox(r, c, s, fn);
    } else {
      for (int r = 1; r < s; ++r) scanBox(r, s - r, -1, fn);
    }
    return;
  }

  std::vector<BinaryMatrix> found;
  BinaryMatrix unit(1, 1);
  unit.set(0, 0, true);
  if (byArea) {
    grow(unit, 1, limit.bound, 0, found);
  } else {
    grow(unit, 1, -1, limit.bound, found);
    std::erase_if(found, [&](const BinaryMatrix& m) { return m.rows() + m.cols() != limit.bound; });
  }
  std::sort(found.begin(), found.end());
  for (auto& m : found) fn(Polyomino::trusted(std::move(m)));
}

std::vector<Polyomino> enumeratePolyominoes(EnumerationLimit limit, EnumerationCaps caps, EnumerationStrategy strategy) {
  std::vector<Polyomino> out;
  forEachPolyomino(limit, [&](const Polyomino& p) { out.push_back(p); }, caps, strategy);
  return out;
}

void forEachPolyominoUpTo(int maxSp, const PolyominoVisitor& fn, EnumerationCaps caps) {
  checkCaps(EnumerationLimit::bySemiPerimeter(maxSp), caps);
  for (int r = 1; r < maxSp; ++r)
    for (int c = 1; r + c <= maxSp; ++c) scanBox(r, c, -1, fn);
}

}  // namespace polyenum
