#include "polyenum/classify.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "polyenum/error.hpp"

namespace polyenum {

namespace {

bool contiguous(std::uint64_t mask) {
  if (mask == 0) return true;
  const std::uint64_t shifted = mask >> std::countr_zero(mask);
  return (shifted & (shifted + 1)) == 0;
}

// Row and column spans of a convex polyomino.
struct Spans {
  std::vector<int> rowLo, rowHi;  // column range of each row
  std::vector<int> colLo, colHi;  // row range of each column

  explicit Spans(const Polyomino& p) {
    const auto& m = p.matrix();
    for (int i = 0; i < m.rows(); ++i) {
      rowLo.push_back(std::countr_zero(m.rowMask(i)));
      rowHi.push_back(63 - std::countl_zero(m.rowMask(i)));
    }
    for (int j = 0; j < m.cols(); ++j) {
      const std::uint64_t c = m.colMask(j);
      colLo.push_back(std::countr_zero(c));
      colHi.push_back(63 - std::countl_zero(c));
    }
  }
};

int sign(int x) { return (x > 0) - (x < 0); }

// Greedy path from a to b starting vertically (or horizontally); every side
// is as long as the polyomino and the target allow.
std::optional<int> greedy(const Spans& s, Cell a, Cell b, bool vertical) {
  const int dr = sign(b.row - a.row);
  const int dc = sign(b.col - a.col);
  Cell cur = a;
  int sides = 0;
  bool moveVertical = vertical;
  int stalls = 0;
  while (cur != b) {
    Cell next = cur;
    if (moveVertical) {
      if (dr > 0) next.row = std::min(b.row, s.colHi[cur.col]);
      if (dr < 0) next.row = std::max(b.row, s.colLo[cur.col]);
    } else {
      if (dc > 0) next.col = std::min(b.col, s.rowHi[cur.row]);
      if (dc < 0) next.col = std::max(b.col, s.rowLo[cur.row]);
    }
    if (next == cur) {
      if (sides == 0) return std::nullopt;  // cannot start in this direction
      if (++stalls > 1) return std::nullopt;
    } else {
      ++sides;
      stalls = 0;
      cur = next;
    }
    moveVertical = !moveVertical;
  }
  return sides == 0 ? 0 : sides - 1;
}

}  // namespace

bool isColumnConvex(const Polyomino& p) {
  for (int j = 0; j < p.width(); ++j)
    if (!contiguous(p.matrix().colMask(j))) return false;
  return true;
}

bool isRowConvex(const Polyomino& p) {
  for (int i = 0; i < p.height(); ++i)
    if (!contiguous(p.matrix().rowMask(i))) return false;
  return true;
}

bool isConvex(const Polyomino& p) { return isColumnConvex(p) && isRowConvex(p); }

bool isDirected(const Polyomino& p) {
  const auto& m = p.matrix();
  std::vector<std::uint64_t> reach(m.rows(), 0);
  const std::uint64_t bottom = m.rowMask(0);
  reach[0] = bottom & (~bottom + 1);
  for (int i = 0; i < m.rows(); ++i) {
    if (i > 0) reach[i] = reach[i - 1] & m.rowMask(i);
    // East steps spread each reached cell to the right along its run.
    std::uint64_t prev = 0;
    while (reach[i] != prev) {
      prev = reach[i];
      reach[i] |= (reach[i] << 1) & m.rowMask(i);
    }
    if (reach[i] != m.rowMask(i)) return false;
  }
  return true;
}

bool isDirectedConvex(const Polyomino& p) { return isConvex(p) && isDirected(p); }

namespace {

bool corner(const Polyomino& p, bool top, bool right) {
  return p.matrix().at(top ? p.height() - 1 : 0, right ? p.width() - 1 : 0);
}

}  // namespace

bool isParallelogram(const Polyomino& p) {
  return isConvex(p) && corner(p, false, false) && corner(p, true, true);
}

bool isStack(const Polyomino& p) { return isConvex(p) && corner(p, false, false) && corner(p, false, true); }

bool isFerrer(const Polyomino& p) { return isStack(p) && corner(p, true, false); }

bool isLConvex(const Polyomino& p) { return isConvex(p) && convexityDegree(p) <= 1; }

bool isKConvex(const Polyomino& p, int k) { return isConvex(p) && convexityDegree(p) <= k; }

bool belongsTo(const Polyomino& p, const FamilyTag& tag) {
  switch (tag.family) {
    case Family::ColumnConvex: return isColumnConvex(p);
    case Family::RowConvex: return isRowConvex(p);
    case Family::Convex: return isConvex(p);
    case Family::Directed: return isDirected(p);
    case Family::DirectedConvex: return isDirectedConvex(p);
    case Family::Parallelogram: return isParallelogram(p);
    case Family::Stack: return isStack(p);
    case Family::Ferrer: return isFerrer(p);
    case Family::LConvex: return isLConvex(p);
    case Family::KConvex: return isKConvex(p, tag.k);
  }
  return false;
}

std::optional<int> greedyPairChanges(const Polyomino& p, Cell a, Cell b) {
  const Spans s(p);
  auto v = greedy(s, a, b, true);
  auto h = greedy(s, a, b, false);
  if (v && h) return std::min(*v, *h);
  return v ? v : h;
}

int convexityDegree(const Polyomino& p) {
  if (!isConvex(p)) throw Error(Errc::NotConvex, "convexity degree needs a convex polyomino");
  const Spans s(p);
  std::vector<Cell> cells;
  for (int i = 0; i < p.height(); ++i)
    for (int j = s.rowLo[i]; j <= s.rowHi[i]; ++j) cells.push_back({i, j});
  int degree = 0;
  for (std::size_t x = 0; x < cells.size(); ++x) {
    for (std::size_t y = x + 1; y < cells.size(); ++y) {
      const Cell a = cells[x], b = cells[y];
      if (a.row == b.row || a.col == b.col) continue;
      auto v = greedy(s, a, b, true);
      auto h = greedy(s, a, b, false);
      if (!v && !h) throw std::logic_error("no greedy monotone path in a convex polyomino");
      const int best = std::min(v.value_or(1 << 20), h.value_or(1 << 20));
      degree = std::max(degree, best);
    }
  }
  return degree;
}

std::vector<Rect> maximalRectangles(const Polyomino& p) {
  const auto& m = p.matrix();
  std::vector<Rect> all;
  for (int r0 = 0; r0 < m.rows(); ++r0) {
    for (int r1 = r0; r1 < m.rows(); ++r1) {
      std::uint64_t common = lowMask(m.cols());
      for (int i = r0; i <= r1; ++i) common &= m.rowMask(i);
      if (common == 0) break;
      // Each maximal run of the common mask spans a rectangle.
      std::uint64_t rest = common;
      while (rest != 0) {
        const int lo = std::countr_zero(rest);
        int hi = lo;
        while (hi + 1 < m.cols() && ((rest >> (hi + 1)) & 1U)) ++hi;
        all.push_back({r0, r1, lo, hi});
        rest &= ~(lowMask(hi + 1) & ~lowMask(lo));
      }
    }
  }
  auto inside = [](const Rect& a, const Rect& b) {
    return b.rowLo <= a.rowLo && a.rowHi <= b.rowHi && b.colLo <= a.colLo && a.colHi <= b.colHi;
  };
  std::vector<Rect> out;
  for (const auto& r : all) {
    bool maximal = true;
    for (const auto& o : all)
      if (o != r && inside(r, o)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool maximalRectanglesPairwiseCross(const Polyomino& p) {
  const auto rects = maximalRectangles(p);
  auto crosses = [](const Rect& a, const Rect& b) {
    return a.rowLo <= b.rowLo && b.rowHi <= a.rowHi && b.colLo <= a.colLo && a.colHi <= b.colHi;
  };
  for (std::size_t x = 0; x < rects.size(); ++x)
    for (std::size_t y = x + 1; y < rects.size(); ++y)
      if (!crosses(rects[x], rects[y]) && !crosses(rects[y], rects[x])) return false;
  return true;
}

std::string FamilyTag::name() const {
  switch (family) {
    case Family::ColumnConvex: return "column-convex";
    case Family::RowConvex: return "row-convex";
    case Family::Convex: return "convex";
    case Family::Directed: return "directed";
    case Family::DirectedConvex: return "directed-convex";
    case Family::Parallelogram: return "parallelogram";
    case Family::Stack: return "stack";
    case Family::Ferrer: return "ferrer";
    case Family::LConvex: return "l-convex";
    case Family::KConvex: return "k-convex:" + std::to_string(k);
  }
  return "unknown";
}

FamilyTag FamilyTag::parse(const std::string& name) {
  static const std::pair<const char*, Family> names[] = {
      {"column-convex", Family::ColumnConvex}, {"row-convex", Family::RowConvex},
      {"convex", Family::Convex},              {"directed", Family::Directed},
      {"directed-convex", Family::DirectedConvex}, {"parallelogram", Family::Parallelogram},
      {"stack", Family::Stack},                {"ferrer", Family::Ferrer},
      {"l-convex", Family::LConvex},
  };
  for (const auto& [n, f] : names)
    if (name == n) return {f, 0};
  const std::string prefix = "k-convex:";
  if (name.rfind(prefix, 0) == 0) {
    try {
      const int k = std::stoi(name.substr(prefix.size()));
      if (k >= 0) return {Family::KConvex, k};
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::UnknownFamily, "unknown family '" + name + "'");
}

}  // namespace polyenum
