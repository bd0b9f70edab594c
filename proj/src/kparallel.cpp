#include "polyenum/kparallel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "polyenum/classify.hpp"
#include "polyenum/error.hpp"

namespace polyenum {

int MonotonePath::sides() const {
  if (steps.empty()) return 0;
  int n = 1;
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (steps[i] != steps[i - 1]) ++n;
  return n;
}

int widthOf(const std::string& word) { return static_cast<int>(std::count(word.begin(), word.end(), 'e')); }
int heightOf(const std::string& word) { return static_cast<int>(std::count(word.begin(), word.end(), 'n')); }

bool isFlatWord(const std::string& word) {
  return !word.empty() && std::all_of(word.begin(), word.end(), [&](char c) { return c == word[0]; });
}

namespace {

void requireParallelogram(const Polyomino& p) {
  if (!isParallelogram(p)) throw Error(Errc::NotParallelogram, "expected a parallelogram polyomino");
}

bool firstColumnSingle(const Polyomino& p) { return p.width() > 1 && !p.contains({1, 0}); }
bool bottomRowSingle(const Polyomino& p) { return p.height() > 1 && !p.contains({0, 1}); }

// Greedy walk from S; returns an empty path if the first side would be empty.
MonotonePath greedy(const Polyomino& p, bool north) {
  const Cell end{p.height() - 1, p.width() - 1};
  MonotonePath path;
  Cell cur{0, 0};
  path.cells.push_back(cur);
  while (cur != end) {
    const std::size_t before = path.cells.size();
    while (true) {
      const Cell next = north ? Cell{cur.row + 1, cur.col} : Cell{cur.row, cur.col + 1};
      if (!p.contains(next)) break;
      cur = next;
      path.cells.push_back(cur);
      path.steps += north ? 'n' : 'e';
    }
    if (path.cells.size() == before && before > 1)
      throw std::logic_error("greedy path stalled inside a parallelogram polyomino");
    if (path.cells.size() == before) return {};
    north = !north;
  }
  return path;
}

// A boundary step met by a side of h or v: an east step of the upper path
// (in column `index`) or a north step of the lower path (in row `index`).
struct Hit {
  bool east;
  int index;
};

std::vector<Hit> hitsOf(const MonotonePath& path) {
  std::vector<Hit> out;
  for (std::size_t i = 0; i < path.steps.size(); ++i) {
    if (i + 1 == path.steps.size() || path.steps[i + 1] != path.steps[i]) {
      const Cell c = path.cells[i + 1];
      if (path.steps[i] == 'n') {
        out.push_back({true, c.col});
      } else {
        out.push_back({false, c.row});
      }
    }
  }
  return out;
}

int colTop(const Polyomino& p, int j) { return 63 - std::countl_zero(p.matrix().colMask(j)); }
int rowEnd(const Polyomino& p, int i) { return 63 - std::countl_zero(p.matrix().rowMask(i)); }

void invalid(const std::string& what) { throw Error(Errc::InvalidDecomposition, what); }

}  // namespace

MonotonePath pathV(const Polyomino& p) {
  requireParallelogram(p);
  return firstColumnSingle(p) ? greedy(p, false) : greedy(p, true);
}

MonotonePath pathH(const Polyomino& p) {
  requireParallelogram(p);
  return bottomRowSingle(p) ? greedy(p, true) : greedy(p, false);
}

Cell cellC(const Polyomino& p) {
  const MonotonePath h = pathH(p);
  const MonotonePath v = pathV(p);
  std::size_t common = 0;
  while (common < h.cells.size() && common < v.cells.size() &&
         h.cells[h.cells.size() - 1 - common] == v.cells[v.cells.size() - 1 - common])
    ++common;
  if (common <= 1) return h.cells.back();
  return h.cells[h.cells.size() - common];
}

std::string kindName(KParKind kind) {
  switch (kind) {
    case KParKind::Flat: return "flat";
    case KParKind::Up: return "up";
    case KParKind::Right: return "right";
  }
  return "unknown";
}

KParClass classifyKPar(const Polyomino& p) {
  const MonotonePath h = pathH(p);
  const MonotonePath v = pathV(p);
  const int k = std::min(h.changes(), v.changes());
  if (k == 0) throw Error(Errc::DegreeZero, "bars have convexity degree 0");
  const Cell e{p.height() - 1, p.width() - 1};
  if (cellC(p) == e) return {KParKind::Flat, k};
  return {h.steps.back() == 'n' ? KParKind::Up : KParKind::Right, k};
}

std::string upperPath(const Polyomino& p) {
  std::string out;
  int y = 0;
  for (int j = 0; j < p.width(); ++j) {
    const int top = colTop(p, j) + 1;
    out.append(top - y, 'n');
    y = top;
    out += 'e';
  }
  return out;
}

std::string lowerPath(const Polyomino& p) {
  std::string out;
  int x = 0;
  for (int i = 0; i < p.height(); ++i) {
    const int right = rowEnd(p, i) + 1;
    out.append(right - x, 'e');
    x = right;
    out += 'n';
  }
  return out;
}

Polyomino fromBoundaryPaths(const std::string& upper, const std::string& lower) {
  const int w = widthOf(upper);
  const int h = heightOf(upper);
  if (w < 1 || h < 1 || widthOf(lower) != w || heightOf(lower) != h ||
      static_cast<int>(upper.size() + lower.size()) != 2 * (w + h))
    invalid("boundary paths must be words over {n,e} with the same endpoints");
  std::vector<int> top, bottom;
  int y = 0;
  for (char c : upper) {
    if (c == 'n') ++y;
    else top.push_back(y);
  }
  y = 0;
  for (char c : lower) {
    if (c == 'n') ++y;
    else bottom.push_back(y);
  }
  BinaryMatrix m(h, w);
  for (int j = 0; j < w; ++j) {
    if (bottom[j] >= top[j]) invalid("boundary paths touch before the end");
    for (int i = bottom[j]; i < top[j]; ++i) m.set(i, j, true);
  }
  if (!isPolyomino(m)) invalid("boundary paths do not enclose a polyomino");
  Polyomino p = validatePolyomino(m);
  if (!isParallelogram(p) || upperPath(p) != upper || lowerPath(p) != lower)
    invalid("boundary paths do not bound a parallelogram polyomino");
  return p;
}

Decomposition decompose(const Polyomino& p) {
  const MonotonePath h = pathH(p);
  const MonotonePath v = pathV(p);
  const int k = std::min(h.changes(), v.changes());
  if (k == 0) throw Error(Errc::DegreeZero, "bars have convexity degree 0");

  // Boundary steps met by v are X_1, Y_2, X_3, ... and by h Y_1, X_2, ...
  // When the first column (bottom row) is one cell, v (h) first meets the
  // top (right) edge of S and then follows the other path.
  std::vector<Hit> hv = hitsOf(v);
  std::vector<Hit> hh = hitsOf(h);
  if (firstColumnSingle(p)) hv.insert(hv.begin(), Hit{true, 0});
  if (bottomRowSingle(p)) hh.insert(hh.begin(), Hit{false, 0});

  std::vector<int> xPos(k + 2), yPos(k + 2);
  for (int i = 1; i <= k + 1; ++i) {
    const bool oddI = i % 2 == 1;
    const Hit x = oddI ? hv.at(i - 1) : hh.at(i - 1);
    const Hit y = oddI ? hh.at(i - 1) : hv.at(i - 1);
    if (!x.east || y.east) throw std::logic_error("boundary step labels out of order");
    xPos[i] = x.index + colTop(p, x.index) + 1;
    yPos[i] = y.index + rowEnd(p, y.index) + 1;
  }

  const std::string up = upperPath(p);
  const std::string low = lowerPath(p);
  Decomposition d;
  d.k = k;
  d.alpha.resize(k);
  d.beta.resize(k);
  d.alpha[0] = up.substr(xPos[k], xPos[k + 1] - xPos[k] + 1);
  d.beta[0] = low.substr(yPos[k], yPos[k + 1] - yPos[k] + 1);
  for (int i = 2; i <= k; ++i) {
    const int xa = xPos[k + 1 - i], xb = xPos[k + 2 - i];
    const int ya = yPos[k + 1 - i], yb = yPos[k + 2 - i];
    if (xb < xa || yb < ya) throw std::logic_error("boundary steps out of order");
    d.alpha[i - 1] = up.substr(xa, xb - xa);
    d.beta[i - 1] = low.substr(ya, yb - ya);
  }
  return d;
}

void checkDecomposition(const Decomposition& d) {
  const int k = d.k;
  if (k < 1) invalid("k >= 1");
  if (static_cast<int>(d.alpha.size()) != k || static_cast<int>(d.beta.size()) != k)
    invalid("exactly k alpha and k beta paths");
  for (const auto* words : {&d.alpha, &d.beta})
    for (const auto& w : *words)
      if (w.find_first_not_of("ne") != std::string::npos) invalid("paths are words over {n,e}");
  const std::string& a1 = d.alpha[0];
  const std::string& b1 = d.beta[0];
  if (a1.empty()) invalid("alpha_1 is nonempty");
  if (b1.empty()) invalid("beta_1 is nonempty");
  for (int i = 0; i < k; ++i) {
    if (!d.alpha[i].empty() && d.alpha[i].front() != 'e')
      invalid("alpha_" + std::to_string(i + 1) + " starts with an east step");
    if (!d.beta[i].empty() && d.beta[i].front() != 'n')
      invalid("beta_" + std::to_string(i + 1) + " starts with a north step");
  }
  if (a1 != "e" && a1.back() != 'e') invalid("alpha_1 ends with an east step");
  if (b1 != "n" && b1.back() != 'n') invalid("beta_1 ends with a north step");
  if (k >= 2) {
    if (widthOf(a1) != widthOf(d.beta[1]) + 1) invalid("width(alpha_1) = width(beta_2) + 1");
    if (heightOf(b1) != heightOf(d.alpha[1]) + 1) invalid("height(beta_1) = height(alpha_2) + 1");
  }
  for (int i = 2; i < k; ++i) {
    if (widthOf(d.alpha[i - 1]) != widthOf(d.beta[i]))
      invalid("width(alpha_" + std::to_string(i) + ") = width(beta_" + std::to_string(i + 1) + ")");
    if (heightOf(d.beta[i - 1]) != heightOf(d.alpha[i]))
      invalid("height(beta_" + std::to_string(i) + ") = height(alpha_" + std::to_string(i + 1) + ")");
  }
}

Polyomino recompose(const Decomposition& d) {
  checkDecomposition(d);
  const int k = d.k;
  // Height of the first column and width of the bottom row.
  const int a = k >= 2 ? heightOf(d.beta[k - 1]) + 1 : heightOf(d.beta[0]);
  const int b = k >= 2 ? widthOf(d.alpha[k - 1]) + 1 : widthOf(d.alpha[0]);
  std::string upper(a, 'n');
  std::string lower(b, 'e');
  for (int i = k - 1; i >= 0; --i) {
    upper += d.alpha[i];
    lower += d.beta[i];
  }
  // Whatever is left of the boundary after alpha_1 (beta_1) is a run of east
  // (north) steps.
  const int extraE = widthOf(lower) - widthOf(upper);
  const int extraN = heightOf(upper) - heightOf(lower);
  if (extraE < 0 || extraN < 0) invalid("alpha and beta paths have compatible sizes");
  upper.append(extraE, 'e');
  lower.append(extraN, 'n');
  Polyomino p = fromBoundaryPaths(upper, lower);
  Decomposition back;
  try {
    back = decompose(p);
  } catch (const Error&) {
    invalid("rebuilt polyomino has positive degree");
  }
  if (back != d) invalid("decomposition is the one of the rebuilt polyomino");
  return p;
}

}  // namespace polyenum
