#include "polyenum/patterns.hpp"

#include <algorithm>
#include <bit>

#include "polyenum/classify.hpp"
#include "polyenum/enumerate.hpp"
#include "polyenum/error.hpp"

namespace polyenum {

// ---------------------------------------------------------------------------
// Generalized patterns

GenPattern::GenPattern(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      cells_(rows, std::string(cols, '*')),
      colBars_(std::max(cols - 1, 0), false),
      rowBars_(std::max(rows - 1, 0), false) {
  if (rows < 1 || cols < 1) throw Error(Errc::InvalidArgument, "a pattern has at least one row and one column");
  if (cols > BinaryMatrix::kMaxCols) throw Error(Errc::CapExceeded, "at most 64 pattern columns");
}

GenPattern GenPattern::fromMatrix(const BinaryMatrix& m) {
  GenPattern g(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g.cells_[i][j] = m.at(i, j) ? '1' : '0';
  return g;
}

void GenPattern::set(int i, int j, char symbol) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw Error(Errc::InvalidArgument, "pattern index out of range");
  if (symbol != '0' && symbol != '1' && symbol != '*')
    throw Error(Errc::InvalidArgument, std::string("pattern entries are 0, 1 or *, not '") + symbol + "'");
  cells_[i][j] = symbol;
}

void GenPattern::setColumnBar(int j, bool on) {
  if (j < 0 || j >= cols_ - 1) throw Error(Errc::InvalidArgument, "no gap after column " + std::to_string(j));
  colBars_[j] = on;
}

void GenPattern::setRowBar(int i, bool on) {
  if (i < 0 || i >= rows_ - 1) throw Error(Errc::InvalidArgument, "no gap after row " + std::to_string(i));
  rowBars_[i] = on;
}

std::uint64_t GenPattern::onesMask(int i) const {
  std::uint64_t m = 0;
  for (int j = 0; j < cols_; ++j)
    if (cells_[i][j] == '1') m |= std::uint64_t{1} << j;
  return m;
}

std::uint64_t GenPattern::zerosMask(int i) const {
  std::uint64_t m = 0;
  for (int j = 0; j < cols_; ++j)
    if (cells_[i][j] == '0') m |= std::uint64_t{1} << j;
  return m;
}

namespace {

bool isBarLine(std::string_view line) {
  return !line.empty() && std::all_of(line.begin(), line.end(), [](char c) { return c == '-'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

GenPattern GenPattern::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    if (!line.empty()) lines.push_back(line);
    pos = nl + 1;
  }

  Borders borders;
  std::size_t first = 0;
  if (!lines.empty() && lines[0].starts_with("borders:")) {
    for (char c : trim(lines[0].substr(8))) {
      switch (c) {
        case 'N': borders.north = true; break;
        case 'E': borders.east = true; break;
        case 'S': borders.south = true; break;
        case 'W': borders.west = true; break;
        default: throw Error(Errc::ParseError, std::string("unknown border mark '") + c + "'");
      }
    }
    first = 1;
  }

  // Rows top first, plus bar lines recorded by the number of rows above them.
  std::vector<std::string> rows;
  std::vector<int> barsAt;
  std::vector<int> colBarsOf;  // gap indices of the first row, -1 = W, n = E
  int width = -1;
  bool lastWasBar = false;
  for (std::size_t li = first; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    if (isBarLine(line)) {
      if (lastWasBar) throw Error(Errc::ParseError, "two bar lines in a row");
      barsAt.push_back(static_cast<int>(rows.size()));
      lastWasBar = true;
      continue;
    }
    lastWasBar = false;
    std::string entries;
    std::vector<int> gaps;
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      if (c == '|') {
        gaps.push_back(static_cast<int>(entries.size()) - 1);
      } else if (c == '0' || c == '1' || c == '*') {
        entries += c;
      } else {
        throw Error(Errc::ParseError, std::string("unexpected character '") + c + "' in pattern");
      }
    }
    if (entries.empty()) throw Error(Errc::ParseError, "pattern row without entries");
    for (int g : gaps) {
      if (std::count(gaps.begin(), gaps.end(), g) > 1) throw Error(Errc::ParseError, "doubled column bar");
    }
    if (width < 0) {
      width = static_cast<int>(entries.size());
      colBarsOf = gaps;
    } else if (width != static_cast<int>(entries.size())) {
      throw Error(Errc::ParseError, "pattern rows of different lengths");
    } else if (gaps != colBarsOf) {
      throw Error(Errc::ParseError, "column bars differ between rows");
    }
    rows.emplace_back(std::move(entries));
  }
  if (rows.empty()) throw Error(Errc::ParseError, "pattern without rows");
  if (width > BinaryMatrix::kMaxCols) throw Error(Errc::ParseError, "at most 64 pattern columns");

  const int R = static_cast<int>(rows.size());
  GenPattern g(R, width);
  g.borders = borders;
  for (int t = 0; t < R; ++t) g.cells_[R - 1 - t] = rows[t];
  for (int gap : colBarsOf) {
    if (gap == -1)
      g.borders.west = true;
    else if (gap == width - 1)
      g.borders.east = true;
    else
      g.colBars_[gap] = true;
  }
  for (int above : barsAt) {
    if (above == 0)
      g.borders.north = true;
    else if (above == R)
      g.borders.south = true;
    else
      g.rowBars_[R - 1 - above] = true;
  }
  return g;
}

std::string GenPattern::toText() const {
  std::string out;
  if (borders.north || borders.east || borders.south || borders.west) {
    out += "borders:";
    if (borders.north) out += 'N';
    if (borders.east) out += 'E';
    if (borders.south) out += 'S';
    if (borders.west) out += 'W';
    out += '\n';
  }
  const int lineWidth = cols_ + static_cast<int>(std::count(colBars_.begin(), colBars_.end(), true));
  for (int i = rows_ - 1; i >= 0; --i) {
    for (int j = 0; j < cols_; ++j) {
      out += cells_[i][j];
      if (j + 1 < cols_ && colBars_[j]) out += '|';
    }
    out += '\n';
    if (i > 0 && rowBars_[i - 1]) out += std::string(lineWidth, '-') + '\n';
  }
  return out;
}

GenPattern GenPattern::transpose() const {
  GenPattern t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.cells_[j][i] = cells_[i][j];
  t.colBars_ = rowBars_;
  t.rowBars_ = colBars_;
  t.borders = {borders.east, borders.north, borders.west, borders.south};
  return t;
}

GenPattern GenPattern::mirrorColumns() const {
  GenPattern t = *this;
  for (auto& row : t.cells_) std::reverse(row.begin(), row.end());
  std::reverse(t.colBars_.begin(), t.colBars_.end());
  std::swap(t.borders.east, t.borders.west);
  return t;
}

GenPattern GenPattern::mirrorRows() const {
  GenPattern t = *this;
  std::reverse(t.cells_.begin(), t.cells_.end());
  std::reverse(t.rowBars_.begin(), t.rowBars_.end());
  std::swap(t.borders.north, t.borders.south);
  return t;
}

GenPattern GenPattern::rotate90() const { return transpose().mirrorColumns(); }

namespace {

// Per pattern column, the host columns still compatible with every assigned
// row. Returns the host columns reachable by a valid choice of the last
// pattern column (0 when none), filling reach for every column.
std::uint64_t columnReach(const GenPattern& g, int hostCols, const std::vector<std::uint64_t>& compat,
                          std::vector<std::uint64_t>& reach) {
  const int C = g.cols();
  std::uint64_t prev = 0;
  for (int p = 0; p < C; ++p) {
    std::uint64_t r = compat[p];
    if (p == 0) {
      if (g.borders.west) r &= 1;
    } else if (g.columnBar(p - 1)) {
      r &= prev << 1;
    } else {
      const std::uint64_t low = prev & (~prev + 1);
      r &= ~((low << 1) - 1);
    }
    if (p == C - 1 && g.borders.east) r &= std::uint64_t{1} << (hostCols - 1);
    reach[p] = r;
    if (r == 0) return 0;
    prev = r;
  }
  return prev;
}

std::vector<int> pickColumns(const GenPattern& g, const std::vector<std::uint64_t>& reach) {
  const int C = g.cols();
  std::vector<int> cols(C);
  cols[C - 1] = std::countr_zero(reach[C - 1]);
  for (int p = C - 1; p > 0; --p)
    cols[p - 1] = g.columnBar(p - 1) ? cols[p] - 1 : std::countr_zero(reach[p - 1]);
  return cols;
}

class Matcher {
 public:
  Matcher(const BinaryMatrix& host, const GenPattern& g) : host_(host), g_(g) {
    for (int t = 0; t < g.rows(); ++t) {
      ones_.push_back(g.onesMask(t));
      zeros_.push_back(g.zerosMask(t));
    }
  }

  std::optional<SubmatrixWitness> run() {
    const int R = g_.rows(), C = g_.cols();
    if (R > host_.rows() || C > host_.cols()) return std::nullopt;
    rows_.assign(R, -1);
    reach_.assign(C, 0);
    std::vector<std::uint64_t> compat(C, lowMask(host_.cols()));
    if (!descend(0, compat)) return std::nullopt;
    return SubmatrixWitness{rows_, pickColumns(g_, reach_)};
  }

 private:
  bool descend(int t, const std::vector<std::uint64_t>& compat) {
    const int R = g_.rows(), C = g_.cols(), H = host_.rows();
    if (t == R) return true;
    int lo = t == 0 ? 0 : rows_[t - 1] + 1;
    int hi = H - (R - t);
    if (t == 0 && g_.borders.south) hi = std::min(hi, 0);
    if (t > 0 && g_.rowBar(t - 1)) hi = std::min(hi, lo);
    if (t == R - 1 && g_.borders.north) lo = std::max(lo, H - 1);
    const std::uint64_t all = lowMask(host_.cols());
    std::vector<std::uint64_t> next(C);
    for (int h = lo; h <= hi; ++h) {
      const std::uint64_t row = host_.rowMask(h);
      for (int p = 0; p < C; ++p) {
        std::uint64_t allowed = all;
        if ((ones_[t] >> p) & 1U) allowed = row;
        if ((zeros_[t] >> p) & 1U) allowed = ~row & all;
        next[p] = compat[p] & allowed;
      }
      if (columnReach(g_, host_.cols(), next, reach_) == 0) continue;
      rows_[t] = h;
      if (descend(t + 1, next)) return true;
    }
    return false;
  }

  const BinaryMatrix& host_;
  const GenPattern& g_;
  std::vector<std::uint64_t> ones_, zeros_;
  std::vector<int> rows_;
  std::vector<std::uint64_t> reach_;
};

}  // namespace

std::optional<SubmatrixWitness> findGenPattern(const BinaryMatrix& host, const GenPattern& g) {
  if (host.empty()) return std::nullopt;
  return Matcher(host, g).run();
}

bool genPatternMatch(const BinaryMatrix& host, const GenPattern& g) { return findGenPattern(host, g).has_value(); }

bool genPatternMatch(const Polyomino& p, const GenPattern& g) { return genPatternMatch(p.matrix(), g); }

std::vector<GenPattern> rotations(const GenPattern& g) {
  std::vector<GenPattern> out;
  GenPattern cur = g;
  for (int r = 0; r < 4; ++r) {
    if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
    cur = cur.rotate90();
  }
  return out;
}

std::vector<GenPattern> symmetries(const GenPattern& g) {
  std::vector<GenPattern> out = rotations(g);
  for (const GenPattern& r : rotations(g.mirrorColumns()))
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  return out;
}

GenPattern patternZ1() {
  return GenPattern::parse(
      "0|*1\n"
      "----\n"
      "*|10\n"
      "1|00\n");
}

GenPattern patternZ2() {
  return GenPattern::parse(
      "00|*1\n"
      "0*|1*\n"
      "-----\n"
      "*1|*0\n"
      "1*|00\n");
}

std::vector<GenPattern> twoConvexPatterns() {
  std::vector<GenPattern> out = rotations(patternZ1());
  for (const GenPattern& g : rotations(patternZ2())) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Submatrix order

std::optional<BinaryMatrix> plainMatrix(const GenPattern& g) {
  if (g.borders != GenPattern::Borders{}) return std::nullopt;
  for (int j = 0; j + 1 < g.cols(); ++j)
    if (g.columnBar(j)) return std::nullopt;
  for (int i = 0; i + 1 < g.rows(); ++i)
    if (g.rowBar(i)) return std::nullopt;
  std::vector<std::uint64_t> rows(g.rows());
  for (int i = 0; i < g.rows(); ++i) {
    if (g.zerosMask(i) + g.onesMask(i) != lowMask(g.cols())) return std::nullopt;
    rows[i] = g.onesMask(i);
  }
  return BinaryMatrix::fromRowMasks(g.cols(), rows);
}

std::vector<GenPattern> parsePatternFile(std::string_view text) {
  std::vector<GenPattern> out;
  std::vector<std::string> entry;
  auto flush = [&] {
    if (entry.empty()) return;
    const bool perm = entry.size() == 1 && std::all_of(entry[0].begin(), entry[0].end(), [](char c) {
                        return c == ' ' || (c >= '0' && c <= '9');
                      }) && entry[0].find_first_of("23456789") != std::string::npos;
    if (perm) {
      try {
        out.push_back(GenPattern::fromMatrix(permToMatrix(Permutation::parse(entry[0]))));
      } catch (const Error& e) {
        throw Error(Errc::ParseError, "bad permutation '" + entry[0] + "': " + e.what());
      }
    } else {
      std::string joined;
      for (const auto& line : entry) joined += line + '\n';
      out.push_back(GenPattern::parse(joined));
    }
    entry.clear();
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.starts_with('#')) continue;
    if (line.empty())
      flush();
    else
      entry.emplace_back(line);
  }
  flush();
  return out;
}

std::optional<SubmatrixWitness> findSubmatrix(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  if (pattern.empty()) return SubmatrixWitness{};
  return findGenPattern(host, GenPattern::fromMatrix(pattern));
}

bool containsSubmatrix(const BinaryMatrix& host, const BinaryMatrix& pattern) {
  return findSubmatrix(host, pattern).has_value();
}

bool containsAnySubmatrix(const BinaryMatrix& host, const std::vector<BinaryMatrix>& patterns) {
  return std::any_of(patterns.begin(), patterns.end(), [&](const BinaryMatrix& q) { return containsSubmatrix(host, q); });
}

QuasiPermMatrix::QuasiPermMatrix(BinaryMatrix m) : m_(std::move(m)) {
  if (!isQuasiPermutationMatrix(m_))
    throw Error(Errc::NotQuasiPermutation, "a row or column holds more than one 1:\n" + m_.toText());
}

bool QuasiPermMatrix::isUncoveredZero(int i, int j) const { return m_.rowMask(i) == 0 && m_.colMask(j) == 0; }

std::vector<Cell> QuasiPermMatrix::uncoveredZeros() const { return polyenum::uncoveredZeros(m_); }

std::vector<Cell> uncoveredZeros(const BinaryMatrix& m) {
  std::vector<Cell> out;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.rowMask(i) == 0 && m.colMask(j) == 0) out.push_back({i, j});
  return out;
}

bool marcusTardosContains(const Permutation& pi, const BinaryMatrix& p) {
  if (p.empty()) return true;
  GenPattern g = GenPattern::fromMatrix(p);
  for (int i = 0; i < p.rows(); ++i)
    for (int j = 0; j < p.cols(); ++j)
      if (!p.at(i, j)) g.set(i, j, '*');
  return genPatternMatch(permToMatrix(pi), g);
}

std::vector<BinaryMatrix> uncoveredZeroFlips(const BinaryMatrix& p) {
  const std::vector<Cell> zeros = uncoveredZeros(p);
  if (zeros.size() > 20) throw Error(Errc::CapExceeded, "too many uncovered zeros to flip");
  std::vector<BinaryMatrix> out;
  for (std::uint32_t s = 0; s < (1U << zeros.size()); ++s) {
    BinaryMatrix q = p;
    for (std::size_t b = 0; b < zeros.size(); ++b)
      if ((s >> b) & 1U) q.set(zeros[b].row, zeros[b].col, true);
    out.push_back(std::move(q));
  }
  return out;
}

Polyomino polyominoContaining(const BinaryMatrix& m) {
  if (m.empty()) throw Error(Errc::EmptyMatrix, "no rows to embed");
  if (2 * m.cols() + 1 > BinaryMatrix::kMaxCols) throw Error(Errc::CapExceeded, "matrix too wide to embed");
  BinaryMatrix out(m.rows() + 1, 2 * m.cols() + 1);
  for (int j = 0; j < out.cols(); ++j) out.set(m.rows(), j, true);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j <= m.cols(); ++j) out.set(i, 2 * j, true);
    for (int j = 0; j < m.cols(); ++j) out.set(i, 2 * j + 1, m.at(i, j));
  }
  return validatePolyomino(out);
}

// ---------------------------------------------------------------------------
// Permutation patterns

BivincularPattern BivincularPattern::parseVincular(std::string_view text) {
  std::vector<int> values;
  std::set<int> X;
  bool dash = true;  // a dash is implied before the first letter
  for (char c : text) {
    if (c == '-') {
      if (dash) throw Error(Errc::ParseError, "misplaced dash in '" + std::string(text) + "'");
      dash = true;
    } else if (c >= '1' && c <= '9') {
      if (!dash) X.insert(static_cast<int>(values.size()));
      values.push_back(c - '0');
      dash = false;
    } else {
      throw Error(Errc::ParseError, std::string("unexpected character '") + c + "' in vincular pattern");
    }
  }
  if (values.empty() || dash) throw Error(Errc::ParseError, "malformed vincular pattern '" + std::string(text) + "'");
  try {
    return {Permutation(values), X, {}};
  } catch (const Error&) {
    throw Error(Errc::ParseError, "letters of '" + std::string(text) + "' are not a permutation");
  }
}

namespace {

// Enumerates position subsets order-isomorphic to sigma, with adjacency
// constraints X checked on the fly; calls accept on each candidate.
void forEachClassicalOccurrence(const Permutation& pi, const Permutation& sigma, const std::set<int>& X,
                                const std::function<void(const std::vector<int>&)>& accept) {
  const int n = pi.size(), k = sigma.size();
  if (k > n) return;
  std::vector<int> pos(k);
  std::function<void(int)> rec = [&](int t) {
    if (t == k) {
      if (X.count(k) && pos[k - 1] != n - 1) return;
      accept(pos);
      return;
    }
    int lo = t == 0 ? 0 : pos[t - 1] + 1;
    int hi = n - (k - t);
    if (t == 0 && X.count(0)) hi = std::min(hi, 0);
    if (t > 0 && X.count(t)) hi = std::min(hi, lo);
    for (int p = lo; p <= hi; ++p) {
      bool ok = true;
      for (int s = 0; s < t && ok; ++s) ok = (pi[p] > pi[pos[s]]) == (sigma[t] > sigma[s]);
      if (!ok) continue;
      pos[t] = p;
      rec(t + 1);
    }
  };
  rec(0);
}

// Values of the occurrence sorted, with j_0 = 0 and j_{k+1} = n + 1.
std::vector<int> sortedValues(const Permutation& pi, const std::vector<int>& pos) {
  std::vector<int> j{0};
  for (int p : pos) j.push_back(pi[p]);
  std::sort(j.begin() + 1, j.end());
  j.push_back(pi.size() + 1);
  return j;
}

void requireRange(const std::set<int>& s, int k, const char* what) {
  for (int x : s)
    if (x < 0 || x > k) throw Error(Errc::InvalidArgument, std::string(what) + " entry out of range: " + std::to_string(x));
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Permutation& pi, const BivincularPattern& p) {
  const int k = p.sigma.size();
  requireRange(p.X, k, "X");
  requireRange(p.Y, k, "Y");
  std::vector<std::vector<int>> out;
  forEachClassicalOccurrence(pi, p.sigma, p.X, [&](const std::vector<int>& pos) {
    const std::vector<int> j = sortedValues(pi, pos);
    for (int y : p.Y)
      if (j[y + 1] != j[y] + 1) return;
    out.push_back(pos);
  });
  return out;
}

std::vector<std::vector<int>> occurrences(const Permutation& pi, const MeshPattern& p) {
  const int k = p.sigma.size(), n = pi.size();
  for (const auto& [a, b] : p.shaded)
    if (a < 0 || a > k || b < 0 || b > k) throw Error(Errc::InvalidArgument, "shaded square out of range");
  std::vector<std::vector<int>> out;
  forEachClassicalOccurrence(pi, p.sigma, {}, [&](const std::vector<int>& pos) {
    // 1-based positions with i_0 = 0 and i_{k+1} = n + 1.
    std::vector<int> i{0};
    for (int q : pos) i.push_back(q + 1);
    i.push_back(n + 1);
    const std::vector<int> j = sortedValues(pi, pos);
    for (const auto& [a, b] : p.shaded)
      for (int q = i[a] + 1; q < i[a + 1]; ++q)
        if (pi[q - 1] > j[b] && pi[q - 1] < j[b + 1]) return;
    out.push_back(pos);
  });
  return out;
}

bool permContains(const Permutation& pi, const Permutation& sigma) {
  bool found = false;
  // The callback cannot stop the search early; sizes are tiny.
  forEachClassicalOccurrence(pi, sigma, {}, [&](const std::vector<int>&) { found = true; });
  return found;
}

bool permContains(const Permutation& pi, const BivincularPattern& p) { return !occurrences(pi, p).empty(); }

bool permContains(const Permutation& pi, const MeshPattern& p) { return !occurrences(pi, p).empty(); }

// ---------------------------------------------------------------------------
// Avoidance sets

namespace {

Permutation deletePoint(const Permutation& pi, int pos) {
  std::vector<int> v;
  for (int q = 0; q < pi.size(); ++q)
    if (q != pos) v.push_back(pi[q] > pi[pos] ? pi[q] - 1 : pi[q]);
  return Permutation(v);
}

AvResult<Permutation> avPermutationsBy(int n, const std::function<bool(const Permutation&)>& avoids) {
  if (n < 1) throw Error(Errc::InvalidArgument, "permutation size must be positive");
  if (n > kMaxAvPermSize) throw Error(Errc::CapExceeded, "permutation size " + std::to_string(n) + " above cap");
  AvResult<Permutation> r;
  std::set<Permutation> previous;
  for (int s = 1; s <= n; ++s) {
    std::set<Permutation> current;
    forEachPermutation(s, [&](const Permutation& pi) {
      if (!avoids(pi)) return;
      if (s > 1) {
        for (int q = 0; q < s; ++q)
          if (!previous.count(deletePoint(pi, q)))
            throw Error(Errc::IdentityFailed, "avoidance set is not downward closed at " + pi.toString());
      }
      r.members.push_back(pi);
      current.insert(pi);
    }, {kMaxAvPermSize});
    r.counts[s] = current.size();
    previous = std::move(current);
  }
  return r;
}

}  // namespace

AvResult<Permutation> avPermutations(int n, const std::vector<BinaryMatrix>& patterns) {
  return avPermutationsBy(n, [&](const Permutation& pi) { return !containsAnySubmatrix(permToMatrix(pi), patterns); });
}

AvResult<Permutation> avPermutationsClassical(int n, const std::vector<Permutation>& patterns) {
  return avPermutationsBy(n, [&](const Permutation& pi) {
    return std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& s) { return permContains(pi, s); });
  });
}

std::vector<Permutation> avPermutationsOfSize(int n, const std::vector<BinaryMatrix>& patterns) {
  if (n < 1) throw Error(Errc::InvalidArgument, "permutation size must be positive");
  if (n > kMaxAvPermSize) throw Error(Errc::CapExceeded, "permutation size " + std::to_string(n) + " above cap");
  std::vector<Permutation> out;
  forEachPermutation(n, [&](const Permutation& pi) {
    if (!containsAnySubmatrix(permToMatrix(pi), patterns)) out.push_back(pi);
  }, {kMaxAvPermSize});
  return out;
}

AvResult<Polyomino> avPolyominoes(int maxSp, const std::vector<BinaryMatrix>& patterns) {
  if (maxSp > kMaxAvSemiPerimeter)
    throw Error(Errc::CapExceeded, "semi-perimeter " + std::to_string(maxSp) + " above cap");
  AvResult<Polyomino> r;
  for (int sp = 2; sp <= maxSp; ++sp) r.counts[sp] = 0;
  forEachPolyominoUpTo(maxSp, [&](const Polyomino& p) {
    if (containsAnySubmatrix(p.matrix(), patterns)) return;
    r.members.push_back(p);
    ++r.counts[p.semiPerimeter()];
  });
  return r;
}

std::vector<Polyomino> downwardClosureViolations(const std::vector<Polyomino>& members) {
  std::set<BinaryMatrix> inSet;
  for (const Polyomino& p : members) inSet.insert(p.matrix());
  std::vector<Polyomino> out;
  for (const Polyomino& p : members) {
    for (const BinaryMatrix& s : allSubmatrices(p.matrix())) {
      if (isPolyomino(s) && !inSet.count(s)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characterizations

BinaryMatrix namedMatrix(const std::string& name) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"H", {"101"}},
      {"V", {"1", "0", "1"}},
      {"D", {"11", "01"}},
      {"S1", {"10", "01"}},
      {"S2", {"01", "10"}},
      {"H'", {"0", "1", "0"}},
      {"V'", {"010"}},
      {"P1", {"10", "11"}},
      {"P2", {"11", "01"}},
      {"R1", {"10", "00"}},
      {"R2", {"01", "00"}},
      {"R3", {"00", "10"}},
      {"R4", {"00", "01"}},
      {"MF", {"001", "100"}},
      {"MG", {"010", "100"}},
      {"MH", {"000", "001", "010", "100"}},
      {"MJ", {"000", "010", "001", "100"}},
      {"MK", {"000", "001", "100", "010"}},
  };
  auto it = table.find(name);
  if (it == table.end()) throw Error(Errc::UnknownFamily, "no matrix named '" + name + "'");
  return BinaryMatrix::fromTopRows(it->second);
}

namespace {

struct CharacterizationInfo {
  Characterization c;
  const char* name;
  std::vector<const char*> patterns;
};

const std::vector<CharacterizationInfo>& characterizationTable() {
  static const std::vector<CharacterizationInfo> table = {
      {Characterization::Convex, "convex", {"H", "V"}},
      {Characterization::DirectedConvex, "directed-convex", {"H", "V", "D"}},
      {Characterization::Parallelogram, "parallelogram", {"P1", "P2"}},
      {Characterization::LConvex, "l-convex", {"H", "V", "S1", "S2"}},
      {Characterization::TwoConvex, "2-convex", {}},
      {Characterization::LPolyomino, "l-polyomino", {"S1", "S2"}},
      {Characterization::CPrime, "c-prime", {"H'", "V'"}},
      {Characterization::RectanglesWithHoles, "rectangles-with-holes", {"V'", "H'", "R1", "R2", "R3", "R4"}},
      {Characterization::Ryser, "ryser", {"S1", "S2"}},
  };
  return table;
}

const CharacterizationInfo& info(Characterization c) {
  for (const auto& i : characterizationTable())
    if (i.c == c) return i;
  throw Error(Errc::InvalidArgument, "unknown characterization");
}

std::vector<BinaryMatrix> patternsOf(Characterization c) {
  std::vector<BinaryMatrix> out;
  for (const char* n : info(c).patterns) out.push_back(namedMatrix(n));
  return out;
}

bool geometric(Characterization c, const Polyomino& p) {
  switch (c) {
    case Characterization::Convex: return isConvex(p);
    case Characterization::DirectedConvex: return isDirectedConvex(p);
    case Characterization::Parallelogram: return isParallelogram(p);
    case Characterization::LConvex: return isLConvex(p);
    case Characterization::TwoConvex: return isKConvex(p, 2);
    case Characterization::LPolyomino: return rowsAndColumnsComparable(p.matrix());
    case Characterization::CPrime: return segmentsTouchBoundingBox(p.matrix());
    case Characterization::RectanglesWithHoles: return isRectangleWithHoles(p.matrix());
    case Characterization::Ryser: break;
  }
  throw Error(Errc::InvalidArgument, "no polyomino predicate for this characterization");
}

void requireSp(int bound) {
  if (bound > kMaxAvSemiPerimeter)
    throw Error(Errc::CapExceeded, "semi-perimeter " + std::to_string(bound) + " above cap");
}

std::pair<std::vector<int>, std::vector<int>> projectionsOfBits(std::uint32_t bits, int r, int c) {
  std::vector<int> rs(r, 0), cs(c, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if ((bits >> (i * c + j)) & 1U) {
        ++rs[i];
        ++cs[j];
      }
  return {rs, cs};
}

BinaryMatrix matrixOfBits(std::uint32_t bits, int r, int c) {
  BinaryMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, (bits >> (i * c + j)) & 1U);
  return m;
}

CharacterizationReport verifyRyser(int bound) {
  if (bound > 4) throw Error(Errc::CapExceeded, "Ryser check limited to 4x4 matrices");
  const std::vector<BinaryMatrix> s = patternsOf(Characterization::Ryser);
  CharacterizationReport rep;
  for (int r = 1; r <= bound; ++r) {
    for (int c = 1; c <= bound; ++c) {
      const std::uint32_t total = 1U << (r * c);
      std::map<std::pair<std::vector<int>, std::vector<int>>, int> classSize;
      for (std::uint32_t b = 0; b < total; ++b) ++classSize[projectionsOfBits(b, r, c)];
      for (std::uint32_t b = 0; b < total; ++b) {
        const BinaryMatrix m = matrixOfBits(b, r, c);
        const bool unique = classSize[projectionsOfBits(b, r, c)] == 1;
        ++rep.checked;
        if (unique != !containsAnySubmatrix(m, s)) {
          rep.holds = false;
          if (!rep.counterexample) rep.counterexample = m;
        }
      }
    }
  }
  return rep;
}

}  // namespace

std::string characterizationName(Characterization c) { return info(c).name; }

Characterization parseCharacterization(const std::string& name) {
  for (const auto& i : characterizationTable())
    if (name == i.name) return i.c;
  throw Error(Errc::UnknownFamily, "no characterization named '" + name + "'");
}

std::vector<Characterization> allCharacterizations() {
  std::vector<Characterization> out;
  for (const auto& i : characterizationTable()) out.push_back(i.c);
  return out;
}

CharacterizationReport verifyCharacterization(const std::function<bool(const Polyomino&)>& predicate,
                                              const std::vector<BinaryMatrix>& patterns, int bound) {
  requireSp(bound);
  CharacterizationReport rep;
  forEachPolyominoUpTo(bound, [&](const Polyomino& p) {
    ++rep.checked;
    if (predicate(p) != !containsAnySubmatrix(p.matrix(), patterns)) {
      rep.holds = false;
      if (!rep.counterexample) rep.counterexample = p.matrix();
    }
  });
  return rep;
}

CharacterizationReport verifyCharacterization(Characterization c, int bound) {
  if (c == Characterization::Ryser) return verifyRyser(bound);
  if (c == Characterization::TwoConvex) {
    requireSp(bound);
    const std::vector<GenPattern> z = twoConvexPatterns();
    CharacterizationReport rep;
    forEachPolyominoUpTo(bound, [&](const Polyomino& p) {
      if (!isConvex(p)) return;
      ++rep.checked;
      const bool avoids = std::none_of(z.begin(), z.end(), [&](const GenPattern& g) { return genPatternMatch(p, g); });
      if (isKConvex(p, 2) != avoids) {
        rep.holds = false;
        if (!rep.counterexample) rep.counterexample = p.matrix();
      }
    });
    return rep;
  }
  return verifyCharacterization([c](const Polyomino& p) { return geometric(c, p); }, patternsOf(c), bound);
}

bool rowsAndColumnsComparable(const BinaryMatrix& m) {
  auto comparable = [](std::uint64_t a, std::uint64_t b) { return (a & b) == a || (a & b) == b; };
  for (int a = 0; a < m.rows(); ++a)
    for (int b = a + 1; b < m.rows(); ++b)
      if (!comparable(m.rowMask(a), m.rowMask(b))) return false;
  for (int a = 0; a < m.cols(); ++a)
    for (int b = a + 1; b < m.cols(); ++b)
      if (!comparable(m.colMask(a), m.colMask(b))) return false;
  return true;
}

namespace {

// Maximal runs of set bits in the low n bits, as (first, last).
std::vector<std::pair<int, int>> runs(std::uint64_t bits, int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j < n;) {
    if (!((bits >> j) & 1U)) {
      ++j;
      continue;
    }
    int e = j;
    while (e + 1 < n && ((bits >> (e + 1)) & 1U)) ++e;
    out.emplace_back(j, e);
    j = e + 1;
  }
  return out;
}

}  // namespace

bool segmentsTouchBoundingBox(const BinaryMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (auto [a, b] : runs(m.rowMask(i), m.cols()))
      if (a != 0 && b != m.cols() - 1) return false;
  for (int j = 0; j < m.cols(); ++j)
    for (auto [a, b] : runs(m.colMask(j), m.rows()))
      if (a != 0 && b != m.rows() - 1) return false;
  return true;
}

bool isRectangleWithHoles(const BinaryMatrix& m) {
  const BinaryMatrix z = m.complement();
  for (int i = 0; i < z.rows(); ++i)
    if (runs(z.rowMask(i), z.cols()).size() > 1) return false;
  for (int j = 0; j < z.cols(); ++j)
    if (runs(z.colMask(j), z.rows()).size() > 1) return false;
  // Every edge-connected set of 0s fills its bounding rectangle.
  std::vector<std::vector<bool>> seen(z.rows(), std::vector<bool>(z.cols(), false));
  for (int i = 0; i < z.rows(); ++i) {
    for (int j = 0; j < z.cols(); ++j) {
      if (!z.at(i, j) || seen[i][j]) continue;
      std::vector<Cell> stack{{i, j}};
      seen[i][j] = true;
      int size = 0, r0 = i, r1 = i, c0 = j, c1 = j;
      while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        ++size;
        r0 = std::min(r0, c.row), r1 = std::max(r1, c.row), c0 = std::min(c0, c.col), c1 = std::max(c1, c.col);
        const Cell next[4] = {{c.row + 1, c.col}, {c.row - 1, c.col}, {c.row, c.col + 1}, {c.row, c.col - 1}};
        for (const Cell& d : next) {
          if (d.row < 0 || d.row >= z.rows() || d.col < 0 || d.col >= z.cols()) continue;
          if (!z.at(d.row, d.col) || seen[d.row][d.col]) continue;
          seen[d.row][d.col] = true;
          stack.push_back(d);
        }
      }
      if (size != (r1 - r0 + 1) * (c1 - c0 + 1)) return false;
    }
  }
  return true;
}

bool uniqueUnderProjections(const BinaryMatrix& m) {
  const int r = m.rows(), c = m.cols();
  if (r * c > 16) throw Error(Errc::CapExceeded, "projection uniqueness limited to 16 entries");
  const auto target = projections(m);
  int same = 0;
  for (std::uint32_t b = 0; b < (1U << (r * c)); ++b)
    if (projections(matrixOfBits(b, r, c)) == target && ++same > 1) return false;
  return true;
}

namespace {

enum Corner { BottomLeft = 0, BottomRight = 1, TopLeft = 2, TopRight = 3 };

BinaryMatrix blowUp(const Permutation& pi, const std::function<Corner(int i, int j)>& cornerOf) {
  const int m = pi.size();
  if (m < 2) throw Error(Errc::InvalidArgument, "the construction needs a permutation of size at least 2");
  if (2 * m > BinaryMatrix::kMaxCols) throw Error(Errc::CapExceeded, "permutation too large");
  BinaryMatrix out(2 * m, 2 * m);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) out.set(i, j, true);
  for (int j = 0; j < m; ++j) {
    const int i = pi[j] - 1;  // row of the 1 in column j, from the bottom
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out.set(2 * i + a, 2 * j + b, false);
    const Corner c = cornerOf(i, j);
    out.set(2 * i + (c >> 1), 2 * j + (c & 1), true);
  }
  return out;
}

}  // namespace

BinaryMatrix cPrimeFromPermutation(const Permutation& pi) {
  const int m = pi.size();
  return blowUp(pi, [m](int i, int j) {
    if (j == 0) return BottomRight;
    if (i == m - 1) return BottomLeft;
    if (j == m - 1) return TopLeft;
    if (i == 0) return TopRight;
    return TopLeft;
  });
}

BinaryMatrix cPrimeFromPermutationPrinted(const Permutation& pi) {
  const int m = pi.size();
  return blowUp(pi, [m](int i, int j) {
    if (j == 0) return TopRight;
    if (i == m - 1) return BottomLeft;
    return TopLeft;
  });
}

}  // namespace polyenum
