#include "polyenum/bases.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <unordered_set>

#include "polyenum/enumerate.hpp"
#include "polyenum/error.hpp"
#include "polyenum/json_io.hpp"

namespace polyenum {

// ---------------------------------------------------------------------------
// Pattern sets

PatternSet::PatternSet(std::vector<BinaryMatrix> matrices) : m_(std::move(matrices)) {
  std::sort(m_.begin(), m_.end());
  m_.erase(std::unique(m_.begin(), m_.end()), m_.end());
  for (std::size_t i = 0; i < m_.size() && antichain_; ++i)
    for (std::size_t j = 0; j < m_.size() && antichain_; ++j)
      if (i != j && containsSubmatrix(m_[j], m_[i])) antichain_ = false;
}

PatternSet PatternSet::fromTopRows(const std::vector<std::vector<std::string>>& matrices) {
  std::vector<BinaryMatrix> ms;
  for (const auto& rows : matrices) ms.push_back(BinaryMatrix::fromTopRows(rows));
  return PatternSet(std::move(ms));
}

PatternSet PatternSet::fromPermutations(const std::vector<Permutation>& perms) {
  std::vector<BinaryMatrix> ms;
  for (const auto& p : perms) ms.push_back(permToMatrix(p));
  return PatternSet(std::move(ms));
}

bool PatternSet::contains(const BinaryMatrix& m) const { return std::binary_search(m_.begin(), m_.end(), m); }

PatternSet minimalMatrices(const std::vector<BinaryMatrix>& matrices) {
  std::vector<BinaryMatrix> sorted = matrices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<BinaryMatrix> out;
  for (const auto& m : sorted) {
    bool minimal = true;
    for (const auto& o : sorted)
      if (!(o == m) && containsSubmatrix(m, o)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return PatternSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Classes

ClassOracle permutationClass(std::string name, std::function<bool(const Permutation&)> member) {
  return {std::move(name), Universe::Permutations,
          [member = std::move(member)](const BinaryMatrix& m) { return member(matrixToPerm(m)); }};
}

ClassOracle polyominoClass(std::string name, std::function<bool(const Polyomino&)> member) {
  return {std::move(name), Universe::Polyominoes,
          [member = std::move(member)](const BinaryMatrix& m) { return member(Polyomino::trusted(m)); }};
}

ClassOracle avoidanceClass(std::string name, Universe universe, const PatternSet& patterns) {
  return {std::move(name), universe,
          [ms = patterns.matrices()](const BinaryMatrix& m) { return !containsAnySubmatrix(m, ms); }};
}

std::vector<BinaryMatrix> boundedUniverse(Universe universe, int bound) {
  std::vector<BinaryMatrix> out;
  if (universe == Universe::Permutations) {
    if (bound > kMaxAvPermSize)
      throw Error(Errc::CapExceeded, "permutation size " + std::to_string(bound) + " above cap");
    for (int n = 1; n <= bound; ++n) forEachPermutation(n, [&](const Permutation& p) { out.push_back(permToMatrix(p)); });
  } else {
    if (bound > kMaxAvSemiPerimeter)
      throw Error(Errc::CapExceeded, "semi-perimeter " + std::to_string(bound) + " above cap");
    forEachPolyominoUpTo(bound, [&](const Polyomino& p) { out.push_back(p.matrix()); });
  }
  return out;
}

bool describesClass(const PatternSet& patterns, const ClassOracle& c, int bound) {
  for (const auto& m : boundedUniverse(c.universe, bound))
    if (c.member(m) == containsAnySubmatrix(m, patterns.matrices())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Basis reports

nlohmann::json basisReportToJson(const BasisReport& r) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& m : r.basis.matrices()) basis.push_back(matrixToJson(m));
  return {{"class", r.className}, {"bound", r.bound}, {"complete", r.complete}, {"basis", basis}};
}

BasisReport basisReportFromJson(const nlohmann::json& j) {
  try {
    BasisReport r;
    r.className = j.at("class").get<std::string>();
    r.bound = j.at("bound").get<int>();
    r.complete = j.at("complete").get<bool>();
    std::vector<BinaryMatrix> ms;
    for (const auto& m : j.at("basis")) ms.push_back(matrixFromJson(m));
    r.basis = PatternSet(std::move(ms));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// From m-bases to p-bases

namespace {

// Calls fn for every increasing k-subset of {0..n-1}.
void forEachCombination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  if (k > n) return;
  for (;;) {
    fn(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

bool containsAny(const BinaryMatrix& host, const PatternSet& s) { return containsAnySubmatrix(host, s.matrices()); }

void requirePolyBound(int sp, int cap) {
  if (sp > cap) throw Error(Errc::CapExceeded, "semi-perimeter " + std::to_string(sp) + " above cap " + std::to_string(cap));
}

}  // namespace

std::vector<Permutation> minimalPermsContaining(const QuasiPermMatrix& q) {
  const BinaryMatrix& m = q.matrix();
  std::vector<int> zeroRows, zeroCols;
  for (int i = 0; i < m.rows(); ++i)
    if (m.rowMask(i) == 0) zeroRows.push_back(i);
  for (int j = 0; j < m.cols(); ++j)
    if (m.colMask(j) == 0) zeroCols.push_back(j);
  const int x = static_cast<int>(zeroCols.size());
  const int y = static_cast<int>(zeroRows.size());
  const int n = m.rows() + x;
  if (n > kMaxMinimalPermSize)
    throw Error(Errc::CapExceeded, "minimal permutations of size " + std::to_string(n) + " above cap");

  std::set<Permutation> out;
  std::vector<int> rowPerm(x), colPerm(y);
  forEachCombination(n, x, [&](const std::vector<int>& newRows) {
    // Final row index -> original row, or -1 - (index among inserted rows).
    std::vector<int> rowSrc(n);
    for (int i = 0, orig = 0, ins = 0; i < n; ++i) {
      if (ins < x && newRows[ins] == i)
        rowSrc[i] = -1 - ins++;
      else
        rowSrc[i] = orig++;
    }
    forEachCombination(n, y, [&](const std::vector<int>& newCols) {
      std::vector<int> colSrc(n);
      for (int j = 0, orig = 0, ins = 0; j < n; ++j) {
        if (ins < y && newCols[ins] == j)
          colSrc[j] = -1 - ins++;
        else
          colSrc[j] = orig++;
      }
      std::vector<int> finalOfOrigCol(m.cols()), finalOfOrigRow(m.rows());
      for (int j = 0; j < n; ++j)
        if (colSrc[j] >= 0) finalOfOrigCol[colSrc[j]] = j;
      for (int i = 0; i < n; ++i)
        if (rowSrc[i] >= 0) finalOfOrigRow[rowSrc[i]] = i;
      std::iota(rowPerm.begin(), rowPerm.end(), 0);
      do {
        std::iota(colPerm.begin(), colPerm.end(), 0);
        do {
          // values[j] = final row of the 1 in final column j.
          std::vector<int> values(n);
          for (int j = 0; j < n; ++j) {
            if (colSrc[j] < 0) {
              values[j] = finalOfOrigRow[zeroRows[colPerm[-1 - colSrc[j]]]];
            } else if (m.colMask(colSrc[j]) != 0) {
              values[j] = finalOfOrigRow[std::countr_zero(m.colMask(colSrc[j]))];
            }
          }
          for (int i = 0; i < n; ++i)
            if (rowSrc[i] < 0) values[finalOfOrigCol[zeroCols[rowPerm[-1 - rowSrc[i]]]]] = i;
          for (int& v : values) ++v;
          out.insert(Permutation(values));
        } while (std::next_permutation(colPerm.begin(), colPerm.end()));
      } while (std::next_permutation(rowPerm.begin(), rowPerm.end()));
    });
  });
  return {out.begin(), out.end()};
}

bool isMinimalContaining(const Polyomino& p, const PatternSet& m) {
  requirePolyBound(p.semiPerimeter(), 20);
  if (!containsAny(p.matrix(), m)) return false;
  for (const auto& s : allSubmatrices(p.matrix()))
    if (!(s == p.matrix()) && isPolyomino(s) && containsAny(s, m)) return false;
  return true;
}

BasisReport pBasisFromMBasis(const PatternSet& mBasis, Universe universe, int bound, std::string className) {
  BasisReport r;
  r.className = std::move(className);
  r.bound = bound;
  std::vector<BinaryMatrix> found;
  if (universe == Universe::Permutations) {
    for (const auto& m : mBasis.matrices()) {
      if (!isQuasiPermutationMatrix(m)) continue;  // no permutation contains it
      for (const auto& p : minimalPermsContaining(QuasiPermMatrix(m))) {
        if (p.size() > bound)
          throw Error(Errc::CapExceeded, "p-basis member " + p.toString() + " longer than the bound");
        found.push_back(permToMatrix(p));
      }
    }
    r.basis = minimalMatrices(found);
    r.complete = true;
  } else {
    requirePolyBound(bound, kMaxAvSemiPerimeter);
    forEachPolyominoUpTo(bound, [&](const Polyomino& p) {
      if (isMinimalContaining(p, mBasis)) found.push_back(p.matrix());
    });
    r.basis = PatternSet(std::move(found));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical and minimal m-bases

namespace {

// Every matrix with 1..d rows and 1..d columns.
std::vector<BinaryMatrix> allMatricesUpTo(int d) {
  std::vector<BinaryMatrix> out;
  for (int r = 1; r <= d; ++r)
    for (int c = 1; c <= d; ++c)
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (r * c)); ++bits) {
        std::vector<std::uint64_t> rows(r);
        for (int i = 0; i < r; ++i) rows[i] = (bits >> (i * c)) & lowMask(c);
        out.push_back(BinaryMatrix::fromRowMasks(c, rows));
      }
  return out;
}

// Submatrices of m with at most d rows and d columns.
void insertSmallSubmatrices(const BinaryMatrix& m, int d,
                            std::unordered_set<BinaryMatrix, BinaryMatrixHash>& out) {
  for (int r = 1; r <= std::min(d, m.rows()); ++r)
    forEachCombination(m.rows(), r, [&](const std::vector<int>& rows) {
      for (int c = 1; c <= std::min(d, m.cols()); ++c)
        forEachCombination(m.cols(), c, [&](const std::vector<int>& cols) { out.insert(m.submatrix(rows, cols)); });
    });
}

// Nonempty matrices obtained by deleting one row or one column.
std::vector<BinaryMatrix> oneLineDeletions(const BinaryMatrix& m) {
  std::vector<BinaryMatrix> out;
  if (m.rows() > 1)
    for (int i = 0; i < m.rows(); ++i) out.push_back(m.withoutRow(i));
  if (m.cols() > 1)
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.withoutColumn(j));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

BasisReport canonicalMBasis(const ClassOracle& c, int dimBound, int searchSp) {
  if (dimBound < 1) throw Error(Errc::InvalidArgument, "dimension bound must be positive");
  if (dimBound > kMaxCanonicalDim)
    throw Error(Errc::CapExceeded, "dimension bound " + std::to_string(dimBound) + " above cap");
  std::function<bool(const BinaryMatrix&)> inClosure;
  std::unordered_set<BinaryMatrix, BinaryMatrixHash> closure;
  if (c.universe == Universe::Permutations) {
    inClosure = [&](const BinaryMatrix& m) {
      if (!isQuasiPermutationMatrix(m)) return false;
      for (const auto& p : minimalPermsContaining(QuasiPermMatrix(m)))
        if (c.member(permToMatrix(p))) return true;
      return false;
    };
  } else {
    if (searchSp <= 0) searchSp = std::min(2 * dimBound + 2, kMaxCanonicalSearchSp);
    requirePolyBound(searchSp, kMaxCanonicalSearchSp);
    forEachPolyominoUpTo(searchSp, [&](const Polyomino& p) {
      if (c.member(p.matrix())) insertSmallSubmatrices(p.matrix(), dimBound, closure);
    });
    inClosure = [&](const BinaryMatrix& m) { return closure.count(m) > 0; };
  }
  std::vector<BinaryMatrix> basis;
  for (const auto& m : allMatricesUpTo(dimBound)) {
    if (c.universe == Universe::Permutations && !isQuasiPermutationMatrix(m)) continue;
    if (inClosure(m)) continue;
    const auto dels = oneLineDeletions(m);
    if (std::all_of(dels.begin(), dels.end(), inClosure)) basis.push_back(m);
  }
  BasisReport r;
  r.className = c.name;
  r.bound = dimBound;
  r.complete = false;
  r.basis = PatternSet(std::move(basis));
  return r;
}

std::vector<PatternSet> minimalMBases(const PatternSet& canonical, const ClassOracle& c, int bound) {
  const auto& ms = canonical.matrices();
  const int k = static_cast<int>(ms.size());
  if (k > 16) throw Error(Errc::CapExceeded, "more than 16 canonical matrices");
  const std::vector<BinaryMatrix> universe = boundedUniverse(c.universe, bound);
  std::vector<bool> inClass(universe.size());
  std::set<std::uint32_t> outsideMasks;
  for (std::size_t u = 0; u < universe.size(); ++u) {
    std::uint32_t mask = 0;
    for (int i = 0; i < k; ++i)
      if (containsSubmatrix(universe[u], ms[i])) mask |= 1U << i;
    inClass[u] = c.member(universe[u]);
    if (inClass[u] == (mask != 0))
      throw Error(Errc::IdentityFailed, "the canonical set does not describe " + c.name + " on the bounded universe");
    if (!inClass[u]) outsideMasks.insert(mask);
  }

  // Subsets hitting every outside mask, minimal for inclusion.
  std::vector<std::uint32_t> subsets((std::size_t{1} << k));
  std::iota(subsets.begin(), subsets.end(), 0U);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t b : subsets) {
    if (!std::all_of(outsideMasks.begin(), outsideMasks.end(), [&](std::uint32_t m) { return (m & b) != 0; }))
      continue;
    if (std::any_of(minimal.begin(), minimal.end(), [&](std::uint32_t m) { return (m & b) == m; })) continue;
    minimal.push_back(b);
  }

  // No matrix can be replaced by a proper submatrix.
  auto replaceable = [&](const std::vector<BinaryMatrix>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (const auto& sub : allSubmatrices(basis[i])) {
        if (sub == basis[i]) continue;
        std::vector<BinaryMatrix> replaced = basis;
        replaced[i] = sub;
        bool same = true;
        for (std::size_t u = 0; u < universe.size() && same; ++u)
          same = inClass[u] != containsAnySubmatrix(universe[u], replaced);
        if (same) return true;
      }
    return false;
  };

  std::vector<PatternSet> out;
  for (std::uint32_t b : minimal) {
    std::vector<BinaryMatrix> basis;
    for (int i = 0; i < k; ++i)
      if (b >> i & 1U) basis.push_back(ms[i]);
    if (!replaceable(basis)) out.emplace_back(std::move(basis));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Robustness and meets

std::vector<BinaryMatrix> meet(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() + a.cols() > 20) throw Error(Errc::CapExceeded, "meet operand above 20 rows plus columns");
  std::vector<BinaryMatrix> common;
  for (const auto& s : allSubmatrices(a))
    if (containsSubmatrix(b, s)) common.push_back(s);
  std::stable_sort(common.begin(), common.end(), [](const BinaryMatrix& x, const BinaryMatrix& y) {
    return x.rows() + x.cols() > y.rows() + y.cols();
  });
  std::vector<BinaryMatrix> maximal;
  for (const auto& s : common)
    if (std::none_of(maximal.begin(), maximal.end(), [&](const BinaryMatrix& t) { return containsSubmatrix(t, s); }))
      maximal.push_back(s);
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

bool isRobustSingleton(const BinaryMatrix& m) { return isPolyomino(m); }

RobustnessReport isRobust(const PatternSet& pBasis, int bound) {
  for (const auto& p : pBasis.matrices())
    if (!isPolyomino(p)) throw Error(Errc::InvalidArgument, "p-basis elements must be polyominoes");
  requirePolyBound(bound, kMaxAvSemiPerimeter);
  std::vector<BinaryMatrix> members;
  forEachPolyominoUpTo(bound, [&](const Polyomino& q) {
    if (!containsAny(q.matrix(), pBasis)) members.push_back(q.matrix());
  });
  RobustnessReport r;
  for (const auto& p : pBasis.matrices())
    for (const auto& del : oneLineDeletions(p)) {
      const bool seen =
          std::any_of(members.begin(), members.end(), [&](const BinaryMatrix& q) { return containsSubmatrix(q, del); });
      if (seen) continue;
      std::vector<BinaryMatrix> replaced;
      for (const auto& o : pBasis.matrices())
        if (!(o == p)) replaced.push_back(o);
      replaced.push_back(del);
      r.robust = false;
      r.certain = false;
      r.witness = minimalMatrices(replaced);
      return r;
    }
  return r;
}

namespace {

// A saturated chain from `top` down to `bottom` whose elements other than
// `top` are not polyominoes.
bool polyominoFreeChain(const BinaryMatrix& bottom, const BinaryMatrix& top) {
  std::unordered_set<BinaryMatrix, BinaryMatrixHash> seen;
  std::function<bool(const BinaryMatrix&)> down = [&](const BinaryMatrix& y) {
    for (const auto& z : oneLineDeletions(y)) {
      if (z == bottom) return true;
      if (isPolyomino(z) || !containsSubmatrix(z, bottom) || !seen.insert(z).second) continue;
      if (down(z)) return true;
    }
    return false;
  };
  return down(top);
}

}  // namespace

bool robustByMeetCondition(const BinaryMatrix& p1, const BinaryMatrix& p2) {
  for (const auto& x : meet(p1, p2)) {
    if (isPolyomino(x)) continue;
    if (polyominoFreeChain(x, p1) || polyominoFreeChain(x, p2)) return false;
  }
  return true;
}

Polyomino infiniteAntichainMember(int k) {
  if (k < 2) throw Error(Errc::InvalidArgument, "antichain members start at k = 2");
  if (k + 3 > BinaryMatrix::kMaxCols) throw Error(Errc::CapExceeded, "antichain member wider than 64 columns");
  const int h = k + 2, w = k + 3;
  std::vector<std::string> rows(h, std::string(w, '0'));
  rows[0].replace(0, 3, "111");
  for (int i = 1; i <= k; ++i) {
    rows[i][0] = '1';
    rows[i][i + 1] = rows[i][i + 2] = '1';
  }
  rows[h - 1][0] = rows[h - 1][1] = rows[h - 1][w - 1] = '1';
  return validatePolyomino(BinaryMatrix::fromTopRows(rows));
}

BinaryMatrix paddedPermutationMatrix(const Permutation& tau, Side side) {
  const BinaryMatrix p = permToMatrix(tau);
  const int n = tau.size();
  const bool addRow = side == Side::Top || side == Side::Bottom;
  BinaryMatrix out(n + (addRow ? 1 : 0), n + (addRow ? 0 : 1));
  const int di = side == Side::Bottom ? 1 : 0;
  const int dj = side == Side::Left ? 1 : 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.at(i, j)) out.set(i + di, j + dj, true);
  return out;
}

// ---------------------------------------------------------------------------
// Finite posets

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n) throw Error(Errc::InvalidArgument, "order table size does not match the labels");
  for (const auto& row : leq_)
    if (row.size() != n) throw Error(Errc::InvalidArgument, "order table is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_[i][i]) throw Error(Errc::NotAPartialOrder, "not reflexive at " + labels_[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i])
        throw Error(Errc::NotAPartialOrder, "not antisymmetric at " + labels_[i] + ", " + labels_[j]);
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j][k] && !leq_[i][k])
          throw Error(Errc::NotAPartialOrder,
                      "not transitive at " + labels_[i] + ", " + labels_[j] + ", " + labels_[k]);
    }
  }
}

FinitePoset FinitePoset::fromRelation(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = leq(i, j);
  return FinitePoset(std::move(labels), std::move(t));
}

namespace {

std::vector<std::string> numberLabels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

FinitePoset FinitePoset::singleton() { return chain(1); }

FinitePoset FinitePoset::chain(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative poset size");
  return fromRelation(numberLabels(n), [](int i, int j) { return i <= j; });
}

FinitePoset FinitePoset::antichain(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative poset size");
  return fromRelation(numberLabels(n), [](int i, int j) { return i == j; });
}

FinitePoset FinitePoset::booleanLattice(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative ground set size");
  if (n > 10) throw Error(Errc::CapExceeded, "boolean lattice above B_10");
  std::vector<std::string> labels;
  for (int s = 0; s < (1 << n); ++s) {
    std::string l = "{";
    for (int e = 0; e < n; ++e)
      if (s >> e & 1) l += (l.size() > 1 ? "," : "") + std::to_string(e + 1);
    labels.push_back(l + "}");
  }
  return fromRelation(std::move(labels), [](int a, int b) { return (a & b) == a; });
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < size() && direct; ++z) direct = !(less(x, z) && less(z, y));
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

std::vector<int> FinitePoset::minimalElements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool minimal = true;
    for (int y = 0; y < size() && minimal; ++y) minimal = !less(y, x);
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<int> FinitePoset::maximalElements() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    bool maximal = true;
    for (int y = 0; y < size() && maximal; ++y) maximal = !less(x, y);
    if (maximal) out.push_back(x);
  }
  return out;
}

std::vector<int> FinitePoset::filter(const std::vector<int>& ys) const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (std::all_of(ys.begin(), ys.end(), [&](int y) { return less(y, x); })) out.push_back(x);
  return out;
}

std::vector<int> FinitePoset::ideal(const std::vector<int>& ys) const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (std::all_of(ys.begin(), ys.end(), [&](int y) { return less(x, y); })) out.push_back(x);
  return out;
}

int FinitePoset::rank() const {
  if (size() == 0) return 0;
  // Longest chain ending at each point, points taken by number of predecessors.
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  auto below = [&](int x) {
    int c = 0;
    for (int y = 0; y < size(); ++y) c += less(y, x);
    return c;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return below(a) < below(b); });
  std::vector<int> longest(size(), 0);
  int best = 0;
  for (int x : order) {
    for (int y = 0; y < size(); ++y)
      if (less(y, x)) longest[x] = std::max(longest[x], longest[y] + 1);
    best = std::max(best, longest[x]);
  }
  return best;
}

std::uint64_t FinitePoset::linearExtensionCount() const {
  const int n = size();
  if (n > kMaxLinearExtensionElements)
    throw Error(Errc::CapExceeded, "linear extensions of " + std::to_string(n) + " points above cap");
  std::vector<std::uint32_t> pred(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (less(y, x)) pred[x] |= 1U << y;
  // ways[S]: orderings of the down-set S.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (ways[s] == 0) continue;
    for (int x = 0; x < n; ++x)
      if (!(s >> x & 1U) && (pred[x] & s) == pred[x]) ways[s | 1U << x] += ways[s];
  }
  return ways[(std::size_t{1} << n) - 1];
}

FinitePoset disjointUnion(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels;
  for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  for (int i = 0; i < q.size(); ++i) labels.push_back(q.label(i));
  const int np = p.size();
  return FinitePoset::fromRelation(std::move(labels), [&](int a, int b) {
    if (a < np && b < np) return p.leq(a, b);
    if (a >= np && b >= np) return q.leq(a - np, b - np);
    return false;
  });
}

FinitePoset ordinalSum(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels;
  for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
  for (int i = 0; i < q.size(); ++i) labels.push_back(q.label(i));
  const int np = p.size();
  return FinitePoset::fromRelation(std::move(labels), [&](int a, int b) {
    if (a < np && b < np) return p.leq(a, b);
    if (a >= np && b >= np) return q.leq(a - np, b - np);
    return a < np;
  });
}

FinitePoset cartesianProduct(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::string> labels;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < q.size(); ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  const int nq = q.size();
  return FinitePoset::fromRelation(std::move(labels), [&](int a, int b) {
    return p.leq(a / nq, b / nq) && q.leq(a % nq, b % nq);
  });
}

}  // namespace polyenum
