#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "polyenum/classify.hpp"
#include "polyenum/patterns.hpp"
#include "polyenum/permutation.hpp"
#include "support.hpp"

using namespace polyenum;
using testing::errcOf;
using testing::M;
using testing::P;

namespace {

// All increasing k-subsets of {0..n-1}.
void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(idx.size()) == k) {
      fn(idx);
      return;
    }
    for (int i = from; i < n; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

bool bruteContains(const BinaryMatrix& host, const BinaryMatrix& q) {
  if (q.rows() > host.rows() || q.cols() > host.cols()) return false;
  bool found = false;
  forEachSubset(host.rows(), q.rows(), [&](const std::vector<int>& rs) {
    if (found) return;
    forEachSubset(host.cols(), q.cols(), [&](const std::vector<int>& cs) {
      if (!found && host.submatrix(rs, cs) == q) found = true;
    });
  });
  return found;
}

// Checks every constraint of a generalized pattern on explicit index lists.
bool genOccurrence(const BinaryMatrix& host, const GenPattern& g, const std::vector<int>& rs, const std::vector<int>& cs) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const char e = g.at(i, j);
      if (e != '*' && host.at(rs[i], cs[j]) != (e == '1')) return false;
    }
  for (int i = 0; i + 1 < g.rows(); ++i)
    if (g.rowBar(i) && rs[i + 1] != rs[i] + 1) return false;
  for (int j = 0; j + 1 < g.cols(); ++j)
    if (g.columnBar(j) && cs[j + 1] != cs[j] + 1) return false;
  if (g.borders.south && rs.front() != 0) return false;
  if (g.borders.north && rs.back() != host.rows() - 1) return false;
  if (g.borders.west && cs.front() != 0) return false;
  if (g.borders.east && cs.back() != host.cols() - 1) return false;
  return true;
}

bool bruteGen(const BinaryMatrix& host, const GenPattern& g) {
  if (g.rows() > host.rows() || g.cols() > host.cols()) return false;
  bool found = false;
  forEachSubset(host.rows(), g.rows(), [&](const std::vector<int>& rs) {
    forEachSubset(host.cols(), g.cols(), [&](const std::vector<int>& cs) {
      if (!found && genOccurrence(host, g, rs, cs)) found = true;
    });
  });
  return found;
}

// Relative order of the values at the given positions.
Permutation standardize(const Permutation& pi, const std::vector<int>& pos) {
  std::vector<int> v;
  for (int p : pos) {
    int rank = 1;
    for (int q : pos) rank += pi[q] < pi[p];
    v.push_back(rank);
  }
  return Permutation(v);
}

std::vector<std::vector<int>> bruteOccurrences(const Permutation& pi, const Permutation& sigma) {
  std::vector<std::vector<int>> out;
  if (sigma.size() > pi.size()) return out;
  forEachSubset(pi.size(), sigma.size(), [&](const std::vector<int>& pos) {
    if (standardize(pi, pos) == sigma) out.push_back(pos);
  });
  return out;
}

std::string valuesAt(const Permutation& pi, const std::vector<int>& pos) {
  std::string s;
  for (int p : pos) s += static_cast<char>('0' + pi[p]);
  return s;
}

BinaryMatrix randomMatrix(std::mt19937& rng, int rows, int cols, double density) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, bit(rng));
  return m;
}

std::vector<BinaryMatrix> allMatrices(int rows, int cols) {
  std::vector<BinaryMatrix> out;
  for (std::uint32_t b = 0; b < (1U << (rows * cols)); ++b) {
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.set(i, j, (b >> (i * cols + j)) & 1U);
    out.push_back(m);
  }
  return out;
}

std::vector<BinaryMatrix> allMatricesUpTo(int maxRows, int maxCols) {
  std::vector<BinaryMatrix> out;
  for (int r = 1; r <= maxRows; ++r)
    for (int c = 1; c <= maxCols; ++c)
      for (auto& m : allMatrices(r, c)) out.push_back(std::move(m));
  return out;
}

std::vector<Permutation> perms(std::initializer_list<const char*> list) {
  std::vector<Permutation> out;
  for (const char* s : list) out.push_back(Permutation::parse(s));
  return out;
}

std::uint64_t binom(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("submatrix search agrees with subset brute force and returns a valid witness") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const int hr = 1 + static_cast<int>(rng() % 5), hc = 1 + static_cast<int>(rng() % 6);
    const int qr = 1 + static_cast<int>(rng() % 3), qc = 1 + static_cast<int>(rng() % 3);
    const double density = 0.2 + 0.6 * (rng() % 100) / 100.0;
    const BinaryMatrix host = randomMatrix(rng, hr, hc, density);
    const BinaryMatrix q = randomMatrix(rng, qr, qc, density);
    const auto w = findSubmatrix(host, q);
    REQUIRE(w.has_value() == bruteContains(host, q));
    if (w) {
      CHECK(std::is_sorted(w->rows.begin(), w->rows.end()));
      CHECK(std::is_sorted(w->cols.begin(), w->cols.end()));
      CHECK(host.submatrix(w->rows, w->cols) == q);
    }
  }
  const BinaryMatrix m = M({"0110", "1101", "0011"});
  CHECK(containsSubmatrix(m, m));
  CHECK_FALSE(containsSubmatrix(M({"1"}), M({"11"})));
}

TEST_CASE("submatrix order on small matrices") {
  // Down-sets from the listing of all submatrices, an oracle independent of
  // the search.
  const std::vector<BinaryMatrix> all = allMatricesUpTo(3, 4);
  std::map<BinaryMatrix, std::set<BinaryMatrix>> down;
  for (const auto& m : all) {
    const auto subs = allSubmatrices(m);
    down[m] = std::set<BinaryMatrix>(subs.begin(), subs.end());
  }
  for (const auto& m : all) {
    const auto& dm = down[m];
    CHECK(dm.count(m));  // reflexive
    for (const auto& n : dm) {
      const auto it = down.find(n);
      REQUIRE(it != down.end());
      if (it->second.count(m)) CHECK(n == m);  // antisymmetric
      for (const auto& o : it->second) REQUIRE(dm.count(o));  // transitive
    }
  }
  // The search agrees with the listing on every pair up to 3x3.
  const std::vector<BinaryMatrix> small = allMatricesUpTo(3, 3);
  for (const auto& m : small)
    for (const auto& q : small)
      if (q.rows() <= m.rows() && q.cols() <= m.cols()) REQUIRE(containsSubmatrix(m, q) == down[m].count(q) > 0);
}

TEST_CASE("transpose duality") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const BinaryMatrix m = randomMatrix(rng, 1 + rng() % 5, 1 + rng() % 5, 0.5);
    const BinaryMatrix q = randomMatrix(rng, 1 + rng() % 3, 1 + rng() % 3, 0.5);
    CHECK(containsSubmatrix(m.transpose(), q.transpose()) == containsSubmatrix(m, q));
  }
}

TEST_CASE("every small matrix is a submatrix of a polyomino") {
  for (const auto& m : allMatricesUpTo(3, 3)) {
    const Polyomino p = polyominoContaining(m);
    const auto w = findSubmatrix(p.matrix(), m);
    REQUIRE(w.has_value());
    CHECK(p.matrix().submatrix(w->rows, w->cols) == m);
  }
}

TEST_CASE("classical permutation patterns") {
  const Permutation pi = Permutation::parse("24531");
  const Permutation p231 = Permutation::parse("231");
  CHECK(permContains(pi, p231));
  bool via451 = false;
  for (const auto& occ : occurrences(pi, BivincularPattern::classical(p231))) via451 |= valuesAt(pi, occ) == "451";
  CHECK(via451);
  CHECK_FALSE(permContains(Permutation::parse("51423"), p231));

  // Occurrence lists match the standardization brute force.
  for (int n = 1; n <= 6; ++n)
    for (const auto& big : enumeratePermutations(n))
      for (int k = 1; k <= 3; ++k)
        for (const auto& sigma : enumeratePermutations(k))
          REQUIRE(occurrences(big, BivincularPattern::classical(sigma)) == bruteOccurrences(big, sigma));
}

TEST_CASE("classical containment is submatrix containment of permutation matrices") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : enumeratePermutations(n))
      for (int k = 1; k <= 3; ++k)
        for (const auto& sigma : enumeratePermutations(k))
          REQUIRE(permContains(pi, sigma) == containsSubmatrix(permToMatrix(pi), permToMatrix(sigma)));
}

TEST_CASE("vincular and bivincular patterns") {
  const Permutation pi = Permutation::parse("3542617");
  const auto vin = BivincularPattern::parseVincular("12-3-4");
  CHECK(vin.sigma == Permutation::parse("1234"));
  CHECK(vin.X == std::set<int>{1});
  const auto occ = occurrences(pi, vin);
  REQUIRE(occ.size() == 1);
  CHECK(valuesAt(pi, occ[0]) == "3567");
  std::set<std::string> classical;
  for (const auto& o : occurrences(pi, BivincularPattern::parseVincular("1-2-3-4"))) classical.insert(valuesAt(pi, o));
  CHECK(classical == std::set<std::string>{"3467", "3567"});

  CHECK(errcOf([] { BivincularPattern::parseVincular("1--2"); }) == Errc::ParseError);
  CHECK(errcOf([] { BivincularPattern::parseVincular("12-"); }) == Errc::ParseError);
  CHECK(errcOf([] { BivincularPattern::parseVincular("13"); }) == Errc::ParseError);
  CHECK(errcOf([&] { occurrences(pi, BivincularPattern{Permutation::parse("12"), {3}, {}}); }) == Errc::InvalidArgument);

  // Brute force straight from the definition, over every X and Y.
  for (int n = 1; n <= 6; ++n)
    for (const auto& big : enumeratePermutations(n))
      for (const auto& sigma : enumeratePermutations(3))
        for (int xs = 0; xs < 16; xs += 3)
          for (int ys = 0; ys < 16; ys += 5) {
            BivincularPattern b{sigma, {}, {}};
            for (int t = 0; t <= 3; ++t) {
              if ((xs >> t) & 1) b.X.insert(t);
              if ((ys >> t) & 1) b.Y.insert(t);
            }
            std::vector<std::vector<int>> expect;
            for (const auto& pos : bruteOccurrences(big, sigma)) {
              std::vector<int> i{0}, j{0};
              for (int p : pos) i.push_back(p + 1), j.push_back(big[p]);
              std::sort(j.begin(), j.end());
              i.push_back(n + 1), j.push_back(n + 1);
              bool ok = true;
              for (int x : b.X) ok = ok && i[x + 1] == i[x] + 1;
              for (int y : b.Y) ok = ok && j[y + 1] == j[y] + 1;
              if (ok) expect.push_back(pos);
            }
            REQUIRE(occurrences(big, b) == expect);
          }
}

TEST_CASE("mesh patterns") {
  const MeshPattern mp{Permutation::parse("3142"), {{0, 2}, {1, 4}, {4, 2}}};
  const Permutation pi = Permutation::parse("425163");
  std::set<std::string> found;
  for (const auto& o : occurrences(pi, mp)) found.insert(valuesAt(pi, o));
  CHECK_FALSE(found.count("5163"));
  CHECK(found.count("4263"));
  // 5163 is an occurrence of the underlying classical pattern.
  bool classical5163 = false;
  for (const auto& o : bruteOccurrences(pi, mp.sigma)) classical5163 |= valuesAt(pi, o) == "5163";
  CHECK(classical5163);

  // Shading a whole column strip is the vincular constraint; a row strip is
  // the bivincular one.
  for (int n = 1; n <= 6; ++n)
    for (const auto& big : enumeratePermutations(n))
      for (const auto& sigma : enumeratePermutations(3))
        for (int a = 0; a <= 3; ++a) {
          MeshPattern col{sigma, {}}, row{sigma, {}};
          for (int b = 0; b <= 3; ++b) col.shaded.insert({a, b}), row.shaded.insert({b, a});
          REQUIRE(occurrences(big, col) == occurrences(big, BivincularPattern{sigma, {a}, {}}));
          REQUIRE(occurrences(big, row) == occurrences(big, BivincularPattern{sigma, {}, {a}}));
        }
  CHECK(errcOf([&] { occurrences(pi, MeshPattern{Permutation::parse("12"), {{3, 0}}}); }) == Errc::InvalidArgument);
  CHECK_FALSE(permContains(Permutation::parse("12"), mp));
}

TEST_CASE("avoidance sets of permutations") {
  const std::vector<Permutation> expected = perms({"1432", "2143", "3214", "4132", "4213", "4312", "4321"});
  const auto classical = avPermutationsClassical(4, perms({"123", "231"}));
  std::vector<Permutation> size4;
  for (const auto& p : classical.members)
    if (p.size() == 4) size4.push_back(p);
  CHECK(size4 == expected);
  CHECK(avPermutationsOfSize(4, {permToMatrix(Permutation::parse("123")), permToMatrix(Permutation::parse("231"))}) ==
        expected);

  // F: Fibonacci numbers; G: n; H, J, K: binom(2n-2, n-1).
  const auto F = avPermutations(9, {namedMatrix("MF")});
  std::uint64_t a = 1, b = 1;
  for (int n = 1; n <= 9; ++n) {
    CHECK(F.counts.at(n) == b);
    const std::uint64_t c = a + b;
    a = b, b = c;
  }
  const auto G = avPermutations(8, {namedMatrix("MG")});
  for (int n = 1; n <= 8; ++n) CHECK(G.counts.at(n) == static_cast<std::size_t>(n));
  for (const char* name : {"MH", "MJ", "MK"}) {
    const auto r = avPermutations(8, {namedMatrix(name)});
    for (int n = 1; n <= 8; ++n) CHECK(r.counts.at(n) == binom(2 * n - 2, n - 1));
  }

  // The single matrices describe the classes given by three or four
  // classical patterns.
  const std::map<std::string, std::vector<Permutation>> classes = {
      {"MF", perms({"123", "132", "213"})},
      {"MG", perms({"123", "132", "231"})},
      {"MH", perms({"1234", "1243", "1423", "4123"})},
      {"MJ", perms({"1324", "1342", "1432", "4132"})},
      {"MK", perms({"2134", "2143", "2413", "4213"})},
  };
  for (const auto& [name, basis] : classes)
    CHECK(avPermutations(7, {namedMatrix(name)}).members == avPermutationsClassical(7, basis).members);

  CHECK(errcOf([] { avPermutations(11, {}); }) == Errc::CapExceeded);
}

TEST_CASE("quasi-permutation matrices with rows or columns of zeros") {
  // Avoiding the first matrix: the 2 and 3 of every 231 are adjacent. The
  // third: the 3 of every 231 is the maximum. The second forbids a 231 with a
  // position q strictly between its 2 and 3 and a value r strictly between
  // its 1 and 2 such that pi(q) != r; adjacency or consecutive values alone
  // do not describe it (3241 avoids it through the occurrence 341).
  const BinaryMatrix adjacent = M({"0010", "1000", "0001"});
  const BinaryMatrix adjacentConsecutive = M({"0010", "1000", "0000", "0001"});
  const BinaryMatrix topMax = M({"000", "010", "100", "001"});
  const Permutation p231 = Permutation::parse("231");
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : enumeratePermutations(n)) {
      bool okA = true, okB = true, okC = true;
      for (const auto& pos : bruteOccurrences(pi, p231)) {
        const bool adj = pos[1] == pos[0] + 1;
        okA = okA && adj;
        for (int q = pos[0] + 1; q < pos[1]; ++q)
          for (int r = pi[pos[2]] + 1; r < pi[pos[0]]; ++r) okB = okB && pi[q] == r;
        okC = okC && pi[pos[1]] == n;
      }
      const BinaryMatrix m = permToMatrix(pi);
      REQUIRE(okA == !containsSubmatrix(m, adjacent));
      REQUIRE(okB == !containsSubmatrix(m, adjacentConsecutive));
      REQUIRE(okC == !containsSubmatrix(m, topMax));
    }
  }
  CHECK_FALSE(containsSubmatrix(permToMatrix(Permutation::parse("3241")), adjacentConsecutive));
}

TEST_CASE("quasi-permutation matrices and Marcus-Tardos containment") {
  CHECK(errcOf([] { QuasiPermMatrix(M({"11", "00"})); }) == Errc::NotQuasiPermutation);
  const QuasiPermMatrix q(M({"0000", "0100", "0000", "0001"}));
  CHECK(q.uncoveredZeros() == std::vector<Cell>{{1, 0}, {1, 2}, {3, 0}, {3, 2}});
  CHECK(q.isUncoveredZero(3, 2));
  CHECK_FALSE(q.isUncoveredZero(2, 2));

  CHECK(marcusTardosContains(Permutation::parse("2413"), M({"000", "000"})));
  CHECK_FALSE(marcusTardosContains(Permutation::parse("21"), M({"000", "000"})));
  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : enumeratePermutations(n))
      for (const auto& sigma : enumeratePermutations(3))
        REQUIRE(marcusTardosContains(pi, permToMatrix(sigma)) == permContains(pi, sigma));

  // Domination equals containment of some matrix with uncovered 0s flipped.
  // Flips that put two 1s in a line are skipped: no permutation matrix has
  // such a submatrix.
  const std::vector<BinaryMatrix> patterns = allMatricesUpTo(3, 3);
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumeratePermutations(n)) {
      const BinaryMatrix host = permToMatrix(pi);
      for (const auto& p : patterns) {
        bool viaFlips = false;
        for (const auto& f : uncoveredZeroFlips(p))
          if (!viaFlips && isQuasiPermutationMatrix(f)) viaFlips = containsSubmatrix(host, f);
        REQUIRE(marcusTardosContains(pi, p) == viaFlips);
        ++checked;
      }
    }
  }
  CHECK(checked == 873 * patterns.size());
}

TEST_CASE("generalized pattern text form") {
  const GenPattern z1 = patternZ1();
  CHECK(z1.rows() == 3);
  CHECK(z1.cols() == 3);
  CHECK(z1.at(2, 0) == '0');
  CHECK(z1.at(2, 1) == '*');
  CHECK(z1.at(0, 0) == '1');
  CHECK(z1.columnBar(0));
  CHECK_FALSE(z1.columnBar(1));
  CHECK(z1.rowBar(1));
  CHECK_FALSE(z1.rowBar(0));
  CHECK(z1.toText() == "0|*1\n----\n*|10\n1|00\n");
  CHECK(GenPattern::parse(z1.toText()) == z1);
  CHECK(GenPattern::parse(patternZ2().toText()) == patternZ2());

  const GenPattern outer = GenPattern::parse("-\n|1|\n-\n");
  CHECK(outer.borders == GenPattern::Borders{true, true, true, true});
  CHECK(outer.toText() == "borders:NESW\n1\n");
  CHECK(GenPattern::parse("borders:NESW\n1\n") == outer);

  CHECK(errcOf([] { GenPattern::parse("01\n0\n"); }) == Errc::ParseError);
  CHECK(errcOf([] { GenPattern::parse("0|1\n01\n"); }) == Errc::ParseError);
  CHECK(errcOf([] { GenPattern::parse("0x\n"); }) == Errc::ParseError);
  CHECK(errcOf([] { GenPattern::parse("borders:Q\n1\n"); }) == Errc::ParseError);
  CHECK(errcOf([] { GenPattern::parse("1\n--\n--\n1\n"); }) == Errc::ParseError);
  CHECK(errcOf([] { GenPattern::parse(""); }) == Errc::ParseError);
  GenPattern g(2, 2);
  CHECK(errcOf([&] { g.setColumnBar(1); }) == Errc::InvalidArgument);
  CHECK(errcOf([&] { g.setRowBar(-1); }) == Errc::InvalidArgument);
  CHECK(errcOf([&] { g.set(0, 0, '2'); }) == Errc::InvalidArgument);

  // Symmetries act on entries, bars and borders alike.
  GenPattern corner = GenPattern::parse("borders:NW\n1|0\n");
  CHECK(corner.rotate90().toText() == "borders:SW\n0\n-\n1\n");
  CHECK(corner.rotate90().rotate90().rotate90().rotate90() == corner);
  CHECK(corner.transpose().transpose() == corner);
  CHECK(symmetries(corner).size() == 8);
  CHECK(rotations(GenPattern::parse("1\n")).size() == 1);
}

TEST_CASE("generalized pattern matching agrees with brute force") {
  std::mt19937 rng(5);
  const char symbols[3] = {'0', '1', '*'};
  for (int trial = 0; trial < 4000; ++trial) {
    const BinaryMatrix host = randomMatrix(rng, 1 + rng() % 5, 1 + rng() % 5, 0.55);
    GenPattern g(1 + rng() % 3, 1 + rng() % 3);
    for (int i = 0; i < g.rows(); ++i)
      for (int j = 0; j < g.cols(); ++j) g.set(i, j, symbols[rng() % 3]);
    for (int i = 0; i + 1 < g.rows(); ++i) g.setRowBar(i, rng() % 3 == 0);
    for (int j = 0; j + 1 < g.cols(); ++j) g.setColumnBar(j, rng() % 3 == 0);
    g.borders = {rng() % 4 == 0, rng() % 4 == 0, rng() % 4 == 0, rng() % 4 == 0};
    const auto w = findGenPattern(host, g);
    REQUIRE(w.has_value() == bruteGen(host, g));
    if (w) CHECK(genOccurrence(host, g, w->rows, w->cols));
  }
  // A single 1 with every border marked only fits a 1x1 host.
  const GenPattern dot = GenPattern::parse("borders:NESW\n1\n");
  CHECK(genPatternMatch(P({"1"}), dot));
  CHECK_FALSE(genPatternMatch(P({"11"}), dot));
  // With two borders it needs a cell in that corner.
  const GenPattern ne = GenPattern::parse("borders:NE\n1\n");
  CHECK(genPatternMatch(P({"11", "10"}), ne));
  CHECK_FALSE(genPatternMatch(P({"10", "11"}), ne));
}

TEST_CASE("2-convex polyominoes are the convex ones avoiding Z1, Z2 and rotations") {
  CHECK(twoConvexPatterns().size() == 6);
  const auto rep = verifyCharacterization(Characterization::TwoConvex, 10);
  CHECK(rep.holds);
  CHECK(rep.checked == 1 + 2 + 7 + 28 + 120 + 528 + 2344 + 10416 + 46160);

  // The completed submatrix of the argument for Z1: 3-convex and containing
  // Z1, while a 2-convex polyomino of the same box avoids every pattern.
  const Polyomino filled = P({"0111111", "1111110", "1111110", "1111110", "1111110", "1000000"});
  CHECK(convexityDegree(filled) == 3);
  CHECK(genPatternMatch(filled, patternZ1()));
  const Polyomino twoConvex = P({"0111111", "1111111", "1111110", "1111110", "1111110", "1000000"});
  CHECK(convexityDegree(twoConvex) == 2);
  for (const auto& g : twoConvexPatterns()) CHECK_FALSE(genPatternMatch(twoConvex, g));

  // The bars matter: without them Z1 occurs in some 2-convex polyomino.
  GenPattern loose = patternZ1();
  loose.setColumnBar(0, false);
  loose.setRowBar(1, false);
  bool hit = false;
  for (int sp = 2; sp <= 8 && !hit; ++sp)
    for (const auto& p : testing::bySp(sp))
      if (!hit && isConvex(p) && isKConvex(p, 2) && genPatternMatch(p, loose)) hit = true;
  CHECK(hit);
}

TEST_CASE("polyomino classes given by submatrix avoidance") {
  for (Characterization c : allCharacterizations()) {
    if (c == Characterization::TwoConvex) continue;
    const int bound = c == Characterization::Ryser ? 4 : 9;
    const auto rep = verifyCharacterization(c, bound);
    INFO(characterizationName(c));
    CHECK(rep.holds);
    CHECK_FALSE(rep.counterexample.has_value());
    CHECK(parseCharacterization(characterizationName(c)) == c);
  }
  CHECK(errcOf([] { parseCharacterization("snakes"); }) == Errc::UnknownFamily);
  CHECK(errcOf([] { verifyCharacterization(Characterization::Ryser, 5); }) == Errc::CapExceeded);
  CHECK(errcOf([] { verifyCharacterization(Characterization::Convex, 13); }) == Errc::CapExceeded);

  // A wrong pattern set is caught with a counterexample.
  const auto wrong = verifyCharacterization([](const Polyomino& p) { return isConvex(p); }, {namedMatrix("H")}, 5);
  CHECK_FALSE(wrong.holds);
  REQUIRE(wrong.counterexample.has_value());
  CHECK(isPolyomino(*wrong.counterexample));

  // Convex counts by semi-perimeter through the avoidance filter.
  const auto convex = avPolyominoes(6, {namedMatrix("H"), namedMatrix("V")});
  CHECK(convex.counts == std::map<int, std::size_t>{{2, 1}, {3, 2}, {4, 7}, {5, 28}, {6, 120}});

  CHECK(uniqueUnderProjections(M({"110", "100"})));
  CHECK_FALSE(uniqueUnderProjections(M({"10", "01"})));
  CHECK(rowsAndColumnsComparable(M({"110", "111"})));
  CHECK_FALSE(rowsAndColumnsComparable(M({"110", "011"})));
  CHECK(segmentsTouchBoundingBox(M({"101", "111"})));
  CHECK_FALSE(segmentsTouchBoundingBox(M({"111", "010", "111"})));
  CHECK(isRectangleWithHoles(M({"111", "101", "111"})));
  CHECK_FALSE(isRectangleWithHoles(M({"111", "100", "101", "111"})));
}

TEST_CASE("avoidance sets of polyominoes are downward closed") {
  const std::vector<std::vector<BinaryMatrix>> sets = {
      {namedMatrix("H"), namedMatrix("V")},
      {namedMatrix("S1"), namedMatrix("S2")},
      {namedMatrix("H'"), namedMatrix("V'")},
      {M({"11", "11"})},
      {M({"101"}), M({"11", "01"})},
  };
  for (const auto& s : sets) {
    const auto av = avPolyominoes(9, s);
    CHECK(!av.members.empty());
    CHECK(downwardClosureViolations(av.members).empty());
  }
  // A set that is not a class is flagged: 2-convex polyominoes with sp <= 9.
  std::vector<Polyomino> two;
  forEachPolyominoUpTo(9, [&](const Polyomino& p) {
    if (isConvex(p) && isKConvex(p, 2)) two.push_back(p);
  });
  CHECK_FALSE(downwardClosureViolations(two).empty());
}

TEST_CASE("permutations of size m give distinct C' polyominoes in a 2m x 2m box") {
  const std::vector<BinaryMatrix> cPrime = {namedMatrix("H'"), namedMatrix("V'")};
  for (int m = 2; m <= 5; ++m) {
    std::set<BinaryMatrix> images;
    std::uint64_t factorial = 1;
    for (int i = 2; i <= m; ++i) factorial *= i;
    for (const auto& pi : enumeratePermutations(m)) {
      const BinaryMatrix img = cPrimeFromPermutation(pi);
      REQUIRE(isPolyomino(img));
      CHECK(img.rows() == 2 * m);
      CHECK(img.cols() == 2 * m);
      CHECK_FALSE(containsAnySubmatrix(img, cPrime));
      CHECK(segmentsTouchBoundingBox(img));
      images.insert(img);
    }
    CHECK(images.size() == factorial);
  }
  CHECK(cPrimeFromPermutation(Permutation::parse("12")) == M({"1100", "1110", "0011", "0111"}));
  CHECK(cPrimeFromPermutationPrinted(Permutation::parse("12")) == M({"1100", "1110", "0111", "0011"}));

  // With only the two printed special cases the corner block of 312 is cut
  // off; every permutation of size 2 is fine.
  const BinaryMatrix cut = cPrimeFromPermutationPrinted(Permutation::parse("312"));
  CHECK(cut == M({"011111", "001111", "111110", "111100", "111011", "110011"}));
  CHECK_FALSE(onesConnected(cut));
  std::size_t printedFailures = 0;
  for (int m = 2; m <= 4; ++m)
    for (const auto& pi : enumeratePermutations(m)) printedFailures += !isPolyomino(cPrimeFromPermutationPrinted(pi));
  CHECK(printedFailures == 4);
  CHECK(errcOf([] { cPrimeFromPermutation(Permutation::parse("1")); }) == Errc::InvalidArgument);
}
