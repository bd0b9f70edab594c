#include <map>
#include <set>

#include "polyenum/classify.hpp"
#include "polyenum/gf.hpp"
#include "polyenum/fibonacci.hpp"
#include "polyenum/json_io.hpp"
#include "polyenum/kparallel.hpp"
#include "polyenum/trees.hpp"
#include "support.hpp"

using namespace polyenum;
using testing::errcOf;
using testing::P;

namespace {

TreeLabel col(int l) { return {l, false}; }
TreeLabel row(int l) { return {l, true}; }

// The tree of the degree-4 up example: 1 -> 1',2',3'; 1' -> 2,3; 2' -> 4,5;
// 3' -> 6,7; 6 -> 4'; 7 -> 5',6'; 4' -> 8; 5' -> 9,10,11; 8 -> 7'; 10 -> 8'.
const char* kExample = "((()())(()())((((())))((()(())())())))";

// Heights of all trees with n nodes, by brute force over parenthesis words.
std::map<int, long> heightHistogram(int n) {
  std::map<int, long> h;
  for (const auto& t : allTrees(n)) h[t.height()]++;
  return h;
}

long bruteTrees(int n, int hMin, int hMax) {
  long c = 0;
  for (const auto& [h, count] : heightHistogram(n))
    if (h >= hMin && h <= hMax) c += count;
  return c;
}

}  // namespace

TEST_CASE("parenthesis words") {
  const auto t = PlantedPlaneTree::fromParens("(()(()))");
  CHECK(t.nodeCount() == 4);
  CHECK(t.height() == 3);
  CHECK(t.children(0) == std::vector<int>{1, 2});
  CHECK(t.parent(3) == 2);
  CHECK(t.depth(3) == 3);
  CHECK(t.toParens() == "(()(()))");
  CHECK(t.label(0) == col(1));
  CHECK(t.label(1) == row(1));
  CHECK(t.label(2) == row(2));
  CHECK(t.label(3) == col(2));
  CHECK(t.nodeWithLabel(row(2)) == 2);
  CHECK(t.nodeWithLabel(row(3)) == -1);
  for (const char* bad : {"", "(", ")(", "(()", "()()", "(x)", "(()))"}) {
    CAPTURE(bad);
    CHECK(errcOf([&] { PlantedPlaneTree::fromParens(bad); }) == Errc::MalformedTree);
  }
}

TEST_CASE("tree labels as text") {
  CHECK(row(12).toString() == "12'");
  CHECK(col(3).toString() == "3");
  CHECK(TreeLabel::parse("12'") == row(12));
  CHECK(TreeLabel::parse("7") == col(7));
  for (const char* bad : {"", "'", "0", "x", "3''", "-2"}) {
    CAPTURE(bad);
    CHECK(errcOf([&] { TreeLabel::parse(bad); }) == Errc::ParseError);
  }
}

TEST_CASE("boundary labels") {
  const auto unit = labelBoundary(P({"1"}));
  CHECK(unit.nOf == std::vector<std::vector<TreeLabel>>{{row(1)}});
  CHECK(unit.eOf == std::vector<std::vector<TreeLabel>>{{}});
  CHECK(toTree(P({"1"})).toParens() == "(())");
  CHECK(fromTree(PlantedPlaneTree::fromParens("(())")) == P({"1"}));

  const Polyomino ex = fromTree(PlantedPlaneTree::fromParens(kExample));
  const auto b = labelBoundary(ex);
  CHECK(b.width == 11);
  CHECK(b.height == 8);
  CHECK(b.nOf[7 - 1] == std::vector<TreeLabel>{row(5), row(6)});
  CHECK(b.eOf[5 - 1] == std::vector<TreeLabel>{col(9), col(10), col(11)});

  CHECK(errcOf([] { labelBoundary(P({"11", "01", "11"})); }) == Errc::NotParallelogram);
  CHECK(errcOf([] { toTree(P({"10", "11", "10"})); }) == Errc::NotParallelogram);
  CHECK(errcOf([] { fromTree(PlantedPlaneTree::fromParens("()")); }) == Errc::MalformedTree);
}

TEST_CASE("bijection round trip") {
  for (int sp = 2; sp <= 10; ++sp) {
    std::set<PlantedPlaneTree> seen;
    for (const auto& p : testing::parallelogramsBySp(sp)) {
      const auto t = toTree(p);
      CHECK(t.nodeCount() == sp);
      CHECK(fromTree(t) == p);
      seen.insert(t);
      // Every label of the polyomino is a node.
      const auto b = labelBoundary(p);
      CHECK(b.width + b.height == sp);
    }
    CAPTURE(sp);
    // Injective, and onto all trees with sp nodes.
    CHECK(seen.size() == testing::parallelogramsBySp(sp).size());
    if (sp <= kMaxListedTreeNodes) CHECK(std::vector<PlantedPlaneTree>(seen.begin(), seen.end()) == allTrees(sp));
  }
}

TEST_CASE("every tree codes a parallelogram") {
  for (int n = 2; n <= 11; ++n)
    for (const auto& t : allTrees(n)) {
      const Polyomino p = fromTree(t);
      CHECK(isParallelogram(p));
      CHECK(toTree(p) == t);
    }
}

TEST_CASE("tree counts by height") {
  // Six nodes, height exactly five.
  CHECK(countTrees(6, 5) - countTrees(6, 4) == 7);
  CHECK(bruteTrees(6, 5, 5) == 7);
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845};
  for (int n = 1; n <= kMaxTreeNodes; ++n) CHECK(countTrees(n, n) == catalan[n - 1]);
  for (int n = 1; n <= 12; ++n)
    for (int h = 1; h <= n; ++h) {
      CAPTURE(n);
      CAPTURE(h);
      CHECK(countTrees(n, h) == static_cast<std::uint64_t>(bruteTrees(n, 1, h)));
    }
  // x F_{h-1} / F_h at z = x counts trees of height <= h.
  const int N = 14;
  for (int h = 1; h <= 8; ++h) {
    const Series s = (fibPoly(h - 1).toSeries(N) / fibPoly(h).toSeries(N)).shift(1);
    for (int n = 1; n <= N; ++n) {
      CAPTURE(h);
      CAPTURE(n);
      CHECK(s[n] == Rational(countTrees(n, h)));
    }
  }
  CHECK(countTrees(5, 0) == 0);
  CHECK(errcOf([] { countTrees(kMaxTreeNodes + 1, 3); }) == Errc::CapExceeded);
  CHECK(errcOf([] { countTrees(0, 3); }) == Errc::InvalidArgument);
  CHECK(errcOf([] { allTrees(kMaxListedTreeNodes + 1); }) == Errc::CapExceeded);
}

TEST_CASE("h_T and v_T of the example tree") {
  const auto t = PlantedPlaneTree::fromParens(kExample);
  CHECK(t.nodeCount() == 19);
  CHECK(treeHeight(t) == 6);
  const TreePaths paths = treePaths(t);
  CHECK(paths.h == std::vector<TreeLabel>{row(8), col(10), row(5), col(7), row(3), col(1)});
  CHECK(paths.v == std::vector<TreeLabel>{col(11), row(5), col(7), row(3), col(1)});
  CHECK(degreeFromTree(t) == 4);
  CHECK(kindFromTree(t) == KParKind::Up);
  CHECK(cellCNode(t) == col(10));

  const Polyomino p = fromTree(t);
  CHECK(classifyKPar(p) == KParClass{KParKind::Up, 4});
  CHECK(convexityDegree(p) == 4);
  const auto b = labelBoundary(p);
  CHECK(cellC(p).col == b.columnOf(10));
  CHECK(recompose(decompose(p)) == p);
}

TEST_CASE("degree, class and cell C read from the tree") {
  for (int sp = 2; sp <= 10; ++sp) {
    for (const auto& p : testing::parallelogramsBySp(sp)) {
      const auto t = toTree(p);
      const int k = convexityDegree(p);
      CHECK(degreeFromTree(t) == k);
      CHECK(t.height() <= k + 3);
      const TreePaths paths = treePaths(t);
      // The first nodes of v_T and h_T carry the largest column and row labels.
      CHECK(paths.v.front() == col(p.width()));
      CHECK(paths.h.front() == row(p.height()));
      if (k == 0) {
        CHECK(errcOf([&] { kindFromTree(t); }) == Errc::DegreeZero);
        continue;
      }
      const KParClass c = classifyKPar(p);
      CHECK(kindFromTree(t) == c.kind);
      if (c.kind == KParKind::Flat) {
        CHECK(paths.h.size() == paths.v.size());
        CHECK(errcOf([&] { cellCNode(t); }) == Errc::InvalidArgument);
        continue;
      }
      const TreeLabel node = cellCNode(t);
      const Cell cell = cellC(p);
      const auto b = labelBoundary(p);
      if (node.marked)
        CHECK(cell.row == b.rowOf(node.value));
      else
        CHECK(cell.col == b.columnOf(node.value));
    }
  }
}

TEST_CASE("pair decomposition") {
  const auto [t1, t2] = splitPair(PlantedPlaneTree::fromParens(kExample));
  CHECK(t1.toParens() == "(()())");
  CHECK(t2.toParens() == "((()())((((())))((()(())())())))");
  CHECK(errcOf([] { splitPair(PlantedPlaneTree::fromParens("()")); }) == Errc::MalformedTree);
  for (int n = 2; n <= 10; ++n)
    for (const auto& t : allTrees(n)) {
      const auto [a, b] = splitPair(t);
      CHECK(a.nodeCount() + b.nodeCount() == n);
      CHECK(joinPair(a, b) == t);
      CHECK(t.height() == std::max(a.height() + 1, b.height()));
    }
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b)
      for (const auto& t1 : allTrees(a))
        for (const auto& t2 : allTrees(b)) CHECK(splitPair(joinPair(t1, t2)) == std::pair{t1, t2});
}

TEST_CASE("degree at most k through the pair heights") {
  // P has degree <= k exactly when both trees have height <= k + 2 but not
  // both exactly k + 2.
  for (int sp = 2; sp <= 10; ++sp)
    for (const auto& p : testing::parallelogramsBySp(sp)) {
      const auto [t1, t2] = splitPair(toTree(p));
      const int k = convexityDegree(p);
      for (int j = 0; j <= 5; ++j) {
        const bool inPairs = t1.height() <= j + 2 && t2.height() <= j + 2 &&
                             !(t1.height() == j + 2 && t2.height() == j + 2);
        CHECK(inPairs == (k <= j));
      }
    }
}

TEST_CASE("pair counting reproduces k-parallelogram counts") {
  const int maxN = 12;
  std::map<int, std::map<int, long>> hist;  // nodes -> height -> trees
  for (int n = 1; n < maxN; ++n) hist[n] = heightHistogram(n);
  std::map<std::pair<int, int>, long> byDegree;  // (k, sp) -> parallelograms
  for (int sp = 2; sp <= maxN; ++sp)
    for (const auto& p : testing::parallelogramsBySp(sp)) byDegree[{convexityDegree(p), sp}]++;
  for (int k = 0; k <= 3; ++k) {
    const Series pk = gfKParallelogram(k, maxN);
    for (int n = 2; n <= maxN; ++n) {
      long atMost = 0, exactly = 0;
      for (int a = 1; a < n; ++a) {
        long la = 0, lb = 0;
        for (const auto& [h, c] : hist[a])
          if (h <= k + 2) la += c;
        for (const auto& [h, c] : hist[n - a])
          if (h <= k + 2) lb += c;
        atMost += la * lb;
        const auto ea = hist[a].count(k + 2) ? hist[a].at(k + 2) : 0;
        const auto eb = hist[n - a].count(k + 2) ? hist[n - a].at(k + 2) : 0;
        exactly += ea * eb;
      }
      long brute = 0;
      for (int j = 0; j <= k; ++j) brute += byDegree.count({j, n}) ? byDegree.at({j, n}) : 0;
      CAPTURE(k);
      CAPTURE(n);
      CHECK(atMost - exactly == brute);
      CHECK(pk[n] == brute);
    }
  }
}

TEST_CASE("tree json") {
  const auto t = PlantedPlaneTree::fromParens("(()(()))");
  const auto j = treeToJson(t);
  CHECK(j.dump() == R"j({"labels":["1","1'","2'","2"],"tree":"(()(()))"})j");
  CHECK(treeFromJson(j) == t);
  CHECK(treeFromJson(nlohmann::json{{"tree", "(())"}}) == PlantedPlaneTree::fromParens("(())"));
  CHECK(errcOf([] { treeFromJson(nlohmann::json{{"tree", "(())"}, {"labels", {"1", "2"}}}); }) == Errc::MalformedTree);
  CHECK(errcOf([] { treeFromJson(nlohmann::json{{"tree", "(())"}, {"labels", {"1"}}}); }) == Errc::MalformedTree);
  CHECK(errcOf([] { treeFromJson(nlohmann::json{{"labels", {"1"}}}); }) == Errc::ParseError);
  CHECK(errcOf([] { treeFromJson(nlohmann::json{{"tree", 3}}); }) == Errc::ParseError);
}
