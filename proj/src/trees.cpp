#include "polyenum/trees.hpp"

#include <bit>
#include <charconv>
#include <functional>
#include <map>

#include "polyenum/classify.hpp"
#include "polyenum/error.hpp"

namespace polyenum {

std::string TreeLabel::toString() const { return std::to_string(value) + (marked ? "'" : ""); }

TreeLabel TreeLabel::parse(std::string_view text) {
  TreeLabel l;
  if (!text.empty() && text.back() == '\'') {
    l.marked = true;
    text.remove_suffix(1);
  }
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, l.value);
  if (text.empty() || ec != std::errc() || ptr != end || l.value < 1)
    throw Error(Errc::ParseError, "bad tree label '" + std::string(text) + "'");
  return l;
}

PlantedPlaneTree PlantedPlaneTree::fromParens(std::string_view word) {
  if (word.empty()) throw Error(Errc::MalformedTree, "empty parenthesis word");
  PlantedPlaneTree t;
  t.parens_ = std::string(word);
  std::vector<int> stack;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c == '(') {
      if (stack.empty() && i != 0) throw Error(Errc::MalformedTree, "more than one root in '" + t.parens_ + "'");
      const int node = t.nodeCount();
      const int parent = stack.empty() ? -1 : stack.back();
      t.parent_.push_back(parent);
      t.children_.emplace_back();
      t.depth_.push_back(static_cast<int>(stack.size()) + 1);
      if (parent >= 0) t.children_[parent].push_back(node);
      stack.push_back(node);
    } else if (c == ')') {
      if (stack.empty()) throw Error(Errc::MalformedTree, "unbalanced ')' in '" + t.parens_ + "'");
      stack.pop_back();
    } else {
      throw Error(Errc::MalformedTree, std::string("unexpected character '") + c + "' in tree word");
    }
  }
  if (!stack.empty()) throw Error(Errc::MalformedTree, "unbalanced '(' in '" + t.parens_ + "'");

  // Breadth-first labels, numbered separately at odd and even depths.
  t.label_.assign(t.nodeCount(), TreeLabel{});
  int next[2] = {1, 1};
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    const bool marked = t.depth_[node] % 2 == 0;
    t.label_[node] = TreeLabel{next[marked]++, marked};
    t.height_ = std::max(t.height_, t.depth_[node]);
    for (int c : t.children_[node]) queue.push_back(c);
  }
  return t;
}

std::string PlantedPlaneTree::toParens() const { return parens_; }

int PlantedPlaneTree::nodeWithLabel(TreeLabel l) const {
  for (int i = 0; i < nodeCount(); ++i)
    if (label_[i] == l) return i;
  return -1;
}

namespace {

int colTop(const Polyomino& p, int j) { return 63 - std::countl_zero(p.matrix().colMask(j)); }
int rowEnd(const Polyomino& p, int i) { return 63 - std::countl_zero(p.matrix().rowMask(i)); }

}  // namespace

BoundaryLabeling labelBoundary(const Polyomino& p) {
  if (!isParallelogram(p)) throw Error(Errc::NotParallelogram, "labels are defined for parallelogram polyominoes");
  BoundaryLabeling b;
  b.width = p.width();
  b.height = p.height();
  b.nOf.assign(b.width, {});
  b.eOf.assign(b.height, {});
  for (int r = 1; r <= b.height; ++r) b.nOf[b.width - 1 - rowEnd(p, b.rowOf(r))].push_back({r, true});
  for (int l = 2; l <= b.width; ++l) b.eOf[b.height - 1 - colTop(p, b.columnOf(l))].push_back({l, false});
  return b;
}

PlantedPlaneTree toTree(const Polyomino& p) {
  const BoundaryLabeling b = labelBoundary(p);
  std::string word;
  std::function<void(TreeLabel)> emit = [&](TreeLabel l) {
    word += '(';
    for (TreeLabel c : l.marked ? b.eOf[l.value - 1] : b.nOf[l.value - 1]) emit(c);
    word += ')';
  };
  emit({1, false});
  return PlantedPlaneTree::fromParens(word);
}

Polyomino fromTree(const PlantedPlaneTree& t) {
  if (t.nodeCount() < 2) throw Error(Errc::MalformedTree, "a tree of a polyomino has at least two nodes");
  int width = 0, height = 0;
  for (int i = 0; i < t.nodeCount(); ++i) (t.label(i).marked ? height : width)++;
  // Column label l has its top cell in the row of its parent; row label r
  // ends in the column of its parent.
  std::vector<int> top(width), end(height);
  for (int i = 0; i < t.nodeCount(); ++i) {
    const TreeLabel l = t.label(i);
    if (l.marked)
      end[height - l.value] = width - t.label(t.parent(i)).value;
    else
      top[width - l.value] = i == 0 ? height - 1 : height - t.label(t.parent(i)).value;
  }
  std::string upper, lower;
  int y = 0;
  for (int j = 0; j < width; ++j) {
    for (; y <= top[j]; ++y) upper += 'n';
    upper += 'e';
  }
  int x = 0;
  for (int r = 0; r < height; ++r) {
    for (; x <= end[r]; ++x) lower += 'e';
    lower += 'n';
  }
  try {
    return fromBoundaryPaths(upper, lower);
  } catch (const Error&) {
    throw Error(Errc::MalformedTree, "tree " + t.toParens() + " does not bound a parallelogram polyomino");
  }
}

int treeHeight(const PlantedPlaneTree& t) { return t.height(); }

namespace {

void requireTreeSize(int n, int cap) {
  if (n < 1) throw Error(Errc::InvalidArgument, "a tree has at least one node");
  if (n > cap) throw Error(Errc::CapExceeded, std::to_string(n) + " nodes above cap " + std::to_string(cap));
}

}  // namespace

std::uint64_t countTrees(int n, int hMax) {
  requireTreeSize(n, kMaxTreeNodes);
  if (hMax < 1) return 0;
  // trees[h][m]: trees with m nodes and height <= h; forests[h][m] likewise.
  std::vector<std::vector<std::uint64_t>> trees(hMax + 1, std::vector<std::uint64_t>(n + 1, 0));
  std::vector<std::vector<std::uint64_t>> forests(hMax + 1, std::vector<std::uint64_t>(n + 1, 0));
  forests[0][0] = 1;
  for (int h = 1; h <= hMax; ++h) {
    forests[h][0] = 1;
    for (int m = 1; m <= n; ++m) {
      trees[h][m] = forests[h - 1][m - 1];
      for (int s = 1; s <= m; ++s) forests[h][m] += trees[h][s] * forests[h][m - s];
    }
  }
  return trees[hMax][n];
}

std::vector<PlantedPlaneTree> allTrees(int n) {
  requireTreeSize(n, kMaxListedTreeNodes);
  std::vector<PlantedPlaneTree> out;
  std::string word = "(";
  std::function<void(int, int)> rec = [&](int open, int close) {
    if (close == n - 1) {
      out.push_back(PlantedPlaneTree::fromParens(word + ")"));
      return;
    }
    if (open < n - 1) {
      word += '(';
      rec(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word += ')';
      rec(open, close + 1);
      word.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

TreePaths treePaths(const PlantedPlaneTree& t) {
  if (t.nodeCount() < 2) throw Error(Errc::MalformedTree, "paths need a node labeled 1'");
  // Rightmost node per depth: the last one in breadth-first order, which is
  // the one with the largest label.
  std::vector<int> rightmost(t.height() + 1, -1);
  for (int i = 0; i < t.nodeCount(); ++i) {
    int& r = rightmost[t.depth(i)];
    if (r < 0 || t.label(i).value > t.label(r).value) r = i;
  }
  auto climb = [&](int node) {
    std::vector<TreeLabel> seq;
    for (;;) {
      const TreeLabel l = t.label(node);
      seq.push_back(l);
      if (l.value == 1) break;
      node = t.parent(node);
    }
    return seq;
  };
  const int i = t.height();
  std::vector<TreeLabel> deep = climb(rightmost[i]);
  std::vector<TreeLabel> above = climb(rightmost[i - 1]);
  if (i % 2 == 1) return {std::move(above), std::move(deep)};
  return {std::move(deep), std::move(above)};
}

int degreeFromTree(const PlantedPlaneTree& t) {
  const TreePaths p = treePaths(t);
  return static_cast<int>(std::min(p.h.size(), p.v.size())) - 1;
}

KParKind kindFromTree(const PlantedPlaneTree& t) {
  const TreePaths p = treePaths(t);
  if (std::min(p.h.size(), p.v.size()) == 1) throw Error(Errc::DegreeZero, "the tree is the one of a bar");
  if (p.h.size() == p.v.size()) return KParKind::Flat;
  return p.v.size() % 2 == 1 ? KParKind::Up : KParKind::Right;
}

TreeLabel cellCNode(const PlantedPlaneTree& t) {
  const KParKind kind = kindFromTree(t);
  if (kind == KParKind::Flat) throw Error(Errc::InvalidArgument, "flat trees have no distinguished node");
  const TreePaths p = treePaths(t);
  const auto& longer = p.h.size() > p.v.size() ? p.h : p.v;
  const auto& shorter = p.h.size() > p.v.size() ? p.v : p.h;
  std::size_t common = 0;
  while (common < shorter.size() && longer[longer.size() - 1 - common] == shorter[shorter.size() - 1 - common])
    ++common;
  return longer[longer.size() - 1 - common];
}

std::pair<PlantedPlaneTree, PlantedPlaneTree> splitPair(const PlantedPlaneTree& t) {
  if (t.nodeCount() < 2) throw Error(Errc::MalformedTree, "the root has no subtree to split off");
  const std::string w = t.toParens();
  // The first subtree of the root starts at offset 1 and ends where its
  // parentheses balance.
  std::size_t end = 1;
  for (int depth = 0;; ++end) {
    depth += w[end] == '(' ? 1 : -1;
    if (depth == 0) break;
  }
  return {PlantedPlaneTree::fromParens(w.substr(1, end)), PlantedPlaneTree::fromParens("(" + w.substr(end + 1))};
}

PlantedPlaneTree joinPair(const PlantedPlaneTree& t1, const PlantedPlaneTree& t2) {
  return PlantedPlaneTree::fromParens("(" + t1.toParens() + t2.toParens().substr(1));
}

}  // namespace polyenum
