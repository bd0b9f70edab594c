#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyenum/kparallel.hpp"
#include "polyenum/polyomino.hpp"

namespace polyenum {

constexpr int kMaxTreeNodes = 16;
constexpr int kMaxListedTreeNodes = 13;

// Column labels are plain integers, row labels are marked ("3'" in text).
struct TreeLabel {
  int value = 0;
  bool marked = false;
  auto operator<=>(const TreeLabel&) const = default;
  std::string toString() const;
  // Throws ParseError.
  static TreeLabel parse(std::string_view text);
};

// Rooted ordered tree. Nodes are numbered in preorder (the root is 0) and
// carry the canonical labels of the bijection: nodes at odd depth get
// 1, 2, ... and nodes at even depth 1', 2', ..., both in breadth-first order.
class PlantedPlaneTree {
 public:
  // Balanced-parentheses word, one pair per node, e.g. "(()(()))". Throws
  // MalformedTree.
  static PlantedPlaneTree fromParens(std::string_view word);
  std::string toParens() const;

  int nodeCount() const { return static_cast<int>(parent_.size()); }
  // Number of nodes on a longest path starting at the root.
  int height() const { return height_; }
  int parent(int node) const { return parent_[node]; }  // -1 at the root
  const std::vector<int>& children(int node) const { return children_[node]; }
  int depth(int node) const { return depth_[node]; }  // 1 at the root
  TreeLabel label(int node) const { return label_[node]; }
  // -1 when no node carries the label.
  int nodeWithLabel(TreeLabel l) const;
  std::vector<TreeLabel> preorderLabels() const { return label_; }

  bool operator==(const PlantedPlaneTree& o) const { return parens_ == o.parens_; }
  auto operator<=>(const PlantedPlaneTree& o) const { return parens_ <=> o.parens_; }

 private:
  std::string parens_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> depth_;
  std::vector<TreeLabel> label_;
  int height_ = 0;
};

// Labels of a parallelogram polyomino: upper-boundary east steps are
// 1..width from right to left (one per column), lower-boundary north steps
// are 1'..height' from top to bottom (one per row). nOf[l-1] lists the rows
// whose right end lies in column l; eOf[l-1] lists the columns other than 1
// whose top cell lies in row l'. Both lists are in increasing label order.
struct BoundaryLabeling {
  int width = 0;
  int height = 0;
  std::vector<std::vector<TreeLabel>> nOf;
  std::vector<std::vector<TreeLabel>> eOf;
  // Matrix index of the column / row carrying a label.
  int columnOf(int l) const { return width - l; }
  int rowOf(int l) const { return height - l; }
};

// Throws NotParallelogram.
BoundaryLabeling labelBoundary(const Polyomino& p);
PlantedPlaneTree toTree(const Polyomino& p);
// Throws MalformedTree for the one-node tree.
Polyomino fromTree(const PlantedPlaneTree& t);

int treeHeight(const PlantedPlaneTree& t);
// Plane trees with n nodes and height <= hMax. Throws CapExceeded for
// n > 16, InvalidArgument for n < 1.
std::uint64_t countTrees(int n, int hMax);
// All plane trees with n nodes, sorted by parenthesis word. Throws
// CapExceeded for n > 13.
std::vector<PlantedPlaneTree> allTrees(int n);

// Node sequences from the rightmost node at the deepest level and at the
// level above it, climbing to node 1 or 1' (inclusive). With odd height
// v starts at the deepest level, with even height h does.
struct TreePaths {
  std::vector<TreeLabel> h;
  std::vector<TreeLabel> v;
};
// Throws MalformedTree for the one-node tree.
TreePaths treePaths(const PlantedPlaneTree& t);
// min(|h_T|, |v_T|) - 1.
int degreeFromTree(const PlantedPlaneTree& t);
// Flat when |h_T| = |v_T|, otherwise up when |v_T| is odd and right when it
// is even. Throws DegreeZero for trees of bars.
KParKind kindFromTree(const PlantedPlaneTree& t);
// For up and right trees, the last node before h_T and v_T run together; it
// names the column (unmarked) or row (marked) of the cell C. Throws
// DegreeZero, InvalidArgument for flat trees.
TreeLabel cellCNode(const PlantedPlaneTree& t);

// T1 is the subtree at 1', T2 the rest of the tree; joinPair puts T1 back as
// the leftmost subtree of T2's root. splitPair throws MalformedTree for the
// one-node tree.
std::pair<PlantedPlaneTree, PlantedPlaneTree> splitPair(const PlantedPlaneTree& t);
PlantedPlaneTree joinPair(const PlantedPlaneTree& t1, const PlantedPlaneTree& t2);

}  // namespace polyenum
