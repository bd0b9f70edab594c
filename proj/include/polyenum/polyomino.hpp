#pragma once

#include <string>
#include <vector>

#include "polyenum/binary_matrix.hpp"

namespace polyenum {

// A cell (row, col), row 0 at the bottom.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Edge-connected 0/1 matrix whose outer rows and columns are all occupied.
class Polyomino {
 public:
  Polyomino() = default;

  // Skips validation; callers must guarantee the invariants.
  static Polyomino trusted(BinaryMatrix m);

  const BinaryMatrix& matrix() const { return m_; }
  int area() const { return area_; }
  int width() const { return m_.cols(); }
  int height() const { return m_.rows(); }
  // Width plus height of the bounding box.
  int semiPerimeter() const { return m_.cols() + m_.rows(); }
  // Half the length of the boundary; equals semiPerimeter() for convex shapes.
  int boundarySemiPerimeter() const;
  bool contains(Cell c) const {
    return c.row >= 0 && c.row < m_.rows() && c.col >= 0 && c.col < m_.cols() && m_.at(c.row, c.col);
  }

  bool operator==(const Polyomino& o) const { return m_ == o.m_; }
  auto operator<=>(const Polyomino& o) const { return m_ <=> o.m_; }

 private:
  explicit Polyomino(BinaryMatrix m);
  BinaryMatrix m_;
  int area_ = 0;
};

Polyomino validatePolyomino(const BinaryMatrix& m);

// Checks the invariants without throwing.
bool isPolyomino(const BinaryMatrix& m);

// 4-connectivity of the 1-entries (false for an all-zero matrix).
bool onesConnected(const BinaryMatrix& m);

// Self-avoiding sequence of edge-adjacent cells.
struct CellPath {
  std::vector<Cell> cells;

  // Steps over {n,s,e,w}; throws InvalidArgument if cells are not a
  // self-avoiding chain of edge-adjacent cells.
  std::string steps() const;
  bool insideOf(const Polyomino& p) const;
};

// Number of indices where consecutive steps differ.
int directionChanges(const std::string& steps);

}  // namespace polyenum
