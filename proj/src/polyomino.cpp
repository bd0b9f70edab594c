#include "polyenum/polyomino.hpp"

#include <bit>
#include <set>

#include "polyenum/error.hpp"

namespace polyenum {

Polyomino::Polyomino(BinaryMatrix m) : m_(std::move(m)), area_(m_.count()) {}

Polyomino Polyomino::trusted(BinaryMatrix m) { return Polyomino(std::move(m)); }

int Polyomino::boundarySemiPerimeter() const {
  // Each cell has four edges; every adjacent pair of cells hides two.
  int shared = 0;
  for (int i = 0; i < m_.rows(); ++i) {
    const std::uint64_t row = m_.rowMask(i);
    shared += std::popcount(row & (row >> 1));
    if (i + 1 < m_.rows()) shared += std::popcount(row & m_.rowMask(i + 1));
  }
  return 2 * area_ - shared;
}

bool onesConnected(const BinaryMatrix& m) {
  const int r = m.rows();
  if (r == 0) return false;
  std::vector<std::uint64_t> seen(r, 0);
  int start = -1;
  for (int i = 0; i < r && start < 0; ++i)
    if (m.rowMask(i) != 0) start = i;
  if (start < 0) return false;
  const std::uint64_t first = m.rowMask(start);
  seen[start] = first & (~first + 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < r; ++i) {
      std::uint64_t grow = seen[i] | (seen[i] << 1) | (seen[i] >> 1);
      if (i > 0) grow |= seen[i - 1];
      if (i + 1 < r) grow |= seen[i + 1];
      grow &= m.rowMask(i);
      // Spread along horizontal runs in one go.
      std::uint64_t prev = 0;
      while (grow != prev) {
        prev = grow;
        grow |= ((grow << 1) | (grow >> 1)) & m.rowMask(i);
      }
      if (grow != seen[i]) {
        seen[i] = grow;
        changed = true;
      }
    }
  }
  for (int i = 0; i < r; ++i)
    if (seen[i] != m.rowMask(i)) return false;
  return true;
}

namespace {

void checkInvariants(const BinaryMatrix& m) {
  if (m.empty() || m.count() == 0) throw Error(Errc::EmptyMatrix, "no occupied cell");
  if (m.rowMask(0) == 0 || m.rowMask(m.rows() - 1) == 0 || m.colMask(0) == 0 || m.colMask(m.cols() - 1) == 0)
    throw Error(Errc::LooseBoundingBox, "an outer row or column is empty");
  if (!onesConnected(m)) throw Error(Errc::NotConnected, "cells are not edge-connected");
}

}  // namespace

Polyomino validatePolyomino(const BinaryMatrix& m) {
  checkInvariants(m);
  return Polyomino::trusted(m);
}

bool isPolyomino(const BinaryMatrix& m) {
  if (m.empty() || m.count() == 0) return false;
  if (m.rowMask(0) == 0 || m.rowMask(m.rows() - 1) == 0 || m.colMask(0) == 0 || m.colMask(m.cols() - 1) == 0)
    return false;
  return onesConnected(m);
}

std::string CellPath::steps() const {
  std::string out;
  std::set<Cell> seen;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!seen.insert(cells[i]).second) throw Error(Errc::InvalidArgument, "path revisits a cell");
    if (i == 0) continue;
    const int dr = cells[i].row - cells[i - 1].row;
    const int dc = cells[i].col - cells[i - 1].col;
    if (dr == 1 && dc == 0) {
      out += 'n';
    } else if (dr == -1 && dc == 0) {
      out += 's';
    } else if (dr == 0 && dc == 1) {
      out += 'e';
    } else if (dr == 0 && dc == -1) {
      out += 'w';
    } else {
      throw Error(Errc::InvalidArgument, "consecutive cells are not edge-adjacent");
    }
  }
  return out;
}

bool CellPath::insideOf(const Polyomino& p) const {
  for (const auto& c : cells)
    if (!p.contains(c)) return false;
  return true;
}

int directionChanges(const std::string& steps) {
  int n = 0;
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (steps[i] != steps[i - 1]) ++n;
  return n;
}

}  // namespace polyenum
