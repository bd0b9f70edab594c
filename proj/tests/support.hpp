#pragma once

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "polyenum/binary_matrix.hpp"
#include "polyenum/enumerate.hpp"
#include "polyenum/error.hpp"
#include "polyenum/polyomino.hpp"

namespace testing {

inline polyenum::BinaryMatrix M(std::initializer_list<const char*> topRows) {
  std::vector<std::string> rows(topRows.begin(), topRows.end());
  return polyenum::BinaryMatrix::fromTopRows(rows);
}

inline polyenum::Polyomino P(std::initializer_list<const char*> topRows) { return polyenum::validatePolyomino(M(topRows)); }

inline polyenum::Errc errcOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const polyenum::Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return polyenum::Errc::InvalidArgument;
}

// All polyominoes of the given semi-perimeter, enumerated once per process.
inline const std::vector<polyenum::Polyomino>& bySp(int sp) {
  static std::map<int, std::vector<polyenum::Polyomino>> cache;
  auto it = cache.find(sp);
  if (it == cache.end())
    it = cache.emplace(sp, polyenum::enumeratePolyominoes(polyenum::EnumerationLimit::bySemiPerimeter(sp))).first;
  return it->second;
}

template <class Pred>
std::vector<polyenum::Polyomino> filterSp(int sp, Pred pred) {
  std::vector<polyenum::Polyomino> out;
  for (const auto& p : bySp(sp))
    if (pred(p)) out.push_back(p);
  return out;
}

// Parallelogram polyominoes of a given semi-perimeter, built column by
// column: bottoms and tops never decrease and consecutive columns overlap.
inline std::vector<polyenum::Polyomino> parallelogramsBySp(int sp) {
  std::vector<polyenum::Polyomino> out;
  std::vector<std::pair<int, int>> cols;  // [bottom, top) per column
  std::function<void(int)> extend = [&](int used) {
    const auto [lo, hi] = cols.back();
    if (used + hi == sp) {
      std::vector<std::uint64_t> masks(hi, 0);
      for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = cols[j].first; i < cols[j].second; ++i) masks[i] |= std::uint64_t{1} << j;
      out.push_back(polyenum::validatePolyomino(
          polyenum::BinaryMatrix::fromRowMasks(static_cast<int>(cols.size()), std::move(masks))));
    }
    if (used + 1 + hi > sp) return;
    for (int nlo = lo; nlo < hi; ++nlo)
      for (int nhi = hi; used + 1 + nhi <= sp; ++nhi) {
        cols.push_back({nlo, nhi});
        extend(used + 1);
        cols.pop_back();
      }
  };
  for (int h = 1; h < sp; ++h) {
    cols = {{0, h}};
    extend(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing
