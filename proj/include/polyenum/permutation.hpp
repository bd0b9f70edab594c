#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyenum/binary_matrix.hpp"

namespace polyenum {

// One-line notation σ_1..σ_n over {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);
  // Digits only, so sizes up to 9: "24531".
  static Permutation parse(const std::string& digits);

  int size() const { return static_cast<int>(v_.size()); }
  int operator[](int i) const { return v_[i]; }  // 0-based position
  const std::vector<int>& values() const { return v_; }
  std::string toString() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> v_;
};

struct PermutationCaps {
  int maxSize = 10;
};

// All permutations of size n in lexicographic order.
void forEachPermutation(int n, const std::function<void(const Permutation&)>& fn, PermutationCaps caps = {});
std::vector<Permutation> enumeratePermutations(int n, PermutationCaps caps = {});

// Entry (i, j) is 1 iff i = σ(j), rows counted from the bottom.
BinaryMatrix permToMatrix(const Permutation& p);
Permutation matrixToPerm(const BinaryMatrix& m);

// At most one 1 in every row and in every column.
bool isQuasiPermutationMatrix(const BinaryMatrix& m);

}  // namespace polyenum
