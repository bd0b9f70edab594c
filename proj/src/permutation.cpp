#include "polyenum/permutation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "polyenum/error.hpp"

namespace polyenum {

Permutation::Permutation(std::vector<int> values) : v_(std::move(values)) {
  std::vector<bool> seen(v_.size() + 1, false);
  for (int x : v_) {
    if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
      throw Error(Errc::NotAPermutation, "values must be a rearrangement of 1..n");
    seen[x] = true;
  }
}

Permutation Permutation::parse(const std::string& digits) {
  std::vector<int> v;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw Error(Errc::ParseError, "permutation digits must be 1-9");
    v.push_back(ch - '0');
  }
  return Permutation(std::move(v));
}

std::string Permutation::toString() const {
  std::string out;
  const bool wide = size() > 9;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (wide && i > 0) out += ' ';
    out += std::to_string(v_[i]);
  }
  return out;
}

void forEachPermutation(int n, const std::function<void(const Permutation&)>& fn, PermutationCaps caps) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative size");
  if (n > caps.maxSize) throw Error(Errc::CapExceeded, "permutation size " + std::to_string(n) + " above cap");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> enumeratePermutations(int n, PermutationCaps caps) {
  std::vector<Permutation> out;
  forEachPermutation(n, [&](const Permutation& p) { out.push_back(p); }, caps);
  return out;
}

BinaryMatrix permToMatrix(const Permutation& p) {
  if (p.size() == 0) throw Error(Errc::InvalidArgument, "empty permutation has no matrix");
  BinaryMatrix m(p.size(), p.size());
  for (int j = 0; j < p.size(); ++j) m.set(p[j] - 1, j, true);
  return m;
}

Permutation matrixToPerm(const BinaryMatrix& m) {
  if (m.empty() || m.rows() != m.cols()) throw Error(Errc::NotAPermutationMatrix, "matrix is not square");
  std::vector<int> v(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    const std::uint64_t col = m.colMask(j);
    if (std::popcount(col) != 1) throw Error(Errc::NotAPermutationMatrix, "column without exactly one 1");
    v[j] = std::countr_zero(col) + 1;
  }
  for (int i = 0; i < m.rows(); ++i)
    if (m.rowSum(i) != 1) throw Error(Errc::NotAPermutationMatrix, "row without exactly one 1");
  return Permutation(std::move(v));
}

bool isQuasiPermutationMatrix(const BinaryMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    if (m.rowSum(i) > 1) return false;
  for (int j = 0; j < m.cols(); ++j)
    if (m.colSum(j) > 1) return false;
  return true;
}

}  // namespace polyenum
