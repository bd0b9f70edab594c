#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyenum/series.hpp"

namespace polyenum {

// Polynomial in x and z with integer coefficients.
class Poly2 {
 public:
  Poly2() = default;
  static Poly2 monomial(const BigInt& c, int xDeg, int zDeg);
  static Poly2 constant(const BigInt& c) { return monomial(c, 0, 0); }

  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int xDeg, int zDeg) const;
  bool isZero() const { return terms_.empty(); }

  Poly2 operator+(const Poly2& o) const;
  Poly2 operator-(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

  Rational evaluate(const Rational& x, const Rational& z) const;
  // Substitutes z = x.
  Poly2 diagonal() const;
  Series2 toSeries2(int order) const;
  // Series in x after substituting z = x.
  Series toSeries(int order) const;
  // e.g. "1 - z - x"
  std::string toString() const;

 private:
  void add(std::pair<int, int> exp, const BigInt& c);
  std::map<std::pair<int, int>, BigInt> terms_;  // (x degree, z degree) -> nonzero coefficient
};

// F_0 = F_1 = 1, F_2 = 1 - z, F_k = F_{k-1} - x F_{k-2}. Throws InvalidArgument for k < 0.
Poly2 fibPoly(int k);
Rational fibPolyAt(int k, const Rational& x, const Rational& z);

enum class FibIdentity {
  SquareDifference,   // F_k^2 - x F_{k-1}^2 = F_{2k}
  OddIndex,           // F_k (F_{k+1} - x F_{k-1}) = F_{2k+1}
  ContinuedFraction,  // F_k / F_{k+1} = 1/(1 - x/(1 - ... x/(1 - z))), k-1 levels
  Catalan,            // F_{k+1}^2 = x^{k+1} + F_k F_{k+2}
  PrintedCatalan,     // F_{k-1}^2 = x^{k+1} + F_k F_{k+2}, false in general
};

std::string fibIdentityName(FibIdentity id);

// Exact polynomial check; everything except ContinuedFraction is taken at z = x.
bool fibIdentityHolds(FibIdentity id, int k);

// Checks the four valid identities for 1 <= k <= kMax and returns one line
// "<name> k=<k> ok" per check. Throws IdentityFailed naming the identity and k.
std::vector<std::string> fibIdentities(int kMax);

}  // namespace polyenum
