#include "polyenum/fibonacci.hpp"

#include <sstream>

#include "polyenum/error.hpp"

namespace polyenum {

Poly2 Poly2::monomial(const BigInt& c, int xDeg, int zDeg) {
  Poly2 p;
  p.add({xDeg, zDeg}, c);
  return p;
}

void Poly2::add(std::pair<int, int> exp, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt Poly2::coefficient(int xDeg, int zDeg) const {
  auto it = terms_.find({xDeg, zDeg});
  return it == terms_.end() ? BigInt(0) : it->second;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add({a.first + b.first, a.second + b.second}, ca * cb);
  return r;
}

Rational Poly2::evaluate(const Rational& x, const Rational& z) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term(c);
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int j = 0; j < e.second; ++j) term *= z;
    sum += term;
  }
  return sum;
}

Poly2 Poly2::diagonal() const {
  Poly2 r;
  for (const auto& [e, c] : terms_) r.add({e.first + e.second, 0}, c);
  return r;
}

Series2 Poly2::toSeries2(int order) const {
  Series2 s(order);
  for (const auto& [e, c] : terms_)
    if (e.first + e.second <= order) s.set(e.first, e.second, c);
  return s;
}

Series Poly2::toSeries(int order) const {
  Series s(order);
  for (const auto& [e, c] : terms_)
    if (e.first + e.second <= order) s[e.first + e.second] += Rational(c);
  return s;
}

std::string Poly2::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = e.first == 0 && e.second == 0;
    if (mag != 1 || bare) out << mag;
    auto var = [&](const char* name, int d) {
      if (d == 0) return;
      out << name;
      if (d > 1) out << '^' << d;
    };
    var("x", e.first);
    var("z", e.second);
  }
  return out.str();
}

Poly2 fibPoly(int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "Fibonacci polynomial index must be nonnegative");
  const Poly2 one = Poly2::constant(1);
  if (k <= 1) return one;
  const Poly2 x = Poly2::monomial(1, 1, 0);
  Poly2 prev = one;                                 // F_1
  Poly2 cur = one - Poly2::monomial(1, 0, 1);       // F_2
  for (int i = 3; i <= k; ++i) {
    Poly2 next = cur - x * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational fibPolyAt(int k, const Rational& x, const Rational& z) { return fibPoly(k).evaluate(x, z); }

std::string fibIdentityName(FibIdentity id) {
  switch (id) {
    case FibIdentity::SquareDifference: return "square-difference";
    case FibIdentity::OddIndex: return "odd-index";
    case FibIdentity::ContinuedFraction: return "continued-fraction";
    case FibIdentity::Catalan: return "catalan";
    case FibIdentity::PrintedCatalan: return "printed-catalan";
  }
  return "unknown";
}

bool fibIdentityHolds(FibIdentity id, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "identities are stated for k >= 1");
  auto F = [](int i) { return fibPoly(i).diagonal(); };
  const Poly2 x = Poly2::monomial(1, 1, 0);
  const Poly2 xk1 = Poly2::monomial(1, k + 1, 0);
  switch (id) {
    case FibIdentity::SquareDifference:
      return F(k) * F(k) - x * F(k - 1) * F(k - 1) == F(2 * k);
    case FibIdentity::OddIndex:
      return F(k) * (F(k + 1) - x * F(k - 1)) == F(2 * k + 1);
    case FibIdentity::Catalan:
      return F(k + 1) * F(k + 1) == xk1 + F(k) * F(k + 2);
    case FibIdentity::PrintedCatalan:
      return F(k - 1) * F(k - 1) == xk1 + F(k) * F(k + 2);
    case FibIdentity::ContinuedFraction: {
      // num/den = 1/(1 - z), then num/den <- den/(den - x num) k-1 times.
      Poly2 num = Poly2::constant(1);
      Poly2 den = Poly2::constant(1) - Poly2::monomial(1, 0, 1);
      for (int i = 1; i < k; ++i) {
        Poly2 next = den - x * num;
        num = std::move(den);
        den = std::move(next);
      }
      return num * fibPoly(k + 1) == den * fibPoly(k);
    }
  }
  return false;
}

std::vector<std::string> fibIdentities(int kMax) {
  if (kMax < 1) throw Error(Errc::InvalidArgument, "kMax must be at least 1");
  std::vector<std::string> report;
  for (FibIdentity id :
       {FibIdentity::SquareDifference, FibIdentity::OddIndex, FibIdentity::ContinuedFraction, FibIdentity::Catalan}) {
    for (int k = 1; k <= kMax; ++k) {
      if (!fibIdentityHolds(id, k))
        throw Error(Errc::IdentityFailed, fibIdentityName(id) + " fails at k=" + std::to_string(k));
      report.push_back(fibIdentityName(id) + " k=" + std::to_string(k) + " ok");
    }
  }
  return report;
}

}  // namespace polyenum
