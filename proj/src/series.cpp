#include "polyenum/series.hpp"

#include <algorithm>
#include <sstream>

#include "polyenum/error.hpp"

namespace polyenum {

namespace {

void requireOrder(int order) {
  if (order < 0) throw Error(Errc::InvalidArgument, "series order must be nonnegative");
}

bool rationalSqrt(const Rational& q, Rational& root) {
  if (q <= 0) return false;
  const BigInt n = boost::multiprecision::numerator(q);
  const BigInt d = boost::multiprecision::denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(n);
  const BigInt rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

}  // namespace

Series::Series(int order, std::string var) : order_(order), var_(std::move(var)) {
  requireOrder(order);
  c_.assign(order + 1, Rational(0));
}

Series Series::constant(const Rational& c, int order, std::string var) {
  Series s(order, std::move(var));
  s.c_[0] = c;
  return s;
}

Series Series::variable(int order, std::string var) {
  Series s(order, std::move(var));
  if (order >= 1) s.c_[1] = 1;
  return s;
}

Series Series::fromCoefficients(std::vector<Rational> coeffs, int order, std::string var) {
  Series s(order, std::move(var));
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.c_[i] = std::move(coeffs[i]);
  return s;
}

Series Series::fromIntegers(const std::vector<BigInt>& coeffs, int order, std::string var) {
  Series s(order, std::move(var));
  for (std::size_t i = 0; i < coeffs.size() && static_cast<int>(i) <= order; ++i) s.c_[i] = Rational(coeffs[i]);
  return s;
}

std::vector<BigInt> Series::integerCoefficients() const {
  std::vector<BigInt> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    if (boost::multiprecision::denominator(q) != 1) throw Error(Errc::InvalidArgument, "coefficient is not an integer");
    out.push_back(boost::multiprecision::numerator(q));
  }
  return out;
}

Series Series::operator+(const Series& o) const {
  Series r(std::min(order_, o.order_), var_);
  for (int n = 0; n <= r.order_; ++n) r.c_[n] = c_[n] + o.c_[n];
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r(std::min(order_, o.order_), var_);
  for (int n = 0; n <= r.order_; ++n) r.c_[n] = c_[n] - o.c_[n];
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Series Series::operator*(const Series& o) const {
  Series r(std::min(order_, o.order_), var_);
  for (int i = 0; i <= r.order_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j)
      if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

Series Series::operator*(const Rational& s) const {
  Series r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

Series Series::inverse() const {
  if (c_[0] == 0) throw Error(Errc::NonInvertibleConstantTerm, "constant term is zero");
  Series r(order_, var_);
  const Rational inv = 1 / c_[0];
  r.c_[0] = inv;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = 0;
    for (int i = 1; i <= n; ++i)
      if (c_[i] != 0) acc += c_[i] * r.c_[n - i];
    r.c_[n] = -acc * inv;
  }
  return r;
}

Series Series::operator/(const Series& o) const {
  const Series inv = o.inverse();
  return *this * inv;
}

Series Series::sqrt() const {
  Rational root;
  if (!rationalSqrt(c_[0], root)) throw Error(Errc::NonSquareConstantTerm, "constant term is not a positive rational square");
  Series r(order_, var_);
  r.c_[0] = root;
  const Rational twice = 2 * root;
  for (int n = 1; n <= order_; ++n) {
    Rational acc = c_[n];
    for (int i = 1; i < n; ++i) acc -= r.c_[i] * r.c_[n - i];
    r.c_[n] = acc / twice;
  }
  return r;
}

Series Series::compose(const Series& inner) const {
  if (inner.c_[0] != 0) throw Error(Errc::ConstantTermNotZero, "inner series must have zero constant term");
  const int order = std::min(order_, inner.order_);
  Series r = Series::constant(c_[order], order, inner.var_);
  for (int n = order - 1; n >= 0; --n) {
    r = r * inner;
    r.c_[0] += c_[n];
  }
  return r;
}

Series Series::shift(int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "shift must be nonnegative");
  Series r(order_, var_);
  for (int n = 0; n + k <= order_; ++n) r.c_[n + k] = c_[n];
  return r;
}

Series Series::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Series r = Series::constant(1, order_, var_);
  Series base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return r;
}

Series Series::truncate(int order) const {
  return fromCoefficients(c_, std::min(order, order_), var_);
}

std::string Series::toCsv() const {
  std::ostringstream out;
  for (int n = 0; n <= order_; ++n)
    out << n << ',' << boost::multiprecision::numerator(c_[n]) << ',' << boost::multiprecision::denominator(c_[n])
        << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

Series2::Series2(int order) : order_(order) {
  requireOrder(order);
  c_.assign((order + 1) * (order + 2) / 2, BigInt(0));
}

int Series2::index(int i, int j) const { return i * (order_ + 1) - i * (i - 1) / 2 + j; }

const BigInt& Series2::at(int i, int j) const {
  static const BigInt zero = 0;
  if (i < 0 || j < 0 || i + j > order_) return zero;
  return c_[index(i, j)];
}

void Series2::set(int i, int j, const BigInt& v) {
  if (i < 0 || j < 0 || i + j > order_) throw Error(Errc::InvalidArgument, "term beyond the truncation order");
  c_[index(i, j)] = v;
}

Series2 Series2::constant(const BigInt& c, int order) {
  Series2 s(order);
  s.set(0, 0, c);
  return s;
}

Series2 Series2::x(int order) {
  Series2 s(order);
  if (order >= 1) s.set(1, 0, 1);
  return s;
}

Series2 Series2::z(int order) {
  Series2 s(order);
  if (order >= 1) s.set(0, 1, 1);
  return s;
}

Series2 Series2::operator+(const Series2& o) const {
  Series2 r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j) r.c_[r.index(i, j)] = at(i, j) + o.at(i, j);
  return r;
}

Series2 Series2::operator-(const Series2& o) const {
  Series2 r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i)
    for (int j = 0; i + j <= r.order_; ++j) r.c_[r.index(i, j)] = at(i, j) - o.at(i, j);
  return r;
}

Series2 Series2::operator*(const Series2& o) const {
  Series2 r(std::min(order_, o.order_));
  const int n = r.order_;
  // Nonzero terms of the right operand, listed once.
  struct Term {
    int i, j;
    const BigInt* v;
  };
  std::vector<Term> terms;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (o.at(i, j) != 0) terms.push_back({i, j, &o.at(i, j)});
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      const BigInt& a = at(i, j);
      if (a == 0) continue;
      for (const auto& t : terms)
        if (i + j + t.i + t.j <= n) r.c_[r.index(i + t.i, j + t.j)] += a * *t.v;
    }
  }
  return r;
}

Series2 Series2::operator*(const BigInt& s) const {
  Series2 r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

Series2 Series2::inverse() const {
  const BigInt a0 = at(0, 0);
  if (a0 != 1 && a0 != -1) throw Error(Errc::NonInvertibleConstantTerm, "constant term must be 1 or -1");
  Series2 r(order_);
  r.set(0, 0, a0);
  for (int d = 1; d <= order_; ++d) {
    for (int i = 0; i <= d; ++i) {
      const int j = d - i;
      BigInt acc = 0;
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q)
          if ((p || q) && at(p, q) != 0) acc += at(p, q) * r.at(i - p, j - q);
      r.set(i, j, -acc * a0);
    }
  }
  return r;
}

Series2 Series2::composeZ(const Series2& g) const {
  if (g.at(0, 0) != 0) throw Error(Errc::ConstantTermNotZero, "substituted series must have zero constant term");
  const int n = std::min(order_, g.order_);
  // Horner in z: sum_j P_j(x) g^j.
  auto column = [&](int j) {
    Series2 p(n);
    for (int i = 0; i + j <= n; ++i) p.set(i, 0, at(i, j));
    return p;
  };
  Series2 r = column(n);
  for (int j = n - 1; j >= 0; --j) r = r * g + column(j);
  return r;
}

Series Series2::diagonal() const {
  Series s(order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) s[i + j] += Rational(at(i, j));
  return s;
}

}  // namespace polyenum
