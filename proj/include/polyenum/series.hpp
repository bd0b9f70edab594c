#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyenum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Power series in one variable truncated after x^order, exact rational
// coefficients.
class Series {
 public:
  explicit Series(int order, std::string var = "x");

  static Series constant(const Rational& c, int order, std::string var = "x");
  static Series variable(int order, std::string var = "x");
  // Coefficients past `order` are dropped; missing ones are zero.
  static Series fromCoefficients(std::vector<Rational> coeffs, int order, std::string var = "x");
  static Series fromIntegers(const std::vector<BigInt>& coeffs, int order, std::string var = "x");

  int order() const { return order_; }
  const std::string& var() const { return var_; }
  const Rational& operator[](int n) const { return c_[n]; }
  Rational& operator[](int n) { return c_[n]; }
  const std::vector<Rational>& coefficients() const { return c_; }
  // Coefficients of degree 0..order as integers; throws InvalidArgument if
  // one of them is not integral.
  std::vector<BigInt> integerCoefficients() const;

  // Binary operations truncate to the smaller order of the two operands.
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series operator*(const Rational& s) const;
  // Throws NonInvertibleConstantTerm.
  Series operator/(const Series& o) const;
  Series inverse() const;
  // Throws NonSquareConstantTerm unless the constant term is the square of a
  // nonzero rational; the root with positive constant term is returned.
  Series sqrt() const;
  // this(inner(x)); throws ConstantTermNotZero.
  Series compose(const Series& inner) const;
  // Multiplication by x^k (k >= 0), keeping the order.
  Series shift(int k) const;
  Series pow(int e) const;
  Series truncate(int order) const;

  bool operator==(const Series& o) const { return order_ == o.order_ && c_ == o.c_; }

  // "n,numerator,denominator" per coefficient.
  std::string toCsv() const;

 private:
  int order_;
  std::string var_;
  std::vector<Rational> c_;
};

// Power series in x and z with integer coefficients, truncated to total
// degree <= order.
class Series2 {
 public:
  explicit Series2(int order);

  static Series2 constant(const BigInt& c, int order);
  static Series2 x(int order);
  static Series2 z(int order);

  int order() const { return order_; }
  const BigInt& at(int i, int j) const;  // coefficient of x^i z^j
  void set(int i, int j, const BigInt& v);

  Series2 operator+(const Series2& o) const;
  Series2 operator-(const Series2& o) const;
  Series2 operator*(const Series2& o) const;
  Series2 operator*(const BigInt& s) const;
  // Requires constant term +-1; throws NonInvertibleConstantTerm.
  Series2 inverse() const;
  Series2 operator/(const Series2& o) const { return *this * o.inverse(); }
  // this(x, g(x, z)); throws ConstantTermNotZero.
  Series2 composeZ(const Series2& g) const;
  // Setting z = x.
  Series diagonal() const;

  bool operator==(const Series2& o) const { return order_ == o.order_ && c_ == o.c_; }

 private:
  int index(int i, int j) const;
  int order_;
  std::vector<BigInt> c_;  // row i holds x^i z^0 .. x^i z^(order-i)
};

}  // namespace polyenum
