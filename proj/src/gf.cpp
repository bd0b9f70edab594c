#include "polyenum/gf.hpp"

#include <algorithm>
#include <cctype>

#include "polyenum/error.hpp"
#include "polyenum/fibonacci.hpp"

namespace polyenum {

namespace {

void requireGfOrder(int N, int cap) {
  if (N < 0) throw Error(Errc::InvalidArgument, "order must be nonnegative");
  if (N > cap) throw Error(Errc::CapExceeded, "order " + std::to_string(N) + " above cap " + std::to_string(cap));
}

void requireK(int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "k must be nonnegative");
}

Series F(int k, int N) { return fibPoly(k).toSeries(N); }
Series2 F2(int k, int N) { return fibPoly(k).toSeries2(N); }

Series poly(std::initializer_list<long> coeffs, int N) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Series::fromCoefficients(c, N);
}

Series2 xPow(int e, int N) {
  Series2 s(N);
  if (e <= N) s.set(e, 0, 1);
  return s;
}

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Series gfKParallelogram(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  const Series r1 = F(k + 1, N) / F(k + 2, N);
  const Series r0 = F(k, N) / F(k + 1, N);
  const Series diff = r1 - r0;
  return (r1 * r1 - diff * diff).shift(2);
}

Series gfExactDegreeByDifference(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  if (k == 0) {
    // Unit cell plus horizontal and vertical bars: xy + x^2 y/(1-x) + x y^2/(1-y) at y = x.
    const Series one = Series::constant(1, N);
    return Series::variable(N).shift(1) + (one / poly({1, -1}, N)).shift(3) * Rational(2);
  }
  return gfKParallelogram(k, N) - gfKParallelogram(k - 1, N);
}

KParallelogramParts kParallelogramParts(int k, int N) {
  if (k < 1) throw Error(Errc::InvalidArgument, "the recurrences start at k = 1");
  requireGfOrder(N, kMaxGfOrder);
  const Series2 one = Series2::constant(1, N);
  const Series2 x = Series2::x(N);
  const Series2 v = Series2::z(N);  // z for the A's, t for the B's
  const Series2 inv1v = (one - v).inverse();
  const Series2 w = x * inv1v;  // x / (1 - v)

  // k = 1.
  KParallelogramParts p{v * v * x * (one - v - x).inverse() * inv1v, v * v * inv1v, v + v * v * inv1v,
                        v * v * inv1v};
  for (int i = 2; i <= k; ++i) {
    // B^_1 = B_1 - t drops the lone north step; from k = 2 on B^_k = B_k - y.
    const Series2 bhat = p.b - (i == 2 ? v : x);
    const Series2 factor = i == 2 ? v : v * inv1v;
    KParallelogramParts next{factor * p.a.composeZ(w), factor * p.abar.composeZ(w),
                             x * inv1v + factor * bhat.composeZ(w), factor * p.bbar.composeZ(w)};
    p = std::move(next);
  }
  return p;
}

Series gfExactDegreeByProducts(int k, int N) {
  const KParallelogramParts p = kParallelogramParts(k, N);
  return p.a.diagonal() * p.b.diagonal() * Rational(2) + p.abar.diagonal() * p.bbar.diagonal();
}

Series gfExactDegree(int k, int N) {
  const Series diff = gfExactDegreeByDifference(k, N);
  if (k == 0) return diff;
  if (gfExactDegreeByProducts(k, N) != diff)
    throw Error(Errc::IdentityFailed, "two constructions of Gf_" + std::to_string(k) + " disagree");
  return diff;
}

Series2 closedFormA(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  return Series2::z(N) * xPow(k + 1, N) * (F2(k + 1, N) * F2(k + 2, N)).inverse();
}

Series2 closedFormAbar(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  return Series2::z(N) * xPow(k, N) * (F2(k, N) * F2(k + 1, N)).inverse();
}

Series2 closedFormB(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  return Series2::x(N) * F2(k, N) * F2(k + 1, N).inverse();
}

Series gfExactDegreeCompact(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  const Series fk = F(k, N), f1 = F(k + 1, N), f2 = F(k + 2, N);
  const Series one = Series::constant(1, N);
  return (fk / (f1 * f1 * f2)).shift(k + 3) * Rational(2) + (one / (fk * fk * f1 * f1)).shift(2 * k + 2);
}

Series gfExactDegreeCompactMisprinted(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxGfOrder);
  const Series fk = F(k, N), f1 = F(k + 1, N), f2 = F(k + 2, N);
  const Series one = Series::constant(1, N);
  return (fk / (f1 * f1 * f2)).shift(k + 3) * Rational(2) + (one / (fk * fk * f1)).shift(2 * k + 2);
}

Series convexByClosedFormula(int N) {
  requireGfOrder(N, kMaxFamilyOrder);
  Series s(N);
  if (N >= 2) s[2] = 1;
  if (N >= 3) s[3] = 2;
  for (int n = 0; n + 4 <= N; ++n) {
    const BigInt pow4 = BigInt(1) << (2 * n);
    s[n + 4] = Rational((2 * n + 11) * pow4 - 4 * (2 * n + 1) * binomial(2 * n, n));
  }
  return s;
}

Series convexByAlgebraicSeries(int N) {
  requireGfOrder(N, kMaxFamilyOrder);
  const Series q = poly({1, -4}, N);
  const Series rational = (poly({1, -6, 11, -4}, N) / (q * q)).shift(2);
  const Series radical = (Series::constant(4, N) / (q * q.sqrt())).shift(4);
  return rational - radical;
}

Series convexByAlgebraicSeriesMisprinted(int N) {
  requireGfOrder(N, kMaxFamilyOrder);
  const Series q = poly({1, -4}, N);
  const Series rational = (poly({1, -8, 21, -19, 4}, N) / (poly({1, -2}, N) * q * q)).shift(2);
  const Series radical = (Series::constant(2, N) / (q * q.sqrt())).shift(4);
  return rational - radical;
}

Series columnConvexRadical(int N) {
  requireGfOrder(N, kMaxFamilyOrder);
  const Series one = Series::constant(1, N);
  const Series onePlus = poly({1, 1}, N);
  const Series oneMinus = poly({1, -1}, N);
  // sqrt((t^2 - 6t + 1)(1 + t)^2 / (1 - t)^2), divided before the square root.
  const Series inner = (poly({1, -6, 1}, N) * onePlus * onePlus / (oneMinus * oneMinus)).sqrt();
  // sqrt(1 + t + inner) = sqrt(2) * s, so 2 sqrt(2) / (3 sqrt(2) - sqrt(2) s) = 2 / (3 - s).
  const Series s = ((onePlus + inner) * Rational(1, 2)).sqrt();
  return oneMinus * (one - Series::constant(2, N) / (Series::constant(3, N) - s));
}

namespace {

std::string normalizeName(const std::string& name) {
  std::string out;
  for (char c : name)
    if (c != '-' && c != '_') out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<std::string> familySeriesNames() {
  return {"convex", "directedConvex", "parallelogram", "stack", "ferrer", "columnConvex", "lConvex"};
}

Series familySeries(const std::string& name, int N) {
  const std::string n = normalizeName(name);
  const auto names = familySeriesNames();
  if (std::none_of(names.begin(), names.end(), [&](const std::string& s) { return normalizeName(s) == n; }))
    throw Error(Errc::UnknownFamily, "no series for family '" + name + "'");
  requireGfOrder(N, kMaxFamilyOrder);
  const Series one = Series::constant(1, N);
  if (n == "convex") {
    Series closed = convexByClosedFormula(N);
    if (closed != convexByAlgebraicSeries(N))
      throw Error(Errc::IdentityFailed, "convex closed formula and algebraic series disagree");
    return closed;
  }
  if (n == "directedconvex") return (one / poly({1, -4}, N).sqrt()).shift(2);
  if (n == "parallelogram") return parallelogramSeries(N);
  if (n == "stack") return (poly({1, -1}, N) / poly({1, -3, 1}, N)).shift(2);
  if (n == "ferrer") return (one / poly({1, -2}, N)).shift(2);
  if (n == "columnconvex") return columnConvexRadical(N);
  // lConvex: f_0 = 1, f_1 = 2, f_2 = 7, f_{m+2} = 4 f_{m+1} - 2 f_m.
  Series out(N);
  std::vector<BigInt> f{1, 2, 7};
  while (static_cast<int>(f.size()) + 2 <= N + 1) f.push_back(4 * f[f.size() - 1] - 2 * f[f.size() - 2]);
  for (std::size_t m = 0; m < f.size() && static_cast<int>(m) + 2 <= N; ++m) out[static_cast<int>(m) + 2] = Rational(f[m]);
  return out;
}

Series parallelogramSeries(int N) {
  requireGfOrder(N, kMaxGfOrder);
  // (1 - x - y - sqrt(x^2 + y^2 - 2x - 2y - 2xy + 1)) / 2 at x = y.
  return (poly({1, -2}, N) - poly({1, -4}, N).sqrt()) * Rational(1, 2);
}

bool catalanLimitCheck(int k, int N) {
  requireK(k);
  requireGfOrder(N, kMaxFamilyOrder);
  return gfKParallelogram(k, N) == parallelogramSeries(N);
}

int agreementHorizon(int k, int maxN) {
  requireK(k);
  requireGfOrder(maxN, kMaxFamilyOrder);
  const Series p = gfKParallelogram(k, maxN);
  const Series c = parallelogramSeries(maxN);
  int n = 0;
  while (n <= maxN && p[n] == c[n]) ++n;
  return n - 1;
}

}  // namespace polyenum
