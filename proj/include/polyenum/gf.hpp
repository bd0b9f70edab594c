#pragma once

#include <string>
#include <vector>

#include "polyenum/series.hpp"

namespace polyenum {

constexpr int kMaxGfOrder = 60;
constexpr int kMaxFamilyOrder = 40;

// Generating function by semi-perimeter of parallelogram polyominoes with
// convexity degree <= k, from the Fibonacci-polynomial closed form.
// Throws CapExceeded when N > 60.
Series gfKParallelogram(int k, int N);

// Degree exactly k, as P_k - P_{k-1} (k >= 1) or the bar formula (k = 0).
Series gfExactDegreeByDifference(int k, int N);
// Degree exactly k >= 1, as 2 A_k B_k + Abar_k Bbar_k with the four
// functions built by the substitution recurrences.
Series gfExactDegreeByProducts(int k, int N);
// Both constructions; throws IdentityFailed if they disagree.
Series gfExactDegree(int k, int N);

// The four functions of the recurrences with every width/height variable
// set to x; the second variable of each Series2 is the one the recurrences
// substitute into (z for the A's, t for the B's).
struct KParallelogramParts {
  Series2 a, abar, b, bbar;
};
KParallelogramParts kParallelogramParts(int k, int N);

// Closed forms in x and z: A_k = z x^(k+1) / (F_{k+1} F_{k+2}),
// Abar_k = z x^k / (F_k F_{k+1}), B_k = x F_k / F_{k+1}.
Series2 closedFormA(int k, int N);
Series2 closedFormAbar(int k, int N);
Series2 closedFormB(int k, int N);

// 2 x^(k+3) F_k / (F_{k+1}^2 F_{k+2}) + x^(2k+2) / (F_k^2 F_{k+1}^2) at z = x.
Series gfExactDegreeCompact(int k, int N);
// Same with the second denominator F_k^2 F_{k+1}, as sometimes printed.
Series gfExactDegreeCompactMisprinted(int k, int N);

// Series by semi-perimeter: the coefficient of t^n counts the family at
// semi-perimeter n. Names: convex, directedConvex, parallelogram, stack,
// ferrer, columnConvex, lConvex (kebab-case accepted too). Throws
// UnknownFamily, CapExceeded when N > 40, IdentityFailed if the two convex
// formulas disagree.
Series familySeries(const std::string& name, int N);
std::vector<std::string> familySeriesNames();

// Convex counts from the closed formula and from the algebraic series.
Series convexByClosedFormula(int N);
// t^2 (1-6t+11t^2-4t^3)/(1-4t)^2 - 4t^4/(1-4t)^(3/2).
Series convexByAlgebraicSeries(int N);
// t^2 (1-8t+21t^2-19t^3+4t^4)/((1-2t)(1-4t)^2) - 2t^4/(1-4t)^(3/2), a
// variant in circulation that is off from t^5 on (27 instead of 28).
Series convexByAlgebraicSeriesMisprinted(int N);
// The column-convex nested radical; its t^n coefficient is the count at
// semi-perimeter n.
Series columnConvexRadical(int N);

// sum_{n>=2} C_{n-1} x^n.
Series parallelogramSeries(int N);
// P_k agrees with the parallelogram series in every order <= N.
bool catalanLimitCheck(int k, int N);
// Largest N <= maxN with catalanLimitCheck(k, N).
int agreementHorizon(int k, int maxN = kMaxFamilyOrder);

}  // namespace polyenum
