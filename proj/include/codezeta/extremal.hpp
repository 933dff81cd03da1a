// Copyright 2026 The codezeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Extremal self-dual weight enumerators solved from MacWilliams
// self-invariance, Gegenbauer polynomials, and the zero locus of the
// quaternary (c = 2) extremal zeta polynomials.

#ifndef CODEZETA_EXTREMAL_HPP
#define CODEZETA_EXTREMAL_HPP

#include <vector>

#include "codezeta/code.hpp"
#include "codezeta/exactmath.hpp"
#include "codezeta/zeta.hpp"

namespace codezeta {

struct ExtremalEnumerator {
  int q = 0;
  int c = 0;
  int n = 0;
  int d = 0;
  /// Mallows-Sloane bound for the type; d == bound when extremal.
  int bound = 0;
  /// A_0..A_n; the particular solution when the system is not unique.
  std::vector<Rational> A;
  bool unique = true;
  /// Dimension of the solution space at d (0 when unique).
  int solution_dimension = 0;
  bool nonnegative = true;

  /// Integer distribution with k = n/2 and d_dual = d. Throws
  /// Error(invalid_distribution) if an entry is not an integer.
  WeightDistribution distribution() const;
};

/// Searches d downward from the Mallows-Sloane bound. Throws
/// Error(domain) for an unsupported type or length and Error(check_failed)
/// when no d >= 1 admits a solution.
ExtremalEnumerator extremal_sd_enumerator(int q, int c, int n);

/// The linear system behind one step of the search: unknowns A_i with
/// i = 0 or (i >= d and c | i).
LinearSolution extremal_system(int q, int c, int n, int d);

struct GegenbauerPoly {
  int m = 0;
  Rational lambda;
  UniPoly poly;
};

/// Classical normalization: C_0 = 1, C_1 = 2 lambda x,
/// m C_m = 2x(m + lambda - 1) C_{m-1} - (m + 2 lambda - 2) C_{m-2}.
GegenbauerPoly gegenbauer(int m, const Rational& lambda);

struct UltrasphericalCheck {
  Rational lambda_m;
  bool holds = false;
  /// Q(T^2/2) with Q(T) = P(T)(1 + 2T).
  UniPoly lhs;
  /// C_m^(m+1)((T^-1 + T)/2) T^m, before scaling by lambda_m.
  UniPoly rhs;
};

/// Requires m odd and P of degree m - 1.
UltrasphericalCheck check_ultraspherical(const ZetaPolynomial& p, int m);

/// Moduli of the roots of P, ascending. Companion-matrix eigenvalues
/// refined by Newton steps. Throws Error(domain) for deg P < 1 and
/// Error(numerical) when the eigen solver fails.
std::vector<double> critical_circle_radii(const ZetaPolynomial& p);

/// Sign changes of p on the grid -1 + 2i/steps, i = 0..steps.
int sign_changes_on_grid(const UniPoly& p, int steps);

}  // namespace codezeta

#endif  // CODEZETA_EXTREMAL_HPP
