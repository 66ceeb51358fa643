#pragma once

#include <complex>
#include <vector>

#include "locfac/finite_field.hpp"
#include "locfac/poly.hpp"

namespace locfac {

// Local factor at one prime power q, stored as the alternating
// polynomial family P_0..P_{2d}: the generating function of the counts
// factors as prod_i P_i(u)^{(-1)^{i+1}}.  Every P_i has P_i(0) = 1.
struct LocalZetaFunction {
    Int q;
    std::vector<IntPolynomial> polys;

    int dim() const { return (static_cast<int>(polys.size()) - 1) / 2; }

    // Value at u via the alternating product; throws on a zero factor.
    std::complex<double> eval(std::complex<double> u) const;
};

// Trace data for one Frobenius power: traces[i] is the trace on the
// i-th group, betti gives the ranks used for display.
struct FrobeniusData {
    Int q;
    std::vector<Int> traces;
    std::vector<long> betti;
};

// Local factor family of a good-reduction curve at p:
//   P_0 = 1 - u,  P_1 = 1 - a_p u + p u^2,  P_2 = 1 - p u.
LocalZetaFunction local_zeta_curve(const CurveSpec& curve, const Int& p);

// Alternating trace sum sum_i (-1)^i traces[i]; for a curve at q this
// equals the point count q + 1 - a_q.
Int lefschetz_sum(const FrobeniusData& data);

// Verifies that the counts sequence matches the logarithmic expansion
// of the factored form: u d/du log Z = sum_{m>=1} N_m u^m, checked
// exactly over Z through m = counts.size().
bool rationality_check(const LocalZetaFunction& zeta,
                       const std::vector<Int>& counts);

// Checks that every reciprocal root alpha of P (so P = prod(1 - alpha
// u)) satisfies |alpha|^2 = q^i.  Degrees <= 2 are decided exactly in
// integer arithmetic; higher degrees fall back to a numerical
// root-finder with relative tolerance 1e-9.
bool weil_rh_check(const IntPolynomial& p, const Int& q, int i);

// Reflection symmetry of the coefficient sequence: with d = deg P,
// c_{d-j} * q^{i j} == +- c_j * q^{i d / 2} for all j with one
// consistent sign.  Exact; requires i*d even.
bool functional_eq_check(const IntPolynomial& p, const Int& q, int i);

} // namespace locfac
