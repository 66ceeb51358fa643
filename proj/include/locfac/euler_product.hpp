#pragma once

#include <vector>

#include "locfac/archimedean.hpp"
#include "locfac/finite_field.hpp"
#include "locfac/local_zeta.hpp"

namespace locfac {

// Primes up to bound, split by reduction type of the curve.
struct PrimeSplit {
    std::vector<long> good;
    std::vector<long> bad;
};

PrimeSplit split_primes(const CurveSpec& curve, long bound);

// One truncated Euler product value: which primes entered, the value,
// and a rigorous bound on the relative size of the dropped tail.
struct EulerProductResult {
    Cx s;
    long bound = 0;
    std::vector<long> primes_used;
    std::vector<long> bad_primes;
    Cx value;
    double tail_bound = 0.0;
};

// prod_{p <= bound good} Z_p(p^{-s}): the two-variable square zeta
// truncation.  Requires Re(s) > 2 for the tail bound to converge.
EulerProductResult hasse_weil_truncated(const CurveSpec& curve, Cx s,
                                        long bound);

// prod_{p <= bound good} P_1(p^{-s})^{-1}: the middle-degree factor
// alone.  Requires Re(s) > 3/2.
EulerProductResult l_function_truncated(const CurveSpec& curve, Cx s,
                                        long bound);

// Per-prime verification that the assembled local factor satisfies
// Z_p = P_1 / (P_0 P_2) against the independently recomputed trace:
// exact as rational functions, and numerically at u = p^{-s}.
struct IdentityCheckResult {
    bool ok = true;
    long primes_checked = 0;
    std::vector<long> failed_primes;
    double worst_rel_err = 0.0;
};

IdentityCheckResult zeta_identity_check(const CurveSpec& curve, Cx s,
                                        long bound);

// Exact factored-form comparison for one local factor against the
// trace value: P_1 * (1-u)(1-qu) == (1 - t u + q u^2) * P_0 P_2.
bool local_identity_check_exact(const LocalZetaFunction& z, const Int& trace);

// Relative gap between the assembled factor and the trace form at
// u = q^{-s}.
double local_identity_rel_err(const LocalZetaFunction& z, const Int& trace,
                              Cx s);

} // namespace locfac
