#pragma once

#include <vector>

#include "locfac/intutil.hpp"

namespace locfac {

// Short Weierstrass curve y^2 = x^3 + a x + b over Q, reduced mod p on
// demand.  The discriminant is the usual -16(4a^3 + 27b^2); a prime of
// bad reduction is one dividing it (so a = b = 0, discriminant zero, is
// bad at every prime).
struct CurveSpec {
    Int a;
    Int b;

    Int discriminant() const {
        return Int(-16) * (Int(4) * a * a * a + Int(27) * b * b);
    }

    bool good_reduction(const Int& p) const {
        if (p < 3) return false;
        return discriminant() % p != 0;
    }
};

// Affine-plus-infinity point count of the reduced curve over F_{p^r},
// together with the trace a_p (only meaningful for r = 1 input counts;
// extension records carry the degree-r count and the ground trace).
struct PointCountRecord {
    Int p;
    long r = 1;
    Int count;
    Int trace; // a_p of the ground-field curve
};

// Legendre symbol (x/p) via Euler's criterion: +1 for a nonzero square,
// -1 for a non-square, 0 when p | x.  Requires p an odd prime.
int quadratic_character(const Int& x, const Int& p);

// Exhaustive count over all (x, y) in F_p x F_p plus the point at
// infinity.  Quadratic work; refuses p > 10^6.
PointCountRecord count_points_naive(const CurveSpec& curve, const Int& p);

// Character-sum count: N = p + 1 + sum_x chi(x^3 + a x + b).  Works for
// every odd good prime and runs in O(p log p).
PointCountRecord count_points_charsum(const CurveSpec& curve, const Int& p);

// a_p = p + 1 - |E(F_p)|.  Satisfies the Hasse bound a_p^2 <= 4p.
Int trace_of_frobenius(const CurveSpec& curve, const Int& p);

// |E(F_{p^r})| = p^r + 1 - t_r with t_1 = a_p, t_2 = t_1^2 - 2p and
// t_m = t_1 t_{m-1} - p t_{m-2}; the traces are the power sums of the
// two Frobenius eigenvalues.
PointCountRecord count_points_extension(const CurveSpec& curve, const Int& p,
                                        long r);

// The trace sequence t_1..t_r used by the extension count.
std::vector<Int> frobenius_trace_sequence(const CurveSpec& curve, const Int& p,
                                          long r);

} // namespace locfac
