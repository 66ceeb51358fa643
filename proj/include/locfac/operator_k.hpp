#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "locfac/matrix.hpp"
#include "locfac/poly.hpp"

namespace locfac {

// Smith decomposition U*A*V = D with U, V unimodular and D diagonal,
// diagonal entries nonnegative with d_1 | d_2 | ... .
struct SNFResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};

SNFResult smith_normal_form(const IntegerMatrix& a);

// Invariants of the cokernel Z^rows / im(M): the torsion orders (the
// diagonal entries > 1, in divisibility order) and the free rank.
struct AbelianInvariants {
    std::vector<Int> torsion;
    long free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
};

AbelianInvariants cokernel_invariants(const IntegerMatrix& m);

// K-groups of the graph algebra of a nonnegative integer matrix A:
// K_0 = coker(I - A^t) split into torsion and free part,
// K_1 = ker(I - A^t), free of rank (n - rank(I - A^t)).
struct KTheoryResult {
    std::vector<Int> k0_torsion;
    long k0_free_rank = 0;
    long k1_rank = 0;
};

KTheoryResult ck_k_theory(const IntegerMatrix& a);

// Irreducibility of a nonnegative matrix: every index pair (i, j) is
// connected by some power, checked on the support pattern with path
// lengths up to n^2.  A literal permutation matrix (exactly one entry
// per row and column, all equal to 1) is rejected up front: its powers
// cycle and the associated algebra degenerates.
bool is_irreducible(const IntegerMatrix& a);

// Banded infinite integer matrix given by a row rule; entries beyond
// the band are identically zero, and requesting one is an error.
class BandedOperatorSpec {
public:
    using RowRule = std::function<Int(long, long)>; // (i, j) -> entry

    BandedOperatorSpec(long bandwidth, RowRule rule, std::string name);

    // Constant main diagonal.
    static BandedOperatorSpec diagonal(const Int& value);

    // Constant tridiagonal stencil (sub, main, super).
    static BandedOperatorSpec tridiagonal(const Int& lo, const Int& mid,
                                          const Int& hi);

    // Finitely many explicit entries on top of the zero operator.
    static BandedOperatorSpec sparse(
        const std::map<std::pair<long, long>, Int>& entries);

    long bandwidth() const { return bandwidth_; }
    const std::string& name() const { return name_; }

    // Entry (i, j), 1-based; throws outside the declared band.
    Int entry(long i, long j) const;

    // Upper-left n x n corner as a dense matrix.
    IntegerMatrix corner(long n) const;

private:
    long bandwidth_;
    RowRule rule_;
    std::string name_;
};

// Every row of the first n rows has finitely many nonzero entries by
// construction; the report records the verified window and the per-row
// maximum of nonzero entries found.
struct RowFinitenessReport {
    bool row_finite = true;
    long rows_checked = 0;
    long max_nonzero_per_row = 0;
};

RowFinitenessReport check_row_finiteness(const BandedOperatorSpec& op, long n);

// Companion-style nonnegative realization of a monic-reciprocal
// polynomial: builds the companion matrix of u^d P(1/u) and reports
// whether it is entrywise nonnegative.  Requires |P(0)| = 1 so the
// companion stays integral.
struct MarkovCompanion {
    IntegerMatrix matrix;
    bool entrywise_nonnegative = false;
    Int prime_power; // recorded from the call, not used by the build
};

MarkovCompanion markov_companion(const IntPolynomial& p, const Int& q);

// Necessary conjugacy invariants of square integer matrices.  All
// flags passing does not certify conjugacy; any failing refutes it.
struct ConjugacyReport {
    bool charpoly_equal = false;
    bool trace_equal = false;
    bool det_equal = false;
    bool cokernel_equal = false;

    bool all_pass() const {
        return charpoly_equal && trace_equal && det_equal && cokernel_equal;
    }
};

ConjugacyReport conjugacy_invariant_check(const IntegerMatrix& a,
                                          const IntegerMatrix& b);

// Characteristic polynomials of growing corners.  Raw sequences of
// distinct sizes are never equal, so stabilization is reported on two
// derived views: the low-order coefficient window (heuristic), and the
// factor that persists after deflating the power of s, gcd-ed across
// the last three corners.
struct TruncationReport {
    std::vector<long> sizes;
    std::vector<IntPolynomial> charpolys;

    long window_width = 0;
    std::vector<std::vector<Int>> low_order_windows;
    bool low_order_stable = false;

    bool raw_equal = false;
    IntPolynomial persistent_factor; // gcd of s-deflated tail charpolys
    bool stabilizing = false;        // persistent factor of degree >= 1,
                                     // constant over the last three sizes
};

TruncationReport truncated_charpoly_sequence(const BandedOperatorSpec& op,
                                             const std::vector<long>& sizes,
                                             long window_width = 3);

} // namespace locfac
