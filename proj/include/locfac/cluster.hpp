#pragma once

#include <vector>

#include "locfac/matrix.hpp"
#include "locfac/ratfun.hpp"

namespace locfac {

// A seed: n rational functions in the initial variables together with
// a skew-symmetric integer exchange matrix.
struct Seed {
    std::vector<RationalFunction> vars;
    IntegerMatrix b;

    long rank() const { return b.rows(); }

    bool operator==(const Seed& o) const { return vars == o.vars && b == o.b; }
};

// Validates skew-symmetry and builds the seed (x_1, ..., x_n) with the
// given exchange matrix.
Seed initial_seed(const IntegerMatrix& b);

// Mutation in direction k (1-based).  The k-th variable is replaced by
//   (prod_i x_i^{max(b_ik, 0)} + prod_i x_i^{max(-b_ik, 0)}) / x_k
// and the exchange matrix by
//   b'_ij = -b_ij               if i = k or j = k,
//   b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2   otherwise.
// Involutive: mutating twice in the same direction returns the seed.
Seed mutate(const Seed& seed, long k);

// Laurent test for a reduced rational function: membership in
// Z[x_1^{-1}, ..., x_n^{-1}] as a unit-monomial denominator.
bool is_laurent(const RationalFunction& value);

// Breadth-first closure of a seed under all single mutations, up to
// unordered-cluster equality.  Stops after max_seeds distinct clusters
// and raises the truncation flag instead of failing.
struct MutationReport {
    long clusters = 0;
    long depth = 0; // BFS radius at which the last new cluster appeared
    std::vector<RationalFunction> variables; // distinct, discovery order
    bool all_laurent = true;
    bool truncated = false;
};

MutationReport mutation_closure(const Seed& seed, long max_seeds);

} // namespace locfac
