#include "locfac/operator_k.hpp"

#include <algorithm>
#include <cstdlib>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

void swap_rows(IntegerMatrix& m, long i, long j) {
    for (long k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(IntegerMatrix& m, long i, long j) {
    for (long k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row[dst] += f * row[src]
void addmul_row(IntegerMatrix& m, long dst, long src, const Int& f) {
    for (long k = 0; k < m.cols(); ++k) m.at(dst, k) += f * m.at(src, k);
}

void addmul_col(IntegerMatrix& m, long dst, long src, const Int& f) {
    for (long k = 0; k < m.rows(); ++k) m.at(k, dst) += f * m.at(k, src);
}

void negate_row(IntegerMatrix& m, long i) {
    for (long k = 0; k < m.cols(); ++k) m.at(i, k) = -m.at(i, k);
}

} // namespace

SNFResult smith_normal_form(const IntegerMatrix& a) {
    const long r = a.rows(), c = a.cols();
    SNFResult res{IntegerMatrix::identity(r), a, IntegerMatrix::identity(c)};
    IntegerMatrix& d = res.d;
    IntegerMatrix& u = res.u;
    IntegerMatrix& v = res.v;

    const long steps = std::min(r, c);
    for (long t = 0; t < steps; ++t) {
        // Locate the entry of smallest nonzero magnitude in the
        // trailing submatrix; it becomes the pivot candidate.
        long pi = -1, pj = -1;
        for (long i = t; i < r; ++i)
            for (long j = t; j < c; ++j) {
                const Int& x = d.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || abs_int(x) < abs_int(d.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break; // trailing block is zero
        if (pi != t) {
            swap_rows(d, pi, t);
            swap_rows(u, pi, t);
        }
        if (pj != t) {
            swap_cols(d, pj, t);
            swap_cols(v, pj, t);
        }

        bool settled = false;
        while (!settled) {
            settled = true;

            // Kill the pivot column.  A nonzero remainder becomes the
            // new, strictly smaller pivot after a swap.
            for (long i = t + 1; i < r; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t); // truncated quotient
                addmul_row(d, i, t, -q);
                addmul_row(u, i, t, -q);
                if (d.at(i, t) != 0) {
                    swap_rows(d, i, t);
                    swap_rows(u, i, t);
                    settled = false;
                }
            }
            if (!settled) continue;

            for (long j = t + 1; j < c; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                addmul_col(d, j, t, -q);
                addmul_col(v, j, t, -q);
                if (d.at(t, j) != 0) {
                    swap_cols(d, j, t);
                    swap_cols(v, j, t);
                    settled = false;
                }
            }
            if (!settled) continue;

            // Row and column are clear.  Restore the divisibility
            // invariant: if some trailing entry is not a multiple of
            // the pivot, fold its row in and start over.
            for (long i = t + 1; i < r && settled; ++i)
                for (long j = t + 1; j < c && settled; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        addmul_row(d, t, i, Int(1));
                        addmul_row(u, t, i, Int(1));
                        settled = false;
                    }
        }

        if (sgn(d.at(t, t)) < 0) {
            negate_row(d, t);
            negate_row(u, t);
        }
    }
    return res;
}

AbelianInvariants cokernel_invariants(const IntegerMatrix& m) {
    const SNFResult snf = smith_normal_form(m);
    AbelianInvariants inv;
    const long k = std::min(m.rows(), m.cols());
    long rank = 0;
    for (long t = 0; t < k; ++t) {
        const Int& dt = snf.d.at(t, t);
        if (dt == 0) continue;
        ++rank;
        if (dt > 1) inv.torsion.push_back(dt);
    }
    inv.free_rank = m.rows() - rank;
    return inv;
}

KTheoryResult ck_k_theory(const IntegerMatrix& a) {
    if (!a.is_square())
        throw NonSquareError("K-theory needs a square incidence matrix");
    if (!a.all_nonnegative())
        throw NegativeEntryError("incidence matrix has a negative entry");
    const long n = a.rows();
    const IntegerMatrix m = IntegerMatrix::identity(n) - a.transpose();
    const AbelianInvariants inv = cokernel_invariants(m);
    KTheoryResult res;
    res.k0_torsion = inv.torsion;
    res.k0_free_rank = inv.free_rank;
    // ker(I - A^t) is free of rank n - rank(I - A^t), which equals the
    // free rank of the cokernel for a square matrix.
    res.k1_rank = inv.free_rank;
    return res;
}

bool is_irreducible(const IntegerMatrix& a) {
    if (!a.is_square())
        throw NonSquareError("irreducibility needs a square matrix");
    if (!a.all_nonnegative())
        throw NegativeEntryError("irreducibility needs a nonnegative matrix");
    const long n = a.rows();
    if (n == 0) return false;

    // Literal permutation matrices are excluded: one 1 per row and
    // column makes every power a permutation again.
    bool perm = true;
    for (long i = 0; i < n && perm; ++i) {
        long row_nz = 0, col_nz = 0;
        for (long j = 0; j < n; ++j) {
            if (a.at(i, j) != 0) {
                ++row_nz;
                if (a.at(i, j) != 1) perm = false;
            }
            if (a.at(j, i) != 0) ++col_nz;
        }
        if (row_nz != 1 || col_nz != 1) perm = false;
    }
    if (perm) return false;

    // Support-pattern reachability: every vertex must reach every
    // vertex in at least one step.
    for (long s = 0; s < n; ++s) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<long> stack;
        for (long j = 0; j < n; ++j)
            if (a.at(s, j) != 0 && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                stack.push_back(j);
            }
        while (!stack.empty()) {
            const long x = stack.back();
            stack.pop_back();
            for (long j = 0; j < n; ++j)
                if (a.at(x, j) != 0 && !seen[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = 1;
                    stack.push_back(j);
                }
        }
        for (long j = 0; j < n; ++j)
            if (!seen[static_cast<std::size_t>(j)]) return false;
    }
    return true;
}

BandedOperatorSpec::BandedOperatorSpec(long bandwidth, RowRule rule,
                                       std::string name)
    : bandwidth_(bandwidth), rule_(std::move(rule)), name_(std::move(name)) {
    if (bandwidth < 0) throw DomainError("negative bandwidth");
}

BandedOperatorSpec BandedOperatorSpec::diagonal(const Int& value) {
    return BandedOperatorSpec(
        0, [value](long, long) { return value; }, "diagonal");
}

BandedOperatorSpec BandedOperatorSpec::tridiagonal(const Int& lo, const Int& mid,
                                                   const Int& hi) {
    return BandedOperatorSpec(
        1,
        [lo, mid, hi](long i, long j) {
            if (j == i - 1) return lo;
            if (j == i) return mid;
            return hi;
        },
        "tridiagonal");
}

BandedOperatorSpec BandedOperatorSpec::sparse(
    const std::map<std::pair<long, long>, Int>& entries) {
    long bw = 0;
    for (const auto& [ij, val] : entries) {
        if (ij.first < 1 || ij.second < 1)
            throw DomainError("sparse entries are 1-based");
        bw = std::max(bw, std::labs(ij.first - ij.second));
        (void)val;
    }
    auto table = entries;
    return BandedOperatorSpec(
        bw,
        [table](long i, long j) {
            auto it = table.find({i, j});
            return it == table.end() ? Int(0) : it->second;
        },
        "sparse");
}

Int BandedOperatorSpec::entry(long i, long j) const {
    if (i < 1 || j < 1)
        throw BandViolationError("banded entries are indexed from 1");
    if (std::labs(i - j) > bandwidth_)
        throw BandViolationError("entry request outside the declared band");
    return rule_(i, j);
}

IntegerMatrix BandedOperatorSpec::corner(long n) const {
    if (n < 1) throw DomainError("corner size must be at least 1");
    IntegerMatrix m(n, n);
    for (long i = 1; i <= n; ++i) {
        const long j0 = std::max(1L, i - bandwidth_);
        const long j1 = std::min(n, i + bandwidth_);
        for (long j = j0; j <= j1; ++j) m.at(i - 1, j - 1) = rule_(i, j);
    }
    return m;
}

RowFinitenessReport check_row_finiteness(const BandedOperatorSpec& op, long n) {
    if (n < 1) throw DomainError("window must cover at least one row");
    RowFinitenessReport rep;
    rep.rows_checked = n;
    for (long i = 1; i <= n; ++i) {
        long nz = 0;
        for (long j = std::max(1L, i - op.bandwidth()); j <= i + op.bandwidth();
             ++j)
            if (op.entry(i, j) != 0) ++nz;
        rep.max_nonzero_per_row = std::max(rep.max_nonzero_per_row, nz);
    }
    rep.row_finite = true; // banded rows are finite by construction
    return rep;
}

MarkovCompanion markov_companion(const IntPolynomial& p, const Int& q) {
    if (p.degree() < 1)
        throw DomainError("companion realization needs degree at least 1");
    if (p.coeff(0) != 1 && p.coeff(0) != -1)
        throw NonUnitConstantTermError(
            "companion realization needs constant term +-1");
    // Monic reversal r(s) = s^d p(1/s); constant term -1 flips the sign
    // of the whole reversal, leaving the root set unchanged.
    IntPolynomial r = p.reversed();
    if (r.leading() != 1) r = -r;
    const long d = r.degree();
    IntegerMatrix m(d, d);
    for (long i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (long i = 0; i < d; ++i)
        m.at(i, d - 1) = -r.coeff(static_cast<std::size_t>(i));
    MarkovCompanion out{std::move(m), false, q};
    out.entrywise_nonnegative = out.matrix.all_nonnegative();
    return out;
}

ConjugacyReport conjugacy_invariant_check(const IntegerMatrix& a,
                                          const IntegerMatrix& b) {
    if (!a.is_square() || !b.is_square())
        throw NonSquareError("conjugacy invariants need square matrices");
    if (a.rows() != b.rows())
        throw DimensionMismatchError("conjugacy invariants need equal sizes");
    ConjugacyReport rep;
    const IntPolynomial pa = charpoly(a), pb = charpoly(b);
    rep.charpoly_equal = pa == pb;
    rep.trace_equal = a.trace() == b.trace();
    rep.det_equal = det(a) == det(b);
    const long n = a.rows();
    rep.cokernel_equal =
        cokernel_invariants(IntegerMatrix::identity(n) - a.transpose()) ==
        cokernel_invariants(IntegerMatrix::identity(n) - b.transpose());
    return rep;
}

TruncationReport truncated_charpoly_sequence(const BandedOperatorSpec& op,
                                             const std::vector<long>& sizes,
                                             long window_width) {
    if (sizes.empty()) throw DomainError("need at least one corner size");
    if (window_width < 1) throw DomainError("window width must be positive");
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] < 1) throw DomainError("corner sizes must be positive");
        if (k > 0 && sizes[k] <= sizes[k - 1])
            throw DomainError("corner sizes must be strictly increasing");
    }

    TruncationReport rep;
    rep.sizes = sizes;
    rep.window_width = window_width;
    for (long n : sizes) rep.charpolys.push_back(charpoly(op.corner(n)));

    for (const IntPolynomial& p : rep.charpolys) {
        std::vector<Int> w(static_cast<std::size_t>(window_width), Int(0));
        for (long k = 0; k < window_width; ++k)
            w[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k));
        rep.low_order_windows.push_back(std::move(w));
    }

    const std::size_t count = rep.charpolys.size();
    const std::size_t tail = std::min<std::size_t>(3, count);

    rep.low_order_stable = true;
    for (std::size_t k = count - tail; k + 1 < count; ++k)
        if (rep.low_order_windows[k] != rep.low_order_windows[k + 1])
            rep.low_order_stable = false;

    rep.raw_equal = true;
    for (std::size_t k = 0; k + 1 < count; ++k)
        if (rep.charpolys[k] != rep.charpolys[k + 1]) rep.raw_equal = false;

    // Deflate the power of s, then gcd the tail: the factor that is
    // still shared is what survives growing the corner.
    std::vector<IntPolynomial> deflated;
    for (std::size_t k = count - tail; k < count; ++k) {
        const IntPolynomial& p = rep.charpolys[k];
        std::size_t v = 0;
        while (p.coeff(v) == 0 && static_cast<long>(v) < p.degree()) ++v;
        std::vector<Int> shifted(p.coeffs().begin() + static_cast<long>(v),
                                 p.coeffs().end());
        deflated.emplace_back(std::move(shifted));
    }
    IntPolynomial g = deflated.front();
    bool tail_constant = true;
    for (std::size_t k = 0; k < deflated.size(); ++k) {
        if (deflated[k] != deflated.front()) tail_constant = false;
        g = poly_gcd(g, deflated[k]);
    }
    rep.persistent_factor = g;
    rep.stabilizing = tail_constant && deflated.front().degree() >= 1;
    return rep;
}

} // namespace locfac
