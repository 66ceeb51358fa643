#include "locfac/euler_product.hpp"

#include <algorithm>
#include <cmath>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

constexpr long kSieveBound = 1000000;

std::vector<long> primes_up_to(long bound) {
    std::vector<char> composite(static_cast<std::size_t>(bound) + 1, 0);
    std::vector<long> primes;
    for (long n = 2; n <= bound; ++n) {
        if (composite[static_cast<std::size_t>(n)]) continue;
        primes.push_back(n);
        for (long m = n * n; m <= bound; m += n)
            composite[static_cast<std::size_t>(m)] = 1;
    }
    return primes;
}

// Neumaier-compensated accumulator, run separately on the real and
// imaginary parts so the product of many near-unit factors does not
// drift with the summation order of rounding errors.
struct CompensatedSum {
    double s = 0.0, c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    double value() const { return s + c; }
};

Int independent_trace(const CurveSpec& curve, const Int& p) {
    // The identity check wants a trace that does not share a code path
    // with the factor assembly (which counts by character sums), so
    // small primes are recounted by full enumeration.
    if (p <= 3000) return count_points_naive(curve, p).trace;
    return count_points_charsum(curve, p).trace;
}

} // namespace

PrimeSplit split_primes(const CurveSpec& curve, long bound) {
    if (bound < 2) throw DomainError("prime bound must be at least 2");
    if (bound > kSieveBound)
        throw EnumerationBoundError("prime bound exceeds 10^6");
    PrimeSplit out;
    const Int disc = curve.discriminant();
    for (long p : primes_up_to(bound)) {
        if (disc % Int(p) == 0)
            out.bad.push_back(p);
        else
            out.good.push_back(p);
    }
    return out;
}

EulerProductResult hasse_weil_truncated(const CurveSpec& curve, Cx s,
                                        long bound) {
    if (s.real() <= 2.0)
        throw ConvergenceDomainError(
            "square-zeta product needs Re(s) > 2");
    PrimeSplit split = split_primes(curve, bound);

    CompensatedSum log_re, log_im;
    for (long p : split.good) {
        const LocalZetaFunction z = local_zeta_curve(curve, Int(p));
        const Cx u = std::pow(Cx(static_cast<double>(p), 0.0), -s);
        const Cx lg = std::log(z.eval(u));
        log_re.add(lg.real());
        log_im.add(lg.imag());
    }

    EulerProductResult out;
    out.s = s;
    out.bound = bound;
    out.primes_used = std::move(split.good);
    out.bad_primes = std::move(split.bad);
    out.value = std::exp(Cx(log_re.value(), log_im.value()));
    // |log Z_p| <= 8 p^{1-sigma} for every good p, so the dropped tail
    // multiplies the value by at most exp(8 B^{2-sigma}/(sigma-2)).
    const double sigma = s.real();
    out.tail_bound = std::expm1(
        8.0 * std::pow(static_cast<double>(bound), 2.0 - sigma) / (sigma - 2.0));
    return out;
}

EulerProductResult l_function_truncated(const CurveSpec& curve, Cx s,
                                        long bound) {
    if (s.real() <= 1.5)
        throw ConvergenceDomainError(
            "middle-factor product needs Re(s) > 3/2");
    PrimeSplit split = split_primes(curve, bound);

    CompensatedSum log_re, log_im;
    for (long p : split.good) {
        const LocalZetaFunction z = local_zeta_curve(curve, Int(p));
        const Cx u = std::pow(Cx(static_cast<double>(p), 0.0), -s);
        const Cx lg = -std::log(z.polys[1].eval(u));
        log_re.add(lg.real());
        log_im.add(lg.imag());
    }

    EulerProductResult out;
    out.s = s;
    out.bound = bound;
    out.primes_used = std::move(split.good);
    out.bad_primes = std::move(split.bad);
    out.value = std::exp(Cx(log_re.value(), log_im.value()));
    // |log P_1(p^{-s})^{-1}| <= 6 p^{1/2-sigma} under the Hasse bound.
    const double sigma = s.real();
    out.tail_bound = std::expm1(6.0 *
                                std::pow(static_cast<double>(bound),
                                         1.5 - sigma) /
                                (sigma - 1.5));
    return out;
}

bool local_identity_check_exact(const LocalZetaFunction& z, const Int& trace) {
    if (z.polys.size() != 3)
        throw DomainError("identity check needs a curve-shaped factor family");
    const Int& q = z.q;
    const IntPolynomial q0{{Int(1), Int(-1)}};
    const IntPolynomial q1{{Int(1), -trace, q}};
    const IntPolynomial q2{{Int(1), -q}};
    return z.polys[1] * q0 * q2 == q1 * z.polys[0] * z.polys[2];
}

double local_identity_rel_err(const LocalZetaFunction& z, const Int& trace,
                              Cx s) {
    if (z.polys.size() != 3)
        throw DomainError("identity check needs a curve-shaped factor family");
    const Cx u = std::pow(Cx(z.q.get_d(), 0.0), -s);
    const IntPolynomial q0{{Int(1), Int(-1)}};
    const IntPolynomial q1{{Int(1), -trace, z.q}};
    const IntPolynomial q2{{Int(1), -z.q}};
    const Cx lhs = z.eval(u);
    const Cx rhs = q1.eval(u) / (q0.eval(u) * q2.eval(u));
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

IdentityCheckResult zeta_identity_check(const CurveSpec& curve, Cx s,
                                        long bound) {
    PrimeSplit split = split_primes(curve, bound);
    IdentityCheckResult out;
    for (long p : split.good) {
        const LocalZetaFunction z = local_zeta_curve(curve, Int(p));
        const Int t = independent_trace(curve, Int(p));
        ++out.primes_checked;
        if (!local_identity_check_exact(z, t)) {
            out.ok = false;
            out.failed_primes.push_back(p);
            continue;
        }
        const double rel = local_identity_rel_err(z, t, s);
        out.worst_rel_err = std::max(out.worst_rel_err, rel);
        if (rel > 1e-10) {
            out.ok = false;
            out.failed_primes.push_back(p);
        }
    }
    return out;
}

} // namespace locfac
