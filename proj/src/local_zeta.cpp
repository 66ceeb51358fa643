#include "locfac/local_zeta.hpp"

#include <algorithm>
#include <cmath>

#include "locfac/errors.hpp"

namespace locfac {

using Cx = std::complex<double>;

Cx LocalZetaFunction::eval(Cx u) const {
    Cx num{1.0, 0.0}, den{1.0, 0.0};
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const Cx v = polys[i].eval(u);
        if (i % 2 == 1)
            num *= v;
        else
            den *= v;
    }
    if (std::abs(den) == 0.0)
        throw PoleError("local factor evaluated at one of its poles");
    return num / den;
}

LocalZetaFunction local_zeta_curve(const CurveSpec& curve, const Int& p) {
    const Int a = trace_of_frobenius(curve, p); // validates p and reduction
    LocalZetaFunction z;
    z.q = p;
    z.polys.push_back(IntPolynomial{{Int(1), Int(-1)}});
    z.polys.push_back(IntPolynomial{{Int(1), -a, p}});
    z.polys.push_back(IntPolynomial{{Int(1), -p}});
    return z;
}

Int lefschetz_sum(const FrobeniusData& data) {
    Int s{0};
    for (std::size_t i = 0; i < data.traces.size(); ++i) {
        if (i % 2 == 0)
            s += data.traces[i];
        else
            s -= data.traces[i];
    }
    return s;
}

bool rationality_check(const LocalZetaFunction& zeta,
                       const std::vector<Int>& counts) {
    const std::size_t m = counts.size();
    if (m == 0) return true;
    // Coefficients 1..m of u d/du log Z as an exact integer series;
    // each factor contributes (-1)^(i+1) u P_i'/P_i and the inverse
    // series exists over Z because P_i(0) = 1.
    std::vector<Int> acc(m, Int(0));
    for (std::size_t i = 0; i < zeta.polys.size(); ++i) {
        const IntPolynomial& p = zeta.polys[i];
        if (p.coeff(0) != 1)
            throw DomainError("local factor without constant term 1");
        std::vector<Int> dp;
        const IntPolynomial d = p.derivative();
        dp.assign(d.coeffs().begin(), d.coeffs().end());
        const std::vector<Int> series =
            power_series_mul(dp, power_series_inverse(p, m), m);
        // Multiplying by u shifts the series up by one, so series[k]
        // lands on the count N_{k+1}.
        for (std::size_t k = 0; k < m && k < series.size(); ++k) {
            if (i % 2 == 1)
                acc[k] += series[k];
            else
                acc[k] -= series[k];
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        if (acc[k] != counts[k]) return false;
    return true;
}

namespace {

// Simple-root polynomial sharing the same root set: p / gcd(p, p').
IntPolynomial squarefree_part(const IntPolynomial& p) {
    const IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p;
    return poly_divexact(p, g);
}

// Durand-Kerner on a squarefree integer polynomial; coefficients are
// monicized in doubles.  Roots are simple so convergence is quadratic.
std::vector<Cx> all_roots(const IntPolynomial& p) {
    const long d = p.degree();
    std::vector<Cx> c(static_cast<std::size_t>(d) + 1);
    const double lead = p.leading().get_d();
    for (long k = 0; k <= d; ++k)
        c[static_cast<std::size_t>(k)] =
            Cx(p.coeff(static_cast<std::size_t>(k)).get_d() / lead, 0.0);

    auto eval = [&](Cx z) {
        Cx acc{0.0, 0.0};
        for (long k = d; k >= 0; --k) acc = acc * z + c[static_cast<std::size_t>(k)];
        return acc;
    };

    const double r0 =
        std::max(1.0, std::pow(std::abs(c[0]), 1.0 / static_cast<double>(d)));
    std::vector<Cx> z(static_cast<std::size_t>(d));
    for (long k = 0; k < d; ++k) {
        const double th =
            6.283185307179586 * static_cast<double>(k) / static_cast<double>(d) +
            0.7;
        z[static_cast<std::size_t>(k)] = r0 * Cx(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            Cx den{1.0, 0.0};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) den *= z[i] - z[j];
            const Cx step = eval(z[i]) / den;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    return z;
}

} // namespace

bool weil_rh_check(const IntPolynomial& p, const Int& q, int i) {
    if (q < 2) throw DomainError("prime power must be at least 2");
    if (i < 0) throw DomainError("negative cohomological index");
    if (p.coeff(0) != 1)
        throw DomainError("reciprocal-root form needs constant term 1");
    if (p.degree() <= 0) return true;

    IntPolynomial f = squarefree_part(p);
    if (f.coeff(0) == -1) f = -f;
    const Int target = pow_int(q, static_cast<unsigned long>(i));
    const long d = f.degree();

    if (d == 1) {
        // f = 1 + c1 u, reciprocal root -c1.
        const Int& c1 = f.coeff(1);
        return c1 * c1 == target;
    }
    if (d == 2) {
        // f = (1 - au)(1 - bu) = 1 + c1 u + c2 u^2 with c1 = -(a+b),
        // c2 = ab; a, b are the roots of z^2 + c1 z + c2.
        const Int& c1 = f.coeff(1);
        const Int& c2 = f.coeff(2);
        const Int disc = c1 * c1 - 4 * c2;
        if (disc < 0) return c2 == target; // conjugate pair, |a|^2 = ab
        // Real roots: either +-sqrt(target) as a pair, or a repeated
        // root whose square is the target.
        return (c2 == -target && c1 == 0) ||
               (c2 == target && c1 * c1 == 4 * target);
    }

    const double t = target.get_d();
    for (const Cx& root : all_roots(f.reversed())) {
        if (std::abs(std::norm(root) - t) > 1e-9 * t) return false;
    }
    return true;
}

bool functional_eq_check(const IntPolynomial& p, const Int& q, int i) {
    if (p.is_zero()) throw DomainError("functional equation check of zero polynomial");
    if (q < 2) throw DomainError("prime power must be at least 2");
    if (i < 0) throw DomainError("negative cohomological index");
    const long d = p.degree();
    if ((static_cast<long>(i) * d) % 2 != 0)
        throw DomainError("odd weight-degree product has no integral center");
    const Int center = pow_int(q, static_cast<unsigned long>(i) *
                                      static_cast<unsigned long>(d) / 2);
    int eps = 0;
    for (long j = 0; j <= d; ++j) {
        const Int lhs = p.coeff(static_cast<std::size_t>(d - j)) *
                        pow_int(q, static_cast<unsigned long>(i) *
                                       static_cast<unsigned long>(j));
        const Int rhs = p.coeff(static_cast<std::size_t>(j)) * center;
        if (lhs == 0 && rhs == 0) continue;
        if (abs_int(lhs) != abs_int(rhs)) return false;
        const int s = sgn(lhs) == sgn(rhs) ? 1 : -1;
        if (eps == 0)
            eps = s;
        else if (eps != s)
            return false;
    }
    return true;
}

} // namespace locfac
