#include "locfac/archimedean.hpp"

#include <cmath>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

// Lanczos g = 7 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

// Bernoulli numbers B_2, B_4, ..., B_10 over (2j)!.
constexpr double kBernOverFact[5] = {
    1.0 / 6.0 / 2.0,        // B2/2!
    -1.0 / 30.0 / 24.0,     // B4/4!
    1.0 / 42.0 / 720.0,     // B6/6!
    -1.0 / 30.0 / 40320.0,  // B8/8!
    5.0 / 66.0 / 3628800.0, // B10/10!
};

bool is_nonpositive_integer(Cx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

void require_zeta_domain(Cx s) {
    if (s.real() < -1.0)
        throw ConvergenceDomainError(
            "zeta evaluation restricted to Re(s) >= -1");
    if (std::abs(s.imag()) > 50.0)
        throw ConvergenceDomainError(
            "zeta evaluation restricted to |Im(s)| <= 50");
}

// Shared Euler-Maclaurin core: sum_{k>=0} (k + a)^{-s} with the tail
// replaced by the integral, midpoint, and Bernoulli corrections at
// cutoff n.  The caller picks a = 1 (shifted) for the Riemann case.
Cx euler_maclaurin(Cx s, Cx a) {
    const long n = std::max<long>(50, static_cast<long>(
                                          std::ceil(2.0 * std::abs(s.imag()))));
    Cx acc{0.0, 0.0};
    for (long k = 0; k < n; ++k)
        acc += std::pow(Cx(static_cast<double>(k), 0.0) + a, -s);
    const Cx edge = Cx(static_cast<double>(n), 0.0) + a;
    const Cx edge_pow = std::pow(edge, -s); // edge^{-s}
    acc += edge * edge_pow / (s - Cx(1.0, 0.0));
    acc += edge_pow * 0.5;
    Cx poch = s;                         // s (s+1) ... (s + 2j - 2)
    Cx edge_fall = edge_pow / edge;      // edge^{-s-2j+1}
    for (int j = 1; j <= 5; ++j) {
        acc += kBernOverFact[j - 1] * poch * edge_fall;
        if (j < 5) {
            poch *= (s + Cx(2.0 * j - 1.0, 0.0)) * (s + Cx(2.0 * j, 0.0));
            edge_fall /= edge * edge;
        }
    }
    return acc;
}

} // namespace

Cx gamma_lanczos(Cx z) {
    if (is_nonpositive_integer(z))
        throw PoleError("gamma pole at a nonpositive integer");
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return kPi / (std::sin(kPi * z) * gamma_lanczos(Cx(1.0, 0.0) - z));
    }
    z -= Cx(1.0, 0.0);
    Cx x{kLanczos[0], 0.0};
    for (int k = 1; k < 9; ++k)
        x += kLanczos[k] / (z + Cx(static_cast<double>(k), 0.0));
    const Cx t = z + Cx(7.5, 0.0);
    return std::sqrt(kTwoPi) * std::pow(t, z + Cx(0.5, 0.0)) * std::exp(-t) * x;
}

Cx gamma_r(Cx s) {
    if (is_nonpositive_integer(s * 0.5))
        throw PoleError("pole of the real gamma factor at s = " +
                        std::to_string(s.real()));
    return std::pow(Cx(kPi, 0.0), -s * 0.5) * gamma_lanczos(s * 0.5);
}

Cx gamma_c(Cx s) {
    if (is_nonpositive_integer(s))
        throw PoleError("pole of the complex gamma factor at s = " +
                        std::to_string(s.real()));
    return 2.0 * std::pow(Cx(kTwoPi, 0.0), -s) * gamma_lanczos(s);
}

HodgeNumbers make_hodge_numbers(int weight, std::vector<long> h) {
    long plus = 0;
    if (weight % 2 == 0 && !h.empty() &&
        static_cast<int>(h.size()) == weight + 1)
        plus = h[static_cast<std::size_t>(weight / 2)];
    return make_hodge_numbers(weight, std::move(h), plus, 0);
}

HodgeNumbers make_hodge_numbers(int weight, std::vector<long> h, long plus,
                                long minus) {
    if (weight < 0) throw DomainError("negative weight");
    if (static_cast<int>(h.size()) != weight + 1)
        throw DimensionMismatchError("need weight + 1 Hodge numbers");
    for (std::size_t p = 0; p < h.size(); ++p) {
        if (h[p] < 0) throw DomainError("negative Hodge number");
        if (h[p] != h[h.size() - 1 - p])
            throw DomainError("Hodge numbers must be symmetric");
    }
    HodgeNumbers out;
    out.weight = weight;
    out.h = std::move(h);
    if (weight % 2 == 0) {
        if (plus < 0 || minus < 0 ||
            plus + minus != out.h[static_cast<std::size_t>(weight / 2)])
            throw DomainError("middle Hodge split does not sum to the middle number");
        out.middle_plus = plus;
        out.middle_minus = minus;
    } else {
        if (plus != 0 || minus != 0)
            throw DomainError("odd weight admits no middle split");
    }
    return out;
}

Cx serre_local_factor(const HodgeNumbers& hodge, Cx s) {
    Cx acc{1.0, 0.0};
    const int w = hodge.weight;
    for (int p = 0; 2 * p < w; ++p) {
        const long e = hodge.h[static_cast<std::size_t>(p)];
        for (long m = 0; m < e; ++m)
            acc *= gamma_c(s - Cx(static_cast<double>(p), 0.0));
    }
    if (w % 2 == 0) {
        const Cx mid = s - Cx(static_cast<double>(w / 2), 0.0);
        for (long m = 0; m < hodge.middle_plus; ++m) acc *= gamma_r(mid);
        for (long m = 0; m < hodge.middle_minus; ++m)
            acc *= gamma_r(mid + Cx(1.0, 0.0));
    }
    return acc;
}

Cx riemann_zeta(Cx s) {
    require_zeta_domain(s);
    if (std::abs(s - Cx(1.0, 0.0)) <= 1e-14)
        throw PoleAtOneError("zeta pole at s = 1");
    return euler_maclaurin(s, Cx(1.0, 0.0));
}

Cx zeta_times_s_minus_1(Cx s) {
    require_zeta_domain(s);
    const Cx d = s - Cx(1.0, 0.0);
    if (std::abs(d) <= 1e-6) {
        // (s-1) zeta(s) = 1 + gamma (s-1) + O((s-1)^2); the quadratic
        // term is below 1e-13 inside this window.
        return Cx(1.0, 0.0) + Cx(0.5772156649015329, 0.0) * d;
    }
    return d * euler_maclaurin(s, Cx(1.0, 0.0));
}

Cx hurwitz_zeta(Cx s, Cx a) {
    require_zeta_domain(s);
    if (a.real() <= 0.0)
        throw DomainError("Hurwitz offset needs Re(a) > 0");
    if (std::abs(s - Cx(1.0, 0.0)) <= 1e-14)
        throw PoleAtOneError("Hurwitz zeta pole at s = 1");
    return euler_maclaurin(s, a);
}

Cx completed_zeta(Cx s) {
    require_zeta_domain(s);
    if (std::abs(s) <= 1e-14) throw PoleError("completed zeta pole at s = 0");
    if (std::abs(s - Cx(1.0, 0.0)) <= 1e-14)
        throw PoleAtOneError("completed zeta pole at s = 1");
    return std::pow(2.0, -0.5) * gamma_r(s) * riemann_zeta(s);
}

Cx char_a_infinity(int i, Cx s) {
    switch (i) {
        case 0:
            return s / kTwoPi;
        case 2:
            return (s - Cx(1.0, 0.0)) / kTwoPi;
        case 1: {
            require_zeta_domain(s);
            // 2^{-5/2} pi^{(-s-4)/2} Gamma(s/2) s (s-1) zeta(s) with
            // s Gamma(s/2) = 2 Gamma(s/2 + 1) substituted so nothing
            // blows up at s = 0, and (s-1) zeta(s) kept entire.
            return std::pow(2.0, -1.5) *
                   std::pow(Cx(kPi, 0.0), (-s - Cx(4.0, 0.0)) * 0.5) *
                   gamma_lanczos(s * 0.5 + Cx(1.0, 0.0)) *
                   zeta_times_s_minus_1(s);
        }
        default:
            throw DomainError("characteristic degree must be 0, 1, or 2");
    }
}

CharFactorizationCheck char_factorization_check(Cx s, double tol) {
    CharFactorizationCheck out;
    if (std::abs(s) <= 1e-8 || std::abs(s - Cx(1.0, 0.0)) <= 1e-8) {
        out.excluded = true;
        out.consistent = true;
        out.note = "completed factor pole at s = 0 or 1; the product "
                   "route is defined only in the limit";
        return out;
    }
    const Cx direct = char_a_infinity(1, s);
    const Cx via_completed =
        completed_zeta(s) * char_a_infinity(0, s) * char_a_infinity(2, s);
    const Cx via_prefactor = s * (s - Cx(1.0, 0.0)) / (kTwoPi * kTwoPi) *
                             completed_zeta(s);
    const double scale =
        std::max({std::abs(direct), std::abs(via_completed), 1e-300});
    out.rel_err = std::max(std::abs(direct - via_completed),
                           std::abs(direct - via_prefactor)) /
                  scale;
    out.consistent = out.rel_err <= tol;
    if (!out.consistent) out.note = "route values disagree";
    return out;
}

Cx regularized_det_progression(Cx a, double scale) {
    if (a.real() <= 0.0)
        throw DomainError("progression offset needs Re(a) > 0");
    if (!(scale > 0.0)) throw DomainError("progression scale must be positive");
    const double h = 1e-5;
    const Cx zh0 = hurwitz_zeta(Cx(0.0, 0.0), a);
    const Cx dzh0 =
        (hurwitz_zeta(Cx(h, 0.0), a) - hurwitz_zeta(Cx(-h, 0.0), a)) /
        Cx(2.0 * h, 0.0);
    return std::exp(-dzh0) * std::pow(Cx(scale, 0.0), -zh0);
}

std::vector<double> find_critical_zeros(double t_lo, double t_hi, double tol) {
    if (!(t_lo < t_hi)) throw DomainError("empty ordinate interval");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (t_hi > 50.0 || t_lo < -50.0)
        throw ConvergenceDomainError("ordinates restricted to |t| <= 50");

    auto g = [](double t) {
        return char_a_infinity(1, Cx(0.5, t)).real();
    };

    std::vector<double> zeros;
    const double step = 0.05;
    double prev_t = t_lo;
    double prev_v = g(prev_t);
    for (double t = t_lo + step; t <= t_hi + step * 0.5; t += step) {
        const double cur_t = std::min(t, t_hi);
        const double cur_v = g(cur_t);
        if (prev_v == 0.0) {
            zeros.push_back(prev_t);
        } else if (prev_v * cur_v < 0.0) {
            double lo = prev_t, hi = cur_t, flo = prev_v;
            while (hi - lo > tol * 0.5) {
                const double mid = 0.5 * (lo + hi);
                const double fm = g(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        prev_t = cur_t;
        prev_v = cur_v;
        if (cur_t >= t_hi) break;
    }
    return zeros;
}

} // namespace locfac
