#pragma once

#include <complex>
#include <string>
#include <vector>

namespace locfac {

using Cx = std::complex<double>;

// Gamma via the Lanczos approximation (g = 7, 9 terms), reflection for
// Re z < 1/2.  Relative accuracy ~1e-14 away from poles; exact
// nonpositive integers raise PoleError.
Cx gamma_lanczos(Cx z);

// pi^{-s/2} Gamma(s/2); poles at s = 0, -2, -4, ...
Cx gamma_r(Cx s);

// 2 (2 pi)^{-s} Gamma(s); poles at s = 0, -1, -2, ...
Cx gamma_c(Cx s);

// Hodge data of a weight-w piece: h[p] = h^{p, w-p} (symmetric), and
// for even weight the split of the middle number into the +-1
// eigenspaces of the involution.
struct HodgeNumbers {
    int weight = 0;
    std::vector<long> h;
    long middle_plus = 0;
    long middle_minus = 0;
};

// Validates symmetry h[p] == h[w-p]; the middle split defaults to
// all-plus for even weight.
HodgeNumbers make_hodge_numbers(int weight, std::vector<long> h);
HodgeNumbers make_hodge_numbers(int weight, std::vector<long> h, long plus,
                                long minus);

// Archimedean factor attached to the Hodge data:
//   prod_{p<q} Gamma_C(s-p)^{h[p]}
//   * (even w) Gamma_R(s-w/2)^{plus} Gamma_R(s-w/2+1)^{minus}.
Cx serre_local_factor(const HodgeNumbers& hodge, Cx s);

// Euler-Maclaurin zeta on Re(s) >= -1, |Im(s)| <= 50, accurate to
// 1e-9 relative; the shift count adapts to |Im(s)|.  Pole at s = 1.
Cx riemann_zeta(Cx s);

// The entire function (s-1) zeta(s); Taylor fallback near s = 1 keeps
// it stable where the quotient form cancels.
Cx zeta_times_s_minus_1(Cx s);

// Hurwitz zeta in the same Euler-Maclaurin domain; offset a needs
// Re(a) > 0.  Pole at s = 1 for every a.
Cx hurwitz_zeta(Cx s, Cx a);

// 2^{-1/2} pi^{-s/2} Gamma(s/2) zeta(s); poles at s = 0 and s = 1.
Cx completed_zeta(Cx s);

// Degree-i archimedean characteristic value:
//   i = 0: s / (2 pi)
//   i = 1: 2^{-5/2} pi^{(-s-4)/2} Gamma(s/2) s (s-1) zeta(s),
//          evaluated in the pole-free product form
//   i = 2: (s - 1) / (2 pi)
Cx char_a_infinity(int i, Cx s);

// Cross-check of the three equivalent expressions for the degree-1
// value: the direct formula, the completed-zeta product, and the
// expanded prefactor form.  Points where the completed factor has a
// pole (s = 0, 1) are reported as excluded rather than failed.
struct CharFactorizationCheck {
    bool consistent = false;
    bool excluded = false;
    double rel_err = 0.0;
    std::string note;
};

CharFactorizationCheck char_factorization_check(Cx s, double tol = 1e-10);

// Zeta-regularized determinant of the progression {(n + a)/scale},
// n >= 0: exp(-zh'(0,a)) * scale^{-zh(0,a)} computed through the
// Hurwitz route with a central-difference derivative.  Closed form for
// cross-checking: scale^{a-1/2} sqrt(2 pi)/Gamma(a).
Cx regularized_det_progression(Cx a, double scale);

// Ordinates t in [t_lo, t_hi] with zeta(1/2 + i t) = 0, located by
// sign-change bracketing of the degree-1 characteristic value (real on
// the critical line) and refined by bisection to +-tol.
std::vector<double> find_critical_zeros(double t_lo, double t_hi,
                                        double tol = 1e-6);

} // namespace locfac
