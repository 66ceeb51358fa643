#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "locfac/intutil.hpp"

namespace locfac {

// Dense univariate polynomial over Z.  Coefficients are stored in
// ascending order (index k holds the coefficient of u^k) with no
// trailing zeros; the zero polynomial is the empty vector and has
// degree -1.  Values are immutable after construction apart from
// assignment, so instances can be shared freely across threads.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
        trim_();
    }

    static IntPolynomial zero() { return IntPolynomial{}; }

    static IntPolynomial one() { return constant(1); }

    static IntPolynomial constant(Int v) {
        return IntPolynomial{std::vector<Int>{std::move(v)}};
    }

    // c * u^k
    static IntPolynomial monomial(Int c, std::size_t k) {
        std::vector<Int> v(k + 1, Int(0));
        v[k] = std::move(c);
        return IntPolynomial{std::move(v)};
    }

    bool is_zero() const { return c_.empty(); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    // Coefficient of u^k, zero beyond the degree.
    const Int& coeff(std::size_t k) const {
        static const Int kZero{0};
        return k < c_.size() ? c_[k] : kZero;
    }

    const std::vector<Int>& coeffs() const { return c_; }

    const Int& leading() const { return c_.back(); }

    Int eval(const Int& x) const {
        Int acc{0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc{0.0, 0.0};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + it->get_d();
        return acc;
    }

    IntPolynomial derivative() const;

    // u^n * P(1/u) where n defaults to deg(P); with an explicit n >= deg
    // the extra factors shift the result.  Used for reciprocal-root
    // arguments and functional-equation checks.
    IntPolynomial reversed(long n = -1) const;

    // gcd of the coefficients, normalized nonnegative; content of the
    // zero polynomial is 0.
    Int content() const;

    IntPolynomial primitive_part() const;

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& k) const;

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    // Ascending form, e.g. "1 - 3*u + 5*u^2"; descending=true flips the
    // term order for characteristic-polynomial style display.
    std::string str(const std::string& var = "u", bool descending = false) const;

private:
    void trim_() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Quotient when the division is exact, nullopt-like via a flag pair is
// avoided: throws DomainError when b does not divide a.
IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b);

// True iff b divides a exactly over Z (b nonzero).
bool poly_divides(const IntPolynomial& b, const IntPolynomial& a);

// Primitive-PRS gcd over Z, leading coefficient normalized positive.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// First N coefficients of 1/P as a power series; requires P(0) = 1.
std::vector<Int> power_series_inverse(const IntPolynomial& p, std::size_t n);

// First N coefficients of the product of two coefficient sequences.
std::vector<Int> power_series_mul(const std::vector<Int>& a,
                                  const std::vector<Int>& b, std::size_t n);

} // namespace locfac
