#pragma once

#include <string>

#include "locfac/mpoly.hpp"

namespace locfac {

// Quotient of two integer polynomials kept in a canonical reduced
// form: gcd(num, den) = 1 (including integer content and common
// monomial factors) and the lex-leading coefficient of the denominator
// is positive.  Because reduction runs on every construction, equality
// of values is structural equality, and the canonical string form can
// be used as a dictionary key.
class RationalFunction {
public:
    RationalFunction(MPoly num, MPoly den);

    static RationalFunction constant(int nvars, Int c);
    static RationalFunction variable(int nvars, int i); // x_i, 0-based

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }

    // True when the value lies in the Laurent ring Z[x1^{-1},..]: the
    // reduced denominator is one monomial with coefficient +-1.
    bool denominator_is_unit_monomial() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction pow(unsigned long e) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void reduce_();

    MPoly num_, den_;
};

} // namespace locfac
