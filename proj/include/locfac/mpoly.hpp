#pragma once

#include <map>
#include <string>
#include <vector>

#include "locfac/intutil.hpp"

namespace locfac {

// Ordinary (nonnegative-exponent) monomial; lex order from the default
// vector comparison.
using Monomial = std::vector<long>;

// Sparse multivariate polynomial over Z.  Canonical form throughout:
// terms keyed by monomial, no zero coefficients.  Everything here is
// exact; the only failure modes are shape errors.
class MPoly {
public:
    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly constant(int nvars, Int c);
    static MPoly variable(int nvars, int i); // x_i, 0-based
    static MPoly monomial(int nvars, Monomial m, Int c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    std::size_t nterms() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Int& c);

    // Lex-leading term; polynomial must be nonzero.
    const std::pair<const Monomial, Int>& leading_term() const;

    long degree_in(int var) const; // max exponent of var, -1 if zero poly

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    Int content() const;

    // Entrywise minimum exponent of each variable over all terms; the
    // largest monomial dividing every term.
    Monomial min_exponents() const;

    MPoly divide_by_monomial(const Monomial& m) const;
    MPoly divide_by_int(const Int& g) const; // exact

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Int& k) const;
    MPoly pow(unsigned long e) const;

    bool operator==(const MPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }
    bool operator<(const MPoly& o) const { return terms_ < o.terms_; }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Monomial, Int> terms_;
};

// Exact division: quotient q with a == q*b, or failure flag.
// Long division against the lex-leading term of b.
bool mpoly_divide_exact(const MPoly& a, const MPoly& b, MPoly& quotient);

// Full gcd over Z[x1..xn] by recursion on the main variable with
// primitive pseudo-remainder sequences.  Result has positive leading
// (lex) coefficient.
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace locfac
