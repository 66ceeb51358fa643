#pragma once

#include <map>
#include <string>
#include <vector>

#include "locfac/intutil.hpp"

namespace locfac {

// Exponent vector of a (Laurent) monomial; entry i is the exponent of
// variable i and may be negative.  Lexicographic order via the default
// vector comparison doubles as the canonical term order.
using ExponentVec = std::vector<long>;

// Multivariate Laurent polynomial over Z with a canonical internal
// form: terms keyed by exponent vector in lex order, zero coefficients
// dropped.  Construction from raw term lists merges duplicates, so two
// equal values always compare equal structurally.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int nvars) : nvars_(nvars) {}

    static LaurentPolynomial from_terms(
        int nvars, const std::vector<std::pair<ExponentVec, Int>>& raw);

    static LaurentPolynomial constant(int nvars, Int c);

    // x_i (0-based index).
    static LaurentPolynomial variable(int nvars, int i);

    static LaurentPolynomial monomial(int nvars, ExponentVec e, Int c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const std::map<ExponentVec, Int>& terms() const { return terms_; }

    void add_term(const ExponentVec& e, const Int& c);

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;

    bool operator==(const LaurentPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<ExponentVec, Int> terms_;
};

} // namespace locfac
