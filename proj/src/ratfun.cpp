#include "locfac/ratfun.hpp"

#include "locfac/errors.hpp"

namespace locfac {

RationalFunction::RationalFunction(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw DimensionMismatchError("numerator/denominator arity mismatch");
    if (den_.is_zero()) throw ZeroDenominatorError("zero denominator");
    reduce_();
}

RationalFunction RationalFunction::constant(int nvars, Int c) {
    return RationalFunction(MPoly::constant(nvars, std::move(c)),
                            MPoly::constant(nvars, Int(1)));
}

RationalFunction RationalFunction::variable(int nvars, int i) {
    return RationalFunction(MPoly::variable(nvars, i),
                            MPoly::constant(nvars, Int(1)));
}

void RationalFunction::reduce_() {
    const int nv = num_.nvars();
    if (num_.is_zero()) {
        den_ = MPoly::constant(nv, Int(1));
        return;
    }

    // Common monomial factor first; cheap and catches the frequent case
    // of exchange-relation arithmetic where denominators are monomials.
    Monomial lo_n = num_.min_exponents();
    Monomial lo_d = den_.min_exponents();
    Monomial common(lo_n.size());
    bool have_common = false;
    for (std::size_t i = 0; i < common.size(); ++i) {
        common[i] = std::min(lo_n[i], lo_d[i]);
        if (common[i] > 0) have_common = true;
    }
    if (have_common) {
        num_ = num_.divide_by_monomial(common);
        den_ = den_.divide_by_monomial(common);
    }

    // Integer content.
    Int g = gcd_int(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divide_by_int(g);
        den_ = den_.divide_by_int(g);
    }

    // Polynomial gcd only when the denominator is not already a single
    // monomial (a monomial denominator shares no further factor with a
    // numerator that its monomial part does not divide).
    if (den_.nterms() > 1) {
        MPoly d = mpoly_gcd(num_, den_);
        if (!d.is_one()) {
            MPoly qn(nv), qd(nv);
            if (!mpoly_divide_exact(num_, d, qn) ||
                !mpoly_divide_exact(den_, d, qd))
                throw DomainError("gcd division failed");
            num_ = std::move(qn);
            den_ = std::move(qd);
        }
    }

    if (sgn(den_.leading_term().second) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RationalFunction::denominator_is_unit_monomial() const {
    if (den_.nterms() != 1) return false;
    const Int& c = den_.leading_term().second;
    return c == 1 || c == -1;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.num_.is_zero())
        throw ZeroDenominatorError("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(unsigned long e) const {
    return RationalFunction(num_.pow(e), den_.pow(e));
}

std::string RationalFunction::str(const std::vector<std::string>& names) const {
    if (den_.is_one()) return num_.str(names);
    std::string n = num_.str(names);
    std::string d = den_.str(names);
    if (num_.nterms() > 1) n = "(" + n + ")";
    if (den_.nterms() > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace locfac
