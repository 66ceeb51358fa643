#include "locfac/laurent.hpp"

#include <sstream>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

void check_arity(int nvars, const ExponentVec& e) {
    if (static_cast<int>(e.size()) != nvars)
        throw DimensionMismatchError("exponent vector arity mismatch");
}

} // namespace

LaurentPolynomial LaurentPolynomial::from_terms(
    int nvars, const std::vector<std::pair<ExponentVec, Int>>& raw) {
    LaurentPolynomial p(nvars);
    for (const auto& [e, c] : raw) p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, Int c) {
    LaurentPolynomial p(nvars);
    p.add_term(ExponentVec(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars)
        throw DimensionMismatchError("variable index out of range");
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars, std::move(e), Int(1));
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, ExponentVec e, Int c) {
    check_arity(nvars, e);
    LaurentPolynomial p(nvars);
    p.add_term(e, c);
    return p;
}

void LaurentPolynomial::add_term(const ExponentVec& e, const Int& c) {
    check_arity(nvars_, e);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatchError("Laurent polynomial arity mismatch");
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    return *this + (-o);
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatchError("Laurent polynomial arity mismatch");
    LaurentPolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExponentVec e(e1.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

std::string LaurentPolynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t i) {
        if (i < names.size()) return names[i];
        return "x" + std::to_string(i + 1);
    };
    std::ostringstream out;
    bool first = true;
    // Iterate lex-descending so the leading term prints first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Int a = abs_int(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool any_var = false;
        for (long x : e)
            if (x != 0) any_var = true;
        bool need_sep = false;
        if (!any_var || a != 1) {
            out << a.get_str();
            need_sep = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_sep) out << "*";
            out << var_name(i);
            if (e[i] != 1) out << "^" << e[i];
            need_sep = true;
        }
    }
    return out.str();
}

} // namespace locfac
