#include "locfac/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "locfac/errors.hpp"

namespace locfac {

MPoly MPoly::constant(int nvars, Int c) {
    MPoly p(nvars);
    p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars)
        throw DimensionMismatchError("variable index out of range");
    Monomial m(static_cast<std::size_t>(nvars), 0);
    m[static_cast<std::size_t>(i)] = 1;
    return monomial(nvars, std::move(m), Int(1));
}

MPoly MPoly::monomial(int nvars, Monomial m, Int c) {
    if (static_cast<int>(m.size()) != nvars)
        throw DimensionMismatchError("monomial arity mismatch");
    MPoly p(nvars);
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (long e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

bool MPoly::is_one() const {
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

void MPoly::add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw DimensionMismatchError("monomial arity mismatch");
    for (long e : m)
        if (e < 0) throw DomainError("negative exponent in polynomial term");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::pair<const Monomial, Int>& MPoly::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return *terms_.rbegin();
}

long MPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    long d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[static_cast<std::size_t>(var)]);
    return d;
}

Int MPoly::content() const {
    Int g{0};
    for (const auto& [m, c] : terms_) g = gcd_int(g, c);
    return g;
}

Monomial MPoly::min_exponents() const {
    Monomial lo(static_cast<std::size_t>(nvars_), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            lo = m;
            first = false;
        } else {
            for (std::size_t i = 0; i < lo.size(); ++i)
                lo[i] = std::min(lo[i], m[i]);
        }
    }
    return lo;
}

MPoly MPoly::divide_by_monomial(const Monomial& m) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Monomial d(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            d[i] = e[i] - m[i];
            if (d[i] < 0) throw DomainError("monomial does not divide every term");
        }
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

MPoly MPoly::divide_by_int(const Int& g) const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, divexact_int(c, g));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatchError("polynomial arity mismatch");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatchError("polynomial arity mismatch");
    MPoly r(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m(m1.size());
            for (std::size_t k = 0; k < m.size(); ++k) m[k] = m1[k] + m2[k];
            r.add_term(m, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Int& k) const {
    if (k == 0) return MPoly(nvars_);
    MPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * k);
    return r;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly base = *this;
    MPoly acc = MPoly::constant(nvars_, Int(1));
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](std::size_t i) {
        if (i < names.size()) return names[i];
        return "x" + std::to_string(i + 1);
    };
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = abs_int(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool any_var = false;
        for (long x : m)
            if (x != 0) any_var = true;
        bool need_sep = false;
        if (!any_var || a != 1) {
            out << a.get_str();
            need_sep = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_sep) out << "*";
            out << var_name(i);
            if (m[i] != 1) out << "^" << m[i];
            need_sep = true;
        }
    }
    return out.str();
}

bool mpoly_divide_exact(const MPoly& a, const MPoly& b, MPoly& quotient) {
    if (b.is_zero()) throw ZeroDenominatorError("exact division by zero polynomial");
    MPoly q(a.nvars());
    MPoly r = a;
    const auto& ltb = b.leading_term();
    while (!r.is_zero()) {
        const auto& ltr = r.leading_term();
        Monomial m(ltr.first.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = ltr.first[i] - ltb.first[i];
            if (m[i] < 0) return false;
        }
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), ltr.second.get_mpz_t(),
                    ltb.second.get_mpz_t());
        if (rem != 0) return false;
        MPoly t = MPoly::monomial(a.nvars(), std::move(m), c);
        q = q + t;
        r = r - t * b;
    }
    quotient = std::move(q);
    return true;
}

namespace {

// Coefficient of v^k in p, with the v-exponent stripped to zero.
MPoly coeff_of_power(const MPoly& p, int v, long k) {
    MPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[static_cast<std::size_t>(v)] != k) continue;
        Monomial e = m;
        e[static_cast<std::size_t>(v)] = 0;
        r.add_term(e, c);
    }
    return r;
}

// gcd of all v-coefficients of p; the content of p viewed as a
// univariate polynomial in v.
MPoly content_in_var(const MPoly& p, int v) {
    MPoly g(p.nvars());
    const long d = p.degree_in(v);
    for (long k = 0; k <= d; ++k) {
        MPoly ck = coeff_of_power(p, v, k);
        if (ck.is_zero()) continue;
        g = mpoly_gcd(g, ck);
        if (g.is_one()) break;
    }
    return g;
}

MPoly primitive_in_var(const MPoly& p, int v) {
    MPoly cont = content_in_var(p, v);
    if (cont.is_one()) return p;
    MPoly q(p.nvars());
    if (!mpoly_divide_exact(p, cont, q))
        throw DomainError("content division failed");
    return q;
}

// Multiply-through pseudo-remainder of f by g in the variable v; the
// lex-leading v-coefficients cancel so deg_v strictly decreases.
MPoly pseudo_rem_in_var(MPoly r, const MPoly& g, int v) {
    const long dg = g.degree_in(v);
    const MPoly lcg = coeff_of_power(g, v, dg);
    while (!r.is_zero() && r.degree_in(v) >= dg) {
        const long dr = r.degree_in(v);
        MPoly lcr = coeff_of_power(r, v, dr);
        Monomial shift(static_cast<std::size_t>(r.nvars()), 0);
        shift[static_cast<std::size_t>(v)] = dr - dg;
        r = r * lcg - g * MPoly::monomial(r.nvars(), shift, Int(1)) * lcr;
    }
    return r;
}

MPoly sign_normalized(const MPoly& p) {
    if (p.is_zero()) return p;
    return sgn(p.leading_term().second) < 0 ? -p : p;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw DimensionMismatchError("polynomial arity mismatch");
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(a.nvars(), gcd_int(a.content(), b.content()));
    if (a == b) return sign_normalized(a);

    // Main variable: highest index occurring in either operand.
    int v = -1;
    for (int i = a.nvars() - 1; i >= 0; --i) {
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) {
            v = i;
            break;
        }
    }

    const MPoly cont_a = content_in_var(a, v);
    const MPoly cont_b = content_in_var(b, v);
    MPoly pa(a.nvars()), pb(b.nvars());
    if (!mpoly_divide_exact(a, cont_a, pa) || !mpoly_divide_exact(b, cont_b, pb))
        throw DomainError("content division failed");

    MPoly pp = MPoly::constant(a.nvars(), Int(1));
    if (pa.degree_in(v) > 0 && pb.degree_in(v) > 0) {
        MPoly f = pa, g = pb;
        if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
        while (true) {
            MPoly r = pseudo_rem_in_var(f, g, v);
            if (r.is_zero()) {
                pp = g;
                break;
            }
            if (r.degree_in(v) == 0) break; // v-free remainder: trivial gcd in v
            f = g;
            g = primitive_in_var(r, v);
        }
    }
    return sign_normalized(mpoly_gcd(cont_a, cont_b) * pp);
}

} // namespace locfac
