#include "locfac/poly.hpp"

#include <algorithm>
#include <sstream>

#include "locfac/errors.hpp"

namespace locfac {

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * Int(static_cast<long>(k));
    return IntPolynomial{std::move(d)};
}

IntPolynomial IntPolynomial::reversed(long n) const {
    if (is_zero()) return zero();
    if (n < 0) n = degree();
    if (n < degree())
        throw DomainError("reversal order below polynomial degree");
    std::vector<Int> r(static_cast<std::size_t>(n) + 1, Int(0));
    for (std::size_t k = 0; k < c_.size(); ++k)
        r[static_cast<std::size_t>(n) - k] = c_[k];
    return IntPolynomial{std::move(r)};
}

Int IntPolynomial::content() const {
    Int g{0};
    for (const auto& c : c_) g = gcd_int(g, c);
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return zero();
    Int g = content();
    if (sgn(leading()) < 0) g = -g;
    std::vector<Int> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = divexact_int(c_[k], g);
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r[k] += o.c_[k];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPolynomial{std::move(r)};
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
    std::vector<Int> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
    return IntPolynomial{std::move(r)};
}

std::string IntPolynomial::str(const std::string& var, bool descending) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](std::size_t k) {
        const Int& c = c_[k];
        if (c == 0) return;
        Int a = abs_int(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    };
    if (descending) {
        for (std::size_t k = c_.size(); k-- > 0;) emit(k);
    } else {
        for (std::size_t k = 0; k < c_.size(); ++k) emit(k);
    }
    return out.str();
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with
// deg r < deg b.  Multiply-through variant; only the remainder is kept.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const long shift = a.degree() - db;
        IntPolynomial t =
            IntPolynomial::monomial(a.leading(), static_cast<std::size_t>(shift));
        a = a * b.leading() - t * b;
    }
    return a;
}

} // namespace

IntPolynomial poly_divexact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial::zero();
    if (a.degree() < b.degree())
        throw DomainError("polynomial division is not exact");
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                       Int(0));
    IntPolynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (rem != 0) throw DomainError("polynomial division is not exact");
        const std::size_t k = static_cast<std::size_t>(r.degree() - b.degree());
        q[k] = c;
        r = r - IntPolynomial::monomial(c, k) * b;
    }
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return IntPolynomial{std::move(q)};
}

bool poly_divides(const IntPolynomial& b, const IntPolynomial& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    IntPolynomial r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.leading().get_mpz_t(),
                    b.leading().get_mpz_t());
        if (rem != 0) return false;
        r = r - IntPolynomial::monomial(
                    c, static_cast<std::size_t>(r.degree() - b.degree())) *
                    b;
    }
    return r.is_zero();
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * b.content();
    if (b.is_zero()) return a.primitive_part() * a.content();
    Int cont = gcd_int(a.content(), b.content());
    IntPolynomial f = a.primitive_part();
    IntPolynomial g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (true) {
        IntPolynomial r = pseudo_rem(f, g);
        if (r.is_zero()) break;
        f = g;
        g = r.primitive_part();
    }
    return g * cont;
}

std::vector<Int> power_series_inverse(const IntPolynomial& p, std::size_t n) {
    if (p.coeff(0) != 1)
        throw DomainError("power series inverse needs constant term 1");
    std::vector<Int> inv(n, Int(0));
    if (n == 0) return inv;
    inv[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Int s{0};
        for (std::size_t j = 1; j <= k; ++j) s += p.coeff(j) * inv[k - j];
        inv[k] = -s;
    }
    return inv;
}

std::vector<Int> power_series_mul(const std::vector<Int>& a,
                                  const std::vector<Int>& b, std::size_t n) {
    std::vector<Int> r(n, Int(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

} // namespace locfac
