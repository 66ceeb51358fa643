#include "locfac/finite_field.hpp"

#include <cstdint>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

constexpr long kEnumerationBound = 1000000;

void require_odd_prime(const Int& p) {
    if (p == 2)
        throw EvenPrimeError("p = 2 is not supported; the counters need an odd prime");
    if (p < 2 || !is_probable_prime(p))
        throw EvenOrCompositeModulusError("modulus " + to_decimal(p) +
                                          " is not an odd prime");
}

void require_good_reduction(const CurveSpec& curve, const Int& p) {
    if (curve.discriminant() % p == 0)
        throw BadReductionError("curve has bad reduction at p = " + to_decimal(p));
}

void require_enumerable(const Int& p) {
    if (p > kEnumerationBound)
        throw EnumerationBoundError("p = " + to_decimal(p) +
                                    " exceeds the enumeration bound 10^6");
}

std::uint64_t mod_u64(const Int& v, std::uint64_t p) {
    Int r = v % Int(static_cast<unsigned long>(p));
    if (r < 0) r += Int(static_cast<unsigned long>(p));
    return r.get_ui();
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1ULL) acc = acc * base % p;
        base = base * base % p;
        e >>= 1ULL;
    }
    return acc;
}

} // namespace

int quadratic_character(const Int& x, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
        throw EvenOrCompositeModulusError("modulus " + to_decimal(p) +
                                          " is not an odd prime");
    Int r = x % p;
    if (r == 0) return 0;
    if (r < 0) r += p;
    Int e = (p - 1) / 2;
    Int s;
    mpz_powm(s.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return s == 1 ? 1 : -1;
}

PointCountRecord count_points_naive(const CurveSpec& curve, const Int& p) {
    require_odd_prime(p);
    require_enumerable(p);
    require_good_reduction(curve, p);

    const std::uint64_t m = p.get_ui();
    const std::uint64_t a = mod_u64(curve.a, m);
    const std::uint64_t b = mod_u64(curve.b, m);

    // Full double loop over the affine plane.  Deliberately the dumb
    // path: it is the independent witness the character-sum counter is
    // checked against.
    std::uint64_t n = 1; // point at infinity
    for (std::uint64_t x = 0; x < m; ++x) {
        const std::uint64_t rhs = (x * x % m * x + a * x + b) % m;
        for (std::uint64_t y = 0; y < m; ++y)
            if (y * y % m == rhs) ++n;
    }

    PointCountRecord rec;
    rec.p = p;
    rec.r = 1;
    rec.count = Int(static_cast<unsigned long>(n));
    rec.trace = p + 1 - rec.count;
    return rec;
}

PointCountRecord count_points_charsum(const CurveSpec& curve, const Int& p) {
    require_odd_prime(p);
    require_enumerable(p);
    require_good_reduction(curve, p);

    const std::uint64_t m = p.get_ui();
    const std::uint64_t a = mod_u64(curve.a, m);
    const std::uint64_t b = mod_u64(curve.b, m);
    const std::uint64_t e = (m - 1) / 2;

    // N = p + 1 + sum_x chi(x^3 + a x + b), chi by Euler's criterion.
    long long s = 0;
    for (std::uint64_t x = 0; x < m; ++x) {
        const std::uint64_t rhs = (x * x % m * x + a * x + b) % m;
        if (rhs == 0) continue;
        s += powmod_u64(rhs, e, m) == 1 ? 1 : -1;
    }

    PointCountRecord rec;
    rec.p = p;
    rec.r = 1;
    rec.count = p + 1 + Int(static_cast<long>(s));
    rec.trace = p + 1 - rec.count;
    return rec;
}

Int trace_of_frobenius(const CurveSpec& curve, const Int& p) {
    return count_points_charsum(curve, p).trace;
}

std::vector<Int> frobenius_trace_sequence(const CurveSpec& curve, const Int& p,
                                          long r) {
    if (r < 1) throw DomainError("extension degree must be at least 1");
    const Int t1 = trace_of_frobenius(curve, p);
    std::vector<Int> t;
    t.reserve(static_cast<std::size_t>(r));
    t.push_back(t1);
    if (r >= 2) t.push_back(t1 * t1 - 2 * p);
    for (long m = 3; m <= r; ++m)
        t.push_back(t1 * t[static_cast<std::size_t>(m - 2)] -
                    p * t[static_cast<std::size_t>(m - 3)]);
    return t;
}

PointCountRecord count_points_extension(const CurveSpec& curve, const Int& p,
                                        long r) {
    std::vector<Int> t = frobenius_trace_sequence(curve, p, r);
    PointCountRecord rec;
    rec.p = p;
    rec.r = r;
    rec.count = pow_int(p, static_cast<unsigned long>(r)) + 1 -
                t[static_cast<std::size_t>(r - 1)];
    rec.trace = t[0];
    return rec;
}

} // namespace locfac
