#include "locfac/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "locfac/errors.hpp"

namespace locfac {

namespace {

void require_consistent(const Seed& seed) {
    if (!seed.b.is_square())
        throw NonSquareError("exchange matrix must be square");
    if (static_cast<long>(seed.vars.size()) != seed.b.rows())
        throw DimensionMismatchError(
            "seed variable list does not match exchange matrix size");
}

// Unordered canonical form of a cluster; the canonical string of a
// reduced rational function identifies its value.
std::vector<std::string> cluster_key(const Seed& seed) {
    std::vector<std::string> key;
    key.reserve(seed.vars.size());
    for (const auto& v : seed.vars) key.push_back(v.str());
    std::sort(key.begin(), key.end());
    return key;
}

} // namespace

Seed initial_seed(const IntegerMatrix& b) {
    if (!b.is_square())
        throw NonSquareError("exchange matrix must be square");
    const long n = b.rows();
    if (n < 1) throw DomainError("exchange matrix must be nonempty");
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (b.at(i, j) != -b.at(j, i))
                throw NotSkewSymmetricError("exchange matrix is not skew-symmetric");
    Seed s;
    s.b = b;
    for (long i = 0; i < n; ++i)
        s.vars.push_back(
            RationalFunction::variable(static_cast<int>(n), static_cast<int>(i)));
    return s;
}

Seed mutate(const Seed& seed, long k) {
    require_consistent(seed);
    const long n = seed.rank();
    if (k < 1 || k > n)
        throw DirectionOutOfRangeError("mutation direction " + std::to_string(k) +
                                       " outside 1.." + std::to_string(n));
    const long kk = k - 1;

    // Exchange: x_k x_k' = prod x_i^{[b_ik]_+} + prod x_i^{[-b_ik]_+}.
    const int nv = seed.vars.front().nvars();
    RationalFunction pos = RationalFunction::constant(nv, Int(1));
    RationalFunction neg = RationalFunction::constant(nv, Int(1));
    for (long i = 0; i < n; ++i) {
        const Int& e = seed.b.at(i, kk);
        if (e > 0)
            pos = pos * seed.vars[static_cast<std::size_t>(i)].pow(e.get_ui());
        else if (e < 0)
            neg = neg * seed.vars[static_cast<std::size_t>(i)].pow(
                            Int(-e).get_ui());
    }

    Seed out;
    out.vars = seed.vars;
    out.vars[static_cast<std::size_t>(kk)] =
        (pos + neg) / seed.vars[static_cast<std::size_t>(kk)];

    out.b = IntegerMatrix(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Int& bij = seed.b.at(i, j);
            if (i == kk || j == kk) {
                out.b.at(i, j) = -bij;
            } else {
                const Int& bik = seed.b.at(i, kk);
                const Int& bkj = seed.b.at(kk, j);
                // |b_ik| b_kj + b_ik |b_kj| is always even.
                out.b.at(i, j) =
                    bij + divexact_int(abs_int(bik) * bkj + bik * abs_int(bkj),
                                       Int(2));
            }
        }
    return out;
}

bool is_laurent(const RationalFunction& value) {
    return value.denominator_is_unit_monomial();
}

MutationReport mutation_closure(const Seed& seed, long max_seeds) {
    require_consistent(seed);
    if (max_seeds < 1) throw DomainError("closure budget must be positive");

    MutationReport rep;
    std::set<std::vector<std::string>> seen_clusters;
    std::set<std::string> seen_vars;

    auto admit = [&](const Seed& s, long depth) {
        const auto key = cluster_key(s);
        if (seen_clusters.count(key)) return false;
        seen_clusters.insert(key);
        ++rep.clusters;
        rep.depth = depth;
        for (const auto& v : s.vars) {
            if (seen_vars.insert(v.str()).second) {
                rep.variables.push_back(v);
                if (!is_laurent(v)) rep.all_laurent = false;
            }
        }
        return true;
    };

    std::deque<std::pair<Seed, long>> queue;
    admit(seed, 0);
    queue.emplace_back(seed, 0);

    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        for (long k = 1; k <= cur.rank(); ++k) {
            Seed child = mutate(cur, k);
            if (seen_clusters.count(cluster_key(child))) continue;
            if (rep.clusters >= max_seeds) {
                rep.truncated = true;
                continue;
            }
            admit(child, depth + 1);
            queue.emplace_back(std::move(child), depth + 1);
        }
    }
    return rep;
}

} // namespace locfac
