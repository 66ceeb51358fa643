#include "locfac/json_io.hpp"

#include "locfac/errors.hpp"

namespace locfac {

Json int_json(const Int& v) { return v.get_str(); }

Int int_from_json(const Json& j) {
    try {
        if (j.is_string()) return Int(j.get<std::string>());
        if (j.is_number_integer()) return Int(j.get<long>());
    } catch (const std::invalid_argument&) {
        // fall through to the shared error below
    }
    throw ParseError("expected an integer (number or decimal string)");
}

Json matrix_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(int_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntegerMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw ParseError("matrix must be a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const Json& row : j) {
        if (!row.is_array()) throw ParseError("matrix rows must be arrays");
        std::vector<Int> r;
        for (const Json& v : row) r.push_back(int_from_json(v));
        rows.push_back(std::move(r));
    }
    return IntegerMatrix::from_rows(rows);
}

Json poly_json(const IntPolynomial& p, const std::string& var) {
    Json coeffs = Json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_json(c));
    return Json{{"coeffs", std::move(coeffs)}, {"display", p.str(var)}};
}

IntPolynomial poly_from_json(const Json& j) {
    const Json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("coeffs"))
            throw ParseError("polynomial object needs a coeffs array");
        arr = &j.at("coeffs");
    }
    if (!arr->is_array())
        throw ParseError("polynomial coeffs must be an array (ascending)");
    std::vector<Int> c;
    for (const Json& v : *arr) c.push_back(int_from_json(v));
    return IntPolynomial{std::move(c)};
}

Json complex_json(Cx z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json curve_json(const CurveSpec& c) {
    return Json{{"a", int_json(c.a)},
                {"b", int_json(c.b)},
                {"discriminant", int_json(c.discriminant())}};
}

CurveSpec curve_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw ParseError("curve needs fields a and b");
    return CurveSpec{int_from_json(j.at("a")), int_from_json(j.at("b"))};
}

Json point_count_json(const PointCountRecord& rec, const std::string& method) {
    return Json{{"p", int_json(rec.p)},
                {"r", rec.r},
                {"count", int_json(rec.count)},
                {"trace", int_json(rec.trace)},
                {"method", method}};
}

Json local_zeta_json(const LocalZetaFunction& z) {
    Json polys = Json::array();
    for (const auto& p : z.polys) polys.push_back(poly_json(p));
    return Json{{"q", int_json(z.q)},
                {"dim", z.dim()},
                {"factors", std::move(polys)}};
}

Json snf_json(const SNFResult& snf) {
    Json diag = Json::array();
    const long k = std::min(snf.d.rows(), snf.d.cols());
    for (long t = 0; t < k; ++t) diag.push_back(int_json(snf.d.at(t, t)));
    return Json{{"u", matrix_json(snf.u)},
                {"d", matrix_json(snf.d)},
                {"v", matrix_json(snf.v)},
                {"diagonal", std::move(diag)}};
}

Json k_theory_json(const KTheoryResult& k) {
    Json tors = Json::array();
    for (const Int& t : k.k0_torsion) tors.push_back(int_json(t));
    return Json{{"k0_torsion", std::move(tors)},
                {"k0_free_rank", k.k0_free_rank},
                {"k1_rank", k.k1_rank}};
}

Json conjugacy_json(const ConjugacyReport& rep) {
    return Json{{"charpoly_equal", rep.charpoly_equal},
                {"trace_equal", rep.trace_equal},
                {"det_equal", rep.det_equal},
                {"cokernel_equal", rep.cokernel_equal},
                {"all_pass", rep.all_pass()},
                {"note", "necessary invariants only; passing does not "
                         "certify conjugacy"}};
}

Json truncation_json(const TruncationReport& rep) {
    Json sizes = Json::array();
    for (long n : rep.sizes) sizes.push_back(n);
    Json polys = Json::array();
    for (const auto& p : rep.charpolys) polys.push_back(poly_json(p, "s"));
    Json windows = Json::array();
    for (const auto& w : rep.low_order_windows) {
        Json row = Json::array();
        for (const Int& c : w) row.push_back(int_json(c));
        windows.push_back(std::move(row));
    }
    return Json{{"sizes", std::move(sizes)},
                {"charpolys", std::move(polys)},
                {"window_width", rep.window_width},
                {"low_order_windows", std::move(windows)},
                {"low_order_stable", rep.low_order_stable},
                {"raw_equal", rep.raw_equal},
                {"persistent_factor", poly_json(rep.persistent_factor, "s")},
                {"stabilizing", rep.stabilizing}};
}

Json row_finiteness_json(const RowFinitenessReport& rep) {
    return Json{{"row_finite", rep.row_finite},
                {"rows_checked", rep.rows_checked},
                {"max_nonzero_per_row", rep.max_nonzero_per_row}};
}

Json markov_json(const MarkovCompanion& mc) {
    return Json{{"matrix", matrix_json(mc.matrix)},
                {"entrywise_nonnegative", mc.entrywise_nonnegative},
                {"prime_power", int_json(mc.prime_power)}};
}

Json seed_json(const Seed& seed) {
    Json vars = Json::array();
    for (const auto& v : seed.vars) vars.push_back(v.str());
    return Json{{"b", matrix_json(seed.b)}, {"vars", std::move(vars)}};
}

Json mutation_report_json(const MutationReport& rep) {
    Json vars = Json::array();
    for (const auto& v : rep.variables) vars.push_back(v.str());
    return Json{{"clusters", rep.clusters},
                {"depth", rep.depth},
                {"variables", std::move(vars)},
                {"variable_count", rep.variables.size()},
                {"all_laurent", rep.all_laurent},
                {"truncated", rep.truncated}};
}

Json euler_product_json(const EulerProductResult& res) {
    Json good = Json::array();
    for (long p : res.primes_used) good.push_back(p);
    Json bad = Json::array();
    for (long p : res.bad_primes) bad.push_back(p);
    return Json{{"s", complex_json(res.s)},
                {"bound", res.bound},
                {"primes_used", res.primes_used.size()},
                {"good_primes", std::move(good)},
                {"bad_primes", std::move(bad)},
                {"value", complex_json(res.value)},
                {"tail_bound", res.tail_bound}};
}

Json identity_check_json(const IdentityCheckResult& res) {
    Json failed = Json::array();
    for (long p : res.failed_primes) failed.push_back(p);
    return Json{{"ok", res.ok},
                {"primes_checked", res.primes_checked},
                {"failed_primes", std::move(failed)},
                {"worst_rel_err", res.worst_rel_err}};
}

BandedOperatorSpec banded_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw ParseError("banded description needs a kind field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "diagonal") {
        return BandedOperatorSpec::diagonal(int_from_json(j.at("value")));
    }
    if (kind == "tridiagonal") {
        return BandedOperatorSpec::tridiagonal(int_from_json(j.at("lo")),
                                               int_from_json(j.at("mid")),
                                               int_from_json(j.at("hi")));
    }
    if (kind == "sparse") {
        if (!j.contains("entries") || !j.at("entries").is_array())
            throw ParseError("sparse banded description needs entries");
        std::map<std::pair<long, long>, Int> entries;
        for (const Json& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("sparse entries are [i, j, value] triples");
            entries[{e[0].get<long>(), e[1].get<long>()}] = int_from_json(e[2]);
        }
        return BandedOperatorSpec::sparse(entries);
    }
    throw ParseError("unknown banded kind: " + kind);
}

HodgeNumbers hodge_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("weight") || !j.contains("h"))
        throw ParseError("Hodge description needs weight and h");
    const int weight = j.at("weight").get<int>();
    std::vector<long> h;
    for (const Json& v : j.at("h")) h.push_back(v.get<long>());
    if (j.contains("middle_plus") || j.contains("middle_minus")) {
        return make_hodge_numbers(weight, std::move(h),
                                  j.value("middle_plus", 0L),
                                  j.value("middle_minus", 0L));
    }
    return make_hodge_numbers(weight, std::move(h));
}

} // namespace locfac
