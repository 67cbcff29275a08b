#include "padicft/io.hpp"

#include <fstream>
#include <sstream>

namespace padicft::io {

using arith::ipow;
using arith::LambdaRing;
using arith::Lambda;
using arith::LocalFieldSpec;
using arith::WindowSpace;

namespace {

constexpr const char* kSchemaKey = "schema";

const json& need(const json& j, const char* key) {
    if (!j.is_object()) throw InputError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
    return *it;
}

std::int64_t need_int(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("key \"") + key + "\" must be an integer");
    return v.get<std::int64_t>();
}

std::string need_str(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_string()) throw InputError(std::string("key \"") + key + "\" must be a string");
    return v.get<std::string>();
}

const json& need_array(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_array()) throw InputError(std::string("key \"") + key + "\" must be an array");
    return v;
}

std::int64_t as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return v.get<std::int64_t>();
}

void check_schema(const json& j, const std::string& expected) {
    std::string got = need_str(j, kSchemaKey);
    if (got != expected)
        throw InputError("schema mismatch: expected \"" + expected + "\", got \"" + got + "\"");
}

std::vector<std::int64_t> int_list(const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_int(e, what));
    return out;
}

} // namespace

// --- files and text ----------------------------------------------------------

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("JSON parse error in " + path + ": " + e.what());
    }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open file for writing: " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

// --- configuration -------------------------------------------------------------

Config config_from_json(const json& j) {
    Config c;
    c.field.p = need_int(j, "p");
    c.field.f = (int)need_int(j, "f");
    std::string ch = need_str(j, "characteristic");
    if (ch == "zero")
        c.field.ch = arith::Characteristic::zero;
    else if (ch == "positive")
        c.field.ch = arith::Characteristic::positive;
    else
        throw InputError("characteristic must be \"zero\" or \"positive\"");
    c.field.validate();
    c.ell = need_int(j, "ell");
    c.n = (int)need_int(j, "n");
    c.M = (int)need_int(j, "M");
    (void)c.ring(); // rejects ell = p, non-primes, oversized moduli
    return c;
}

json config_to_json(const Config& c) {
    json j = field_to_json(c.field);
    j[kSchemaKey] = "padicft/config/1";
    j["ell"] = c.ell;
    j["n"] = c.n;
    j["M"] = c.M;
    return j;
}

json field_to_json(const LocalFieldSpec& field) {
    return json{{"p", field.p},
                {"f", field.f},
                {"characteristic",
                 field.ch == arith::Characteristic::zero ? "zero" : "positive"}};
}

LocalFieldSpec field_from_json(const json& j) {
    LocalFieldSpec field;
    field.p = need_int(j, "p");
    field.f = (int)need_int(j, "f");
    std::string ch = need_str(j, "characteristic");
    if (ch == "zero")
        field.ch = arith::Characteristic::zero;
    else if (ch == "positive")
        field.ch = arith::Characteristic::positive;
    else
        throw InputError("characteristic must be \"zero\" or \"positive\"");
    field.validate();
    return field;
}

// --- rationals ----------------------------------------------------------------

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("rational must be an integer or an \"a/b\" string");
}

// --- Schwartz functions ---------------------------------------------------------

std::vector<std::int64_t> lex_point_order(const LocalFieldSpec& field, int d, int m,
                                          int k) {
    const std::int64_t q = field.q();
    const int mk = m + k;
    const int T = d * mk; // total digits per point
    std::int64_t npoints = 1;
    for (int t = 0; t < T; t++) {
        if (npoints > (std::int64_t(1) << 40) / q)
            throw InputError("window too large to serialize");
        npoints *= q;
    }
    const std::int64_t ppc = ipow(q, mk);
    std::vector<std::int64_t> perm((size_t)npoints);
    std::vector<int> digit((size_t)std::max(T, 1), 0);
    for (std::int64_t r = 0; r < npoints; r++) {
        // digits of r, big-endian: digit[0] is the most significant
        std::int64_t rest = r;
        for (int t = T - 1; t >= 0; t--) {
            digit[(size_t)t] = (int)(rest % q);
            rest /= q;
        }
        // repack: coordinate j has digits digit[j*mk .. j*mk+mk-1],
        // little-endian from exponent -m
        std::int64_t flat = 0;
        for (int j = d - 1; j >= 0; j--) {
            std::int64_t idx = 0;
            for (int i = mk - 1; i >= 0; i--) idx = idx * q + digit[(size_t)(j * mk + i)];
            flat = flat * ppc + idx;
        }
        perm[(size_t)r] = flat;
    }
    return perm;
}

json schwartz_to_json(const schwartz::SchwartzFunction& f) {
    json j;
    j[kSchemaKey] = "padicft/schwartz/1";
    j["field"] = field_to_json(f.field);
    j["ring"] = json{{"ell", f.ring.ell}, {"n", f.ring.n}, {"M", f.ring.M}};
    j["d"] = f.d;
    j["m"] = f.m;
    j["k"] = f.k;
    auto perm = lex_point_order(f.field, f.d, f.m, f.k);
    json values = json::array();
    for (std::int64_t r = 0; r < (std::int64_t)perm.size(); r++) {
        const Lambda& v = f.values[(size_t)perm[(size_t)r]];
        json coeffs = json::array();
        for (uint32_t c : v.c) coeffs.push_back((std::int64_t)c);
        values.push_back(std::move(coeffs));
    }
    j["values"] = std::move(values);
    return j;
}

schwartz::SchwartzFunction schwartz_from_json(const LambdaRing& ring, const json& j) {
    check_schema(j, "padicft/schwartz/1");
    LocalFieldSpec field = field_from_json(need(j, "field"));
    if (j.contains("ring")) {
        const json& r = j["ring"];
        if (need_int(r, "ell") != ring.ell || need_int(r, "n") != ring.n ||
            need_int(r, "M") != ring.M)
            throw InputError("file's coefficient ring differs from the configuration");
    }
    int d = (int)need_int(j, "d");
    int m = (int)need_int(j, "m");
    int k = (int)need_int(j, "k");
    schwartz::SchwartzFunction f(field, ring, d, m, k);
    const json& values = need_array(j, "values");
    auto perm = lex_point_order(field, d, m, k);
    if ((std::int64_t)values.size() != (std::int64_t)perm.size())
        throw InputError("values: expected " + std::to_string(perm.size()) +
                         " entries, got " + std::to_string(values.size()));
    for (std::int64_t r = 0; r < (std::int64_t)perm.size(); r++) {
        const json& coeffs = values[(size_t)r];
        if (!coeffs.is_array() || (std::int64_t)coeffs.size() != ring.phi)
            throw InputError("each value must be a coefficient list of length " +
                             std::to_string(ring.phi));
        Lambda v = ring.zero();
        for (std::int64_t s = 0; s < ring.phi; s++) {
            std::int64_t c = as_int(coeffs[(size_t)s], "coefficient");
            if (c < 0 || c >= ring.lmod)
                throw InputError("coefficient out of range [0, ell^n)");
            v.c[(size_t)s] = (uint32_t)c;
        }
        f.values[(size_t)perm[(size_t)r]] = std::move(v);
    }
    return f;
}

// --- series and twisted Laurent polynomials --------------------------------------

json series_params_to_json(const frobsolve::SeriesParams& par) {
    return json{{"p", par.p},
                {"f", par.f},
                {"emax", rational_to_json(par.emax)},
                {"max_denom_exp", par.max_denom_exp}};
}

frobsolve::SeriesParams series_params_from_json(const json& j) {
    frobsolve::SeriesParams par;
    par.p = need_int(j, "p");
    par.f = (int)need_int(j, "f");
    par.emax = rational_from_json(need(j, "emax"));
    par.max_denom_exp = (int)need_int(j, "max_denom_exp");
    par.validate();
    return par;
}

json series_terms_to_json(const std::vector<frobsolve::SeriesTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms)
        out.push_back(json::array({t.e.num, t.e.den, t.c}));
    return out;
}

std::vector<frobsolve::SeriesTerm> series_terms_from_json(const json& j) {
    if (!j.is_array()) throw InputError("terms must be an array");
    std::vector<frobsolve::SeriesTerm> terms;
    terms.reserve(j.size());
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw InputError("each term must be [numerator, denominator, coefficient]");
        frobsolve::SeriesTerm st;
        st.e = Rational(as_int(t[0], "exponent numerator"),
                        as_int(t[1], "exponent denominator"));
        st.c = (int)as_int(t[2], "coefficient index");
        terms.push_back(st);
    }
    return terms;
}

json series_to_json(const frobsolve::Series& s) {
    json j;
    j[kSchemaKey] = "padicft/series/1";
    j["params"] = series_params_to_json(s.par);
    j["emin"] = rational_to_json(s.emin);
    j["terms"] = series_terms_to_json(s.terms);
    return j;
}

frobsolve::Series series_from_json(const json& j) {
    check_schema(j, "padicft/series/1");
    auto par = series_params_from_json(need(j, "params"));
    frobsolve::Series s =
        frobsolve::series_make(par, series_terms_from_json(need_array(j, "terms")));
    if (j.contains("emin")) {
        Rational emin = rational_from_json(j["emin"]);
        if (emin < s.emin) s.emin = emin;
    }
    return s;
}

json twisted_to_json(const frobsolve::TwistedLaurent& A) {
    json j;
    j[kSchemaKey] = "padicft/twisted-laurent/1";
    j["params"] = series_params_to_json(A.par);
    json coeff = json::array(); // ascending F-powers: map order is deterministic
    for (const auto& [i, s] : A.coeff)
        coeff.push_back(json{{"power", i},
                             {"emin", rational_to_json(s.emin)},
                             {"terms", series_terms_to_json(s.terms)}});
    j["coeff"] = std::move(coeff);
    return j;
}

frobsolve::TwistedLaurent twisted_from_json(const json& j) {
    check_schema(j, "padicft/twisted-laurent/1");
    auto par = series_params_from_json(need(j, "params"));
    frobsolve::TwistedLaurent A = frobsolve::twisted_zero(par);
    const json& coeff = need_array(j, "coeff");
    for (const auto& entry : coeff) {
        int i = (int)need_int(entry, "power");
        frobsolve::Series s =
            frobsolve::series_make(par, series_terms_from_json(need_array(entry, "terms")));
        if (entry.contains("emin")) {
            Rational emin = rational_from_json(entry["emin"]);
            if (emin < s.emin) s.emin = emin;
        }
        if (s.is_zero()) continue;
        A = frobsolve::twisted_add(A, frobsolve::twisted_term(i, s));
    }
    return A;
}

std::string series_display(const frobsolve::Series& s) {
    if (s.terms.empty()) return "0";
    std::string out;
    for (const auto& t : s.terms) {
        if (!out.empty()) out += " + ";
        if (t.e == Rational(0)) {
            out += std::to_string(t.c);
        } else {
            std::string mono = t.e == Rational(1)    ? "t"
                               : t.e.is_integer()    ? ("t^" + t.e.str())
                                                     : ("t^(" + t.e.str() + ")");
            out += (t.c == 1) ? mono : (std::to_string(t.c) + "*" + mono);
        }
    }
    return out;
}

// --- coherent and Banach-Colmez data ----------------------------------------------

namespace {

json coherent_body_to_json(const ffcalc::CoherentDatum& F) {
    json bundles = json::array();
    for (const auto& b : F.bundles)
        bundles.push_back(json::array({b.d, b.h, b.mult}));
    json torsion = json::array();
    for (auto l : F.torsion) torsion.push_back(l);
    return json{{"bundles", std::move(bundles)}, {"torsion", std::move(torsion)}};
}

ffcalc::CoherentDatum coherent_body_from_json(const json& j) {
    std::vector<ffcalc::StableDatum> bundles;
    for (const auto& b : need_array(j, "bundles")) {
        if (!b.is_array() || b.size() != 3)
            throw InputError("each bundle must be [d, h, mult]");
        bundles.push_back(ffcalc::StableDatum{as_int(b[0], "d"), as_int(b[1], "h"),
                                              as_int(b[2], "mult")});
    }
    std::vector<std::int64_t> torsion = int_list(need(j, "torsion"), "torsion");
    return ffcalc::make_coherent(std::move(bundles), std::move(torsion));
}

} // namespace

json coherent_to_json(const ffcalc::CoherentDatum& F) {
    json j = coherent_body_to_json(F);
    j[kSchemaKey] = "padicft/coherent-datum/1";
    return j;
}

ffcalc::CoherentDatum coherent_from_json(const json& j) {
    check_schema(j, "padicft/coherent-datum/1");
    return coherent_body_from_json(j);
}

json bc_to_json(const ffcalc::BCDatum& B) {
    json dual_torsion = json::array();
    for (auto l : B.dual_torsion) dual_torsion.push_back(l);
    json j;
    j[kSchemaKey] = "padicft/bc-datum/1";
    j["degree0"] = coherent_body_to_json(B.degree0);
    j["locsys_rank"] = B.locsys_rank;
    j["classifying_rank"] = B.classifying_rank;
    j["degree1"] = coherent_body_to_json(B.degree1);
    j["dual_torsion"] = std::move(dual_torsion);
    return j;
}

ffcalc::BCDatum bc_from_json(const json& j) {
    check_schema(j, "padicft/bc-datum/1");
    return ffcalc::make_bc(coherent_body_from_json(need(j, "degree0")),
                           need_int(j, "locsys_rank"),
                           need_int(j, "classifying_rank"),
                           coherent_body_from_json(need(j, "degree1")),
                           int_list(need(j, "dual_torsion"), "dual_torsion"));
}

json ext_entry_to_json(const ffcalc::ExtEntry& e) {
    json out = json::array();
    for (const auto& t : e)
        out.push_back(json{{"gen", ext_generator_name(t.gen)},
                           {"twist", t.twist},
                           {"shift", t.shift}});
    return out;
}

std::string ext_generator_name(ffcalc::ExtGenerator g) {
    return g == ffcalc::ExtGenerator::UnitE ? "E" : "Osharp";
}

// --- CSV tables --------------------------------------------------------------------

std::string polygon_csv(const ffcalc::HNPolygon& poly) {
    std::ostringstream out;
    out << "# schema: padicft/polygon-vertices/1\n";
    out << "rank,degree\n";
    for (const auto& [r, d] : poly.vertices) out << r << "," << d << "\n";
    return out.str();
}

std::string pl_function_csv(const ramify::PLFunction& f) {
    std::ostringstream out;
    out << "# schema: padicft/pl-function/1\n";
    out << "# lo: " << (f.lo ? f.lo->str() : "-inf") << "\n";
    out << "# hi: " << (f.hi ? f.hi->str() : "inf") << "\n";
    out << "# anchor_s: " << f.anchor_s.str() << "\n";
    out << "# anchor_val: " << f.anchor_val.str() << "\n";
    out << "break,slope\n";
    out << "," << f.slopes[0].str() << "\n";
    for (size_t i = 0; i < f.breaks.size(); i++)
        out << f.breaks[i].str() << "," << f.slopes[i + 1].str() << "\n";
    return out.str();
}

SwanRow swan_row(std::int64_t q, std::int64_t n, const Rational& sl_sigma) {
    SwanRow row;
    row.q = q;
    row.n = n;
    row.sl_sigma = sl_sigma;
    auto tr = ramify::transfer(n, sl_sigma, q);
    row.sl_V = tr.sl_V;
    row.sw_V = tr.sw_V;
    row.rank = tr.ft_rank;
    Rational sw_sigma = Rational(n) * sl_sigma;
    if (sw_sigma.is_integer() && sw_sigma.num >= 1)
        row.carayol = ramify::carayol_dim(q, sw_sigma.num);
    return row;
}

std::string swan_table_csv(const std::vector<SwanRow>& rows) {
    std::ostringstream out;
    out << "# schema: padicft/swan-table/1\n";
    out << "q,n,sl_sigma,sl_V,sw_V,rank,carayol\n";
    for (const auto& r : rows) {
        out << r.q << "," << r.n << "," << r.sl_sigma.str() << "," << r.sl_V.str()
            << "," << r.sw_V.str() << "," << r.rank.str() << ",";
        if (r.carayol) out << *r.carayol;
        out << "\n";
    }
    return out.str();
}

} // namespace padicft::io
