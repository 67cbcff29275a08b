#ifndef PADICFT_IO_HPP
#define PADICFT_IO_HPP

// Serialization for every value the CLI reads or writes.  Formats are fixed
// by SCHEMA.md in the repository root: JSON for structured objects (every
// object carries a "schema" version tag), CSV for tables (first line is
// "# schema: ...").  All writers are deterministic: object keys are emitted
// in sorted order, table rows in a documented order, so identical values
// produce byte-identical files.
//
// Error split: structurally bad files (missing keys, wrong types, wrong
// lengths) raise InputError; files that parse but describe mathematically
// invalid objects propagate the library's ContractError.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padicft/arith.hpp"
#include "padicft/errors.hpp"
#include "padicft/ffcalc.hpp"
#include "padicft/frobsolve.hpp"
#include "padicft/ramify.hpp"
#include "padicft/rational.hpp"
#include "padicft/schwartz.hpp"

namespace padicft::io {

using nlohmann::json;

// --- files and text --------------------------------------------------------

json read_json_file(const std::string& path);     // InputError on any failure
std::string dump_json(const json& j);             // 2-space indent + newline
void write_text_file(const std::string& path, const std::string& text);

// --- configuration ---------------------------------------------------------

// {p, f, characteristic, ell, n, M}: the base field and coefficient ring
struct Config {
    arith::LocalFieldSpec field;
    std::int64_t ell = 3;
    int n = 1;
    int M = 0;

    arith::LambdaRing ring() const {
        return arith::LambdaRing(ell, n, M, field.p);
    }
};

Config config_from_json(const json& j);
json config_to_json(const Config& c);

json field_to_json(const arith::LocalFieldSpec& field);
arith::LocalFieldSpec field_from_json(const json& j);

// --- rationals (as "a" or "a/b" strings) ------------------------------------

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// --- Schwartz functions -----------------------------------------------------

// Serialized point order: each point of the d-fold window is written as its
// digit string (coordinate 0 first, within a coordinate little-endian from
// exponent -m), and points are listed in lexicographic order of those
// strings.  This returns the permutation taking serialized positions to
// internal table indices: serialized[r] = values[perm[r]].
std::vector<std::int64_t> lex_point_order(const arith::LocalFieldSpec& field,
                                          int d, int m, int k);

json schwartz_to_json(const schwartz::SchwartzFunction& f);
schwartz::SchwartzFunction schwartz_from_json(const arith::LambdaRing& ring,
                                              const json& j);

// --- truncated perfected series and twisted Laurent polynomials -------------

json series_params_to_json(const frobsolve::SeriesParams& par);
frobsolve::SeriesParams series_params_from_json(const json& j);

// terms as [exponent numerator, exponent denominator (a p-power), F_q index]
json series_terms_to_json(const std::vector<frobsolve::SeriesTerm>& terms);
std::vector<frobsolve::SeriesTerm> series_terms_from_json(const json& j);

json series_to_json(const frobsolve::Series& s);
frobsolve::Series series_from_json(const json& j);

json twisted_to_json(const frobsolve::TwistedLaurent& A);
frobsolve::TwistedLaurent twisted_from_json(const json& j);

// human-readable rendering, e.g. "1", "t^(1/2) + 3*t^2"
std::string series_display(const frobsolve::Series& s);

// --- coherent and Banach-Colmez data ----------------------------------------

json coherent_to_json(const ffcalc::CoherentDatum& F);
ffcalc::CoherentDatum coherent_from_json(const json& j);

json bc_to_json(const ffcalc::BCDatum& B);
ffcalc::BCDatum bc_from_json(const json& j);

json ext_entry_to_json(const ffcalc::ExtEntry& e);
std::string ext_generator_name(ffcalc::ExtGenerator g);

// --- CSV tables -------------------------------------------------------------

// "# schema: padicft/polygon-vertices/1" + header + one row per vertex
std::string polygon_csv(const ffcalc::HNPolygon& poly);

// "# schema: padicft/pl-function/1"; metadata comments, then break/slope rows
// (first row has an empty break cell: the slope left of the first break)
std::string pl_function_csv(const ramify::PLFunction& f);

// one row of the conductor table (q, n, sl_sigma, sl_V, sw_V, rank, carayol);
// carayol is blank unless sw_sigma = n*sl_sigma is a positive integer
struct SwanRow {
    std::int64_t q = 2;
    std::int64_t n = 2;
    Rational sl_sigma;
    Rational sl_V;
    Rational sw_V;
    Rational rank;
    std::optional<std::int64_t> carayol;
};

SwanRow swan_row(std::int64_t q, std::int64_t n, const Rational& sl_sigma);
std::string swan_table_csv(const std::vector<SwanRow>& rows);

} // namespace padicft::io

#endif
