// Batch front-end: every computation is a subcommand with file-based input
// and output.  Exit codes: 0 on success, 1 on malformed input (bad command
// line, unreadable or schema-violating files), 2 on a violated mathematical
// contract -- in which case a diagnostic payload is still written to the
// output path so batch pipelines can consume the failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padicft/io.hpp"

using namespace padicft;
using io::json;

namespace {

// write to the output path, or stdout when no path was given
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        io::write_text_file(out_path, text);
}

struct FourierArgs {
    std::string config, in, out;
    bool inverse = false;
};

struct ConvolveArgs {
    std::string config, in, in2, out;
};

struct SwanArgs {
    std::string grid, out;
    std::int64_t q = 0, n = 0;
    std::string sl;
};

struct GosArgs {
    std::string profile, sl = "0", out;
};

struct PathArgs {
    std::string in, out;
};

schwartz::SchwartzFunction read_function(const io::Config& cfg,
                                         const arith::LambdaRing& ring,
                                         const std::string& path) {
    auto f = io::schwartz_from_json(ring, io::read_json_file(path));
    if (!(f.field == cfg.field))
        throw InputError("function file's field differs from the configuration");
    return f;
}

int run_fourier(const FourierArgs& a) {
    io::Config cfg = io::config_from_json(io::read_json_file(a.config));
    arith::LambdaRing ring = cfg.ring();
    auto f = read_function(cfg, ring, a.in);
    auto g = schwartz::canonicalize(schwartz::fourier(f, a.inverse));
    emit(a.out, io::dump_json(io::schwartz_to_json(g)));
    return 0;
}

int run_involution_check(const FourierArgs& a) {
    io::Config cfg = io::config_from_json(io::read_json_file(a.config));
    arith::LambdaRing ring = cfg.ring();
    auto f = read_function(cfg, ring, a.in);
    auto back = schwartz::fourier(schwartz::fourier(f), true);
    bool identity = schwartz::equal(back, f);
    json report{{"schema", "padicft/report/1"},
                {"check", "involution"},
                {"identity", identity}};
    emit(a.out, io::dump_json(report));
    return identity ? 0 : 2;
}

int run_convolve(const ConvolveArgs& a) {
    io::Config cfg = io::config_from_json(io::read_json_file(a.config));
    arith::LambdaRing ring = cfg.ring();
    auto f = read_function(cfg, ring, a.in);
    auto g = read_function(cfg, ring, a.in2);
    auto c = schwartz::canonicalize(schwartz::convolve(f, g));
    emit(a.out, io::dump_json(io::schwartz_to_json(c)));
    return 0;
}

int run_swan(const SwanArgs& a) {
    std::vector<io::SwanRow> rows;
    if (!a.grid.empty()) {
        json j = io::read_json_file(a.grid);
        if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("sl"))
            throw InputError("grid file must contain keys {q, n, sl}");
        for (const auto& q : j["q"])
            for (const auto& n : j["n"])
                for (const auto& sl : j["sl"])
                    rows.push_back(io::swan_row(q.get<std::int64_t>(),
                                                n.get<std::int64_t>(),
                                                io::rational_from_json(sl)));
    } else {
        if (a.q == 0 || a.n == 0 || a.sl.empty())
            throw InputError("swan needs either --grid or all of --q, --n, --sl");
        rows.push_back(io::swan_row(a.q, a.n, Rational::parse(a.sl)));
    }
    emit(a.out, io::swan_table_csv(rows));
    return 0;
}

int run_gos(const GosArgs& a) {
    using namespace ramify;
    Rational alpha, beta;
    json j{{"schema", "padicft/gos/1"}, {"profile", a.profile}};
    if (a.profile == "lpsi") {
        // trivial on both sides near r -> 0; one gamma_K at the outer boundary
        alpha = boundary_slopes(SheafKind::Lpsi, BoundarySide::Inner, Regime::RZero)
                    .sharp;
        beta = boundary_slopes(SheafKind::Lpsi, BoundarySide::Outer, Regime::ROne)
                   .sharp;
    } else if (a.profile == "jltilde") {
        Rational sl = Rational::parse(a.sl);
        alpha = boundary_slopes(SheafKind::Ltilde, BoundarySide::Inner, Regime::RZero,
                                sl)
                    .sharp;
        beta = boundary_slopes(SheafKind::Ltilde, BoundarySide::Outer, Regime::ROne,
                               sl)
                   .sharp;
        j["sl"] = io::rational_to_json(sl);
    } else {
        throw InputError("profile must be \"lpsi\" or \"jltilde\"");
    }
    j["alpha"] = io::rational_to_json(alpha);
    j["beta"] = io::rational_to_json(beta);
    j["chi"] = io::rational_to_json(gos_chi(alpha, beta));
    emit(a.out, io::dump_json(j));
    return 0;
}

int run_present(const PathArgs& a) {
    auto F = io::coherent_from_json(io::read_json_file(a.in));
    auto nn = ffcalc::presentation_nonneg(F);
    auto pos = ffcalc::presentation_positive(F);
    json ambient = io::coherent_to_json(pos.ambient);
    ambient.erase("schema");
    json j{{"schema", "padicft/presentations/1"},
           {"nonneg", json{{"left", nn.left}, {"middle", nn.middle}}},
           {"positive", json{{"r", pos.r},
                             {"d_prime", pos.d_prime},
                             {"ambient", std::move(ambient)}}}};
    emit(a.out, io::dump_json(j));
    return 0;
}

int run_solve_frob(const PathArgs& a) {
    auto A = io::twisted_from_json(io::read_json_file(a.in));
    try {
        auto b = frobsolve::solve_F_minus_one(A);
        emit(a.out, io::dump_json(io::twisted_to_json(b)));
        return 0;
    } catch (const frobsolve::NotSolvableError& e) {
        json payload{{"schema", "padicft/diagnostic/1"},
                     {"error", e.code},
                     {"message", e.what()},
                     {"coker_class", io::series_display(e.cls)},
                     {"coker_terms", io::series_terms_to_json(e.cls.terms)}};
        emit(a.out, io::dump_json(payload));
        std::cerr << e.what() << "\n";
        return 2;
    }
}

int run_dualize(const PathArgs& a) {
    auto B = io::bc_from_json(io::read_json_file(a.in));
    emit(a.out, io::dump_json(io::bc_to_json(ffcalc::bc_dualize(B))));
    return 0;
}

int run_exttable(const std::string& out) {
    using ffcalc::ExtGenerator;
    const ExtGenerator gens[2] = {ExtGenerator::UnitE, ExtGenerator::SkyscraperOSharp};
    json entries = json::array();
    for (ExtGenerator x : gens)
        for (ExtGenerator y : gens)
            entries.push_back(
                json{{"x", io::ext_generator_name(x)},
                     {"y", io::ext_generator_name(y)},
                     {"terms", io::ext_entry_to_json(ffcalc::ext_table(x, y))},
                     {"serre_twist_offset", ffcalc::serre_twist_offset(x, y)}});
    json j{{"schema", "padicft/ext-table/1"}, {"entries", std::move(entries)}};
    emit(out, io::dump_json(j));
    return 0;
}

int run_polygon(const PathArgs& a) {
    auto F = io::coherent_from_json(io::read_json_file(a.in));
    emit(a.out, io::polygon_csv(ffcalc::hn_polygon(F)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fourier transforms and slope calculus over local fields"};
    app.require_subcommand(1);

    FourierArgs fa;
    auto* fourier_cmd =
        app.add_subcommand("fourier", "Fourier-transform a Schwartz function");
    fourier_cmd->add_option("--config", fa.config, "field/coefficient configuration")
        ->required();
    fourier_cmd->add_option("--in", fa.in, "input function (JSON)")->required();
    fourier_cmd->add_option("--out", fa.out, "output path (stdout if omitted)");
    fourier_cmd->add_flag("--inverse", fa.inverse, "use the inverted character");

    FourierArgs ia;
    auto* invol_cmd = app.add_subcommand(
        "involution-check", "verify transform-then-inverse returns the input");
    invol_cmd->add_option("--config", ia.config)->required();
    invol_cmd->add_option("--in", ia.in)->required();
    invol_cmd->add_option("--out", ia.out, "report path (stdout if omitted)");

    ConvolveArgs ca;
    auto* conv_cmd = app.add_subcommand("convolve", "convolve two Schwartz functions");
    conv_cmd->add_option("--config", ca.config)->required();
    conv_cmd->add_option("--in", ca.in)->required();
    conv_cmd->add_option("--in2", ca.in2)->required();
    conv_cmd->add_option("--out", ca.out);

    SwanArgs sa;
    auto* swan_cmd = app.add_subcommand(
        "swan", "conductor/rank table for unramified-twist transfers");
    swan_cmd->add_option("--grid", sa.grid, "grid file {q: [...], n: [...], sl: [...]}");
    swan_cmd->add_option("--q", sa.q, "residue size");
    swan_cmd->add_option("--n", sa.n, "input dimension");
    swan_cmd->add_option("--sl", sa.sl, "minimal-twist slope (rational)");
    swan_cmd->add_option("--out", sa.out);

    GosArgs ga;
    auto* gos_cmd = app.add_subcommand(
        "gos", "boundary Euler characteristic of a named conductor profile");
    gos_cmd->add_option("--profile", ga.profile, "lpsi or jltilde")->required();
    gos_cmd->add_option("--sl", ga.sl, "slope for the jltilde profile (rational)");
    gos_cmd->add_option("--out", ga.out);

    PathArgs pa;
    auto* present_cmd =
        app.add_subcommand("present", "both presentation records of a coherent datum");
    present_cmd->add_option("--in", pa.in)->required();
    present_cmd->add_option("--out", pa.out);

    PathArgs fra;
    auto* frob_cmd =
        app.add_subcommand("solve-frob", "solve (F - 1) b = a or report the cokernel class");
    frob_cmd->add_option("--in", fra.in)->required();
    frob_cmd->add_option("--out", fra.out);

    PathArgs da;
    auto* dual_cmd = app.add_subcommand("dualize", "dualize a Banach-Colmez datum");
    dual_cmd->add_option("--in", da.in)->required();
    dual_cmd->add_option("--out", da.out);

    std::string ext_out;
    auto* ext_cmd = app.add_subcommand("exttable", "the four-entry Ext lookup table");
    ext_cmd->add_option("--out", ext_out);

    PathArgs poa;
    auto* poly_cmd =
        app.add_subcommand("polygon", "Harder-Narasimhan polygon vertices as CSV");
    poly_cmd->add_option("--in", poa.in)->required();
    poly_cmd->add_option("--out", poa.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // malformed command line counts as bad input
    }

    std::string out_path; // where a diagnostic payload would go
    try {
        if (fourier_cmd->parsed()) { out_path = fa.out; return run_fourier(fa); }
        if (invol_cmd->parsed()) { out_path = ia.out; return run_involution_check(ia); }
        if (conv_cmd->parsed()) { out_path = ca.out; return run_convolve(ca); }
        if (swan_cmd->parsed()) { out_path = sa.out; return run_swan(sa); }
        if (gos_cmd->parsed()) { out_path = ga.out; return run_gos(ga); }
        if (present_cmd->parsed()) { out_path = pa.out; return run_present(pa); }
        if (frob_cmd->parsed()) { out_path = fra.out; return run_solve_frob(fra); }
        if (dual_cmd->parsed()) { out_path = da.out; return run_dualize(da); }
        if (ext_cmd->parsed()) { out_path = ext_out; return run_exttable(ext_out); }
        if (poly_cmd->parsed()) { out_path = poa.out; return run_polygon(poa); }
        throw InputError("no subcommand selected");
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ContractError& e) {
        json payload{{"schema", "padicft/diagnostic/1"},
                     {"error", e.code},
                     {"message", e.what()}};
        emit(out_path, io::dump_json(payload));
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    }
}
