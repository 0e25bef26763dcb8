#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/braid.hpp"
#include "toric/census.hpp"
#include "toric/enumerate.hpp"
#include "toric/error.hpp"
#include "toric/invariants.hpp"
#include "toric/mosaic.hpp"
#include "toric/render.hpp"
#include "toric/trace.hpp"

namespace toric {
namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;

// Writes to --out when given, else to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            os_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw DomainError("cannot open " + path);
        os_ = file_.get();
    }
    std::ostream& operator*() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

std::string identification_text(const Identification& id) {
    if (id.status == IdStatus::unknown) return "unknown " + id.homfly;
    if (id.status == IdStatus::link) return "link " + std::to_string(id.components);
    return id.label();
}

struct Args {
    std::string code;
    std::vector<int> tiles;
    bool classical = false;
    bool simplify = false;
    std::string format = "ascii";
    int cell_size = 40;
    bool no_grid = false;
    bool hidden = false;
    std::string out;
    int p = 0, q = 0, n = 0;
    std::optional<int> h, v, target;
    bool symmetry = false;
    bool all = false;
    std::string prefix;
    int jobs = default_jobs();
    std::string file;
    std::string pd_file;
    std::string cache;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toric knot mosaics", "toric"};
    app.require_subcommand(1);
    Args a;

    auto* encode_cmd = app.add_subcommand("encode", "Tile kinds (row-major) to a base-11 code");
    encode_cmd->add_option("tiles", a.tiles, "tile kinds 0..10")->required()->check(CLI::Range(0, 10));

    auto* decode_cmd = app.add_subcommand("decode", "Print the tile grid of a code");
    decode_cmd->add_option("code", a.code)->required();

    auto* validate_cmd = app.add_subcommand("validate", "Check suitable connectedness");
    validate_cmd->add_option("code", a.code)->required();
    validate_cmd->add_flag("--classical", a.classical, "classical boundary rule instead of the torus");

    auto* render_cmd = app.add_subcommand("render", "Draw a mosaic as text or SVG");
    render_cmd->add_option("code", a.code)->required();
    render_cmd->add_option("--format", a.format)->check(CLI::IsMember({"ascii", "svg"}));
    render_cmd->add_option("--cell-size", a.cell_size)->check(CLI::PositiveNumber);
    render_cmd->add_flag("--no-grid", a.no_grid);
    render_cmd->add_flag("--hidden", a.hidden, "draw closure arcs and hidden crossings");
    render_cmd->add_option("--out", a.out);

    auto* trace_cmd = app.add_subcommand("trace", "PD code of the traced link diagram");
    trace_cmd->add_option("code", a.code)->required();
    trace_cmd->add_flag("--simplify", a.simplify, "apply Reidemeister I/II reductions");

    auto* identify_cmd = app.add_subcommand("identify", "Name the knot a mosaic represents");
    identify_cmd->add_option("code", a.code)->required();

    auto* solve_cmd = app.add_subcommand("solve-hv", "One-braid parameters for the (p,q)-torus knot");
    solve_cmd->add_option("--p", a.p)->required();
    solve_cmd->add_option("--q", a.q)->required();

    auto* gen_cmd = app.add_subcommand("gen", "Construct torus-knot mosaics");
    gen_cmd->require_subcommand(1);
    auto* one_cmd = gen_cmd->add_subcommand("one-braid", "One-braid construction");
    one_cmd->set_help_flag("--help", "Print this help message and exit");
    one_cmd->add_option("--p", a.p)->required();
    one_cmd->add_option("--q", a.q)->required();
    one_cmd->add_option("--h", a.h, "override the solver's h");
    one_cmd->add_option("--v", a.v, "override the solver's v");
    auto* full_cmd = gen_cmd->add_subcommand("full-braid", "Full-braid construction");
    full_cmd->add_option("--n", a.n, "braid count, n >= 3")->required();
    full_cmd->add_option("--q", a.target, "remove crossings down to this odd q");
    auto* naive_cmd = gen_cmd->add_subcommand("naive", "q x q mosaic of p rows of T7 over T6");
    naive_cmd->add_option("--p", a.p)->required();
    naive_cmd->add_option("--q", a.q)->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "All suitably connected toric n-mosaics");
    auto* count_cmd = app.add_subcommand("count", "Number of suitably connected toric n-mosaics");
    for (auto* cmd : {enum_cmd, count_cmd}) {
        cmd->add_option("--n", a.n)->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--symmetry", a.symmetry, "one code per translation orbit");
        cmd->add_option("--prefix", a.prefix, "forced leading tiles of the first row");
        cmd->add_option("--jobs", a.jobs)->check(CLI::PositiveNumber);
    }
    enum_cmd->add_option("--out", a.out);

    auto* census_cmd = app.add_subcommand("census", "Identify every knot on toric n-mosaics");
    census_cmd->add_option("--n", a.n)->required()->check(CLI::PositiveNumber);
    census_cmd->add_option("--jobs", a.jobs)->check(CLI::PositiveNumber);
    census_cmd->add_flag("--all", a.all, "one row per mosaic instead of per identification");
    census_cmd->add_option("--out", a.out);

    auto* verify_cmd = app.add_subcommand("verify-appendix", "Check the bundled census table");
    verify_cmd->add_option("--file", a.file, "appendix TSV (default: bundled)");
    verify_cmd->add_option("--jobs", a.jobs)->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table", "Invariant table maintenance");
    table_cmd->require_subcommand(1);
    auto* build_cmd = table_cmd->add_subcommand("build", "Compute and cache the invariant table");
    build_cmd->add_option("--pd", a.pd_file, "PD asset (default: bundled)");
    build_cmd->add_option("--cache", a.cache, "cache file (default: $TORIC_TABLE_CACHE or temp dir)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*encode_cmd) {
            int n = 0;
            while (n * n < int(a.tiles.size())) ++n;
            std::vector<Tile> cells;
            for (int t : a.tiles) cells.emplace_back(t);
            if (n * n != int(a.tiles.size())) throw ParseError("tile count is not a perfect square");
            out << encode(Mosaic(n, cells)) << '\n';
        } else if (*decode_cmd) {
            const Mosaic m = decode(a.code);
            for (int r = 0; r < m.size(); ++r) {
                for (int c = 0; c < m.size(); ++c) out << (c ? " " : "") << m.at(r, c).kind();
                out << '\n';
            }
        } else if (*validate_cmd) {
            const bool ok = is_suitably_connected(decode(a.code), a.classical ? Topology::classical : Topology::toric);
            out << (ok ? "suitably connected" : "not suitably connected") << '\n';
            return ok ? 0 : exit_domain;
        } else if (*render_cmd) {
            RenderOptions ro;
            ro.format = a.format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
            ro.cell_size = a.cell_size;
            ro.show_grid = !a.no_grid;
            ro.highlight_hidden = a.hidden;
            Sink sink(a.out, out);
            *sink << render(decode(a.code), ro);
        } else if (*trace_cmd) {
            const Mosaic m = decode(a.code);
            if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
            LinkDiagram d = trace(m);
            if (a.simplify) d = simplify(d);
            out << pd_code(d) << '\n';
        } else if (*identify_cmd) {
            const Mosaic m = decode(a.code);
            if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
            out << identification_text(identify(trace(m), bundled_table())) << '\n';
        } else if (*solve_cmd) {
            validate_torus_params(a.p, a.q);
            const auto plan = solve_hv(a.p, a.q);
            if (!plan) {
                out << "infeasible\n";
                return exit_domain;
            }
            out << "h=" << plan->h << " v=" << plan->v << " n=" << plan->n() << '\n';
        } else if (*one_cmd) {
            validate_torus_params(a.p, a.q);
            std::optional<BraidPlan> plan;
            if (a.h || a.v) {
                if (!a.h || !a.v) throw CLI::ValidationError("--h and --v must be given together");
                plan = BraidPlan{a.p, a.q, *a.h, *a.v};
            } else {
                plan = solve_hv(a.p, a.q);
                if (!plan) throw DomainError("no feasible (h, v) for this (p, q)");
            }
            out << encode(one_braid(*plan)) << '\n';
        } else if (*full_cmd) {
            const FullBraid fb = full_braid(a.n);
            const Mosaic m = a.target ? remove_crossings(fb.mosaic, fb.q_prime, *a.target) : fb.mosaic;
            out << encode(m) << '\n';
        } else if (*naive_cmd) {
            out << encode(naive_mosaic(a.p, a.q)) << '\n';
        } else if (*enum_cmd) {
            const EnumOptions eo{a.n, a.symmetry, a.prefix};
            Sink sink(a.out, out);
            if (a.jobs == 1) {
                enumerate(eo, [&](std::string_view code) { *sink << code << '\n'; });
            } else {
                for (const auto& code : enumerate_codes(eo, a.jobs)) *sink << code << '\n';
            }
        } else if (*count_cmd) {
            out << count(EnumOptions{a.n, a.symmetry, a.prefix}, a.jobs) << '\n';
        } else if (*census_cmd) {
            CensusOptions co;
            co.jobs = a.jobs;
            co.all_rows = a.all;
            const auto report = run_census(a.n, bundled_table(), co);
            Sink sink(a.out, out);
            *sink << census_csv(report);
            err << "mosaics " << report.mosaics << ", knots " << report.knots << ", links " << report.links
                << ", unknown " << report.unknown << ", ambiguous " << report.ambiguous << ", budget "
                << report.budget_failures << '\n';
            err << "knots found:";
            for (const auto& name : report.names) err << ' ' << name;
            err << '\n';
            for (const auto& d : census_discrepancies(report, read_appendix(default_appendix_path())))
                err << "discrepancy: " << d << '\n';
        } else if (*verify_cmd) {
            const auto rows = read_appendix(a.file.empty() ? default_appendix_path() : std::filesystem::path(a.file));
            std::map<std::string, int> tally;
            for (const auto& r : verify_appendix(rows, bundled_table(), a.jobs)) {
                out << r.row.name << '\t' << r.row.bound << '\t' << r.row.code << '\t' << to_string(r.verdict);
                if (!r.detail.empty()) out << '\t' << r.detail;
                out << '\n';
                ++tally[to_string(r.verdict)];
            }
            for (const auto& [verdict, k] : tally) err << verdict << ' ' << k << '\n';
        } else if (*build_cmd) {
            const auto pd = a.pd_file.empty() ? data_dir() / "knots_pd.tsv" : std::filesystem::path(a.pd_file);
            const auto cache = a.cache.empty() ? default_cache_path() : std::filesystem::path(a.cache);
            const auto table = build_table(pd, cache);
            out << table.size() << " records cached in " << cache.string() << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return 0;
}

}  // namespace toric
