// Command-line front end: per-state measure reports, uncertainty-relation
// audit grids, and asymptotic-convergence tables for hydrogenic Rydberg
// states, in CSV or JSON. Identical invocations produce byte-identical
// output; audit findings (failed relations) are results, not tool errors.

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rydinfo/report.hpp"
#include "rydinfo/states.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

rydinfo::report::Meta make_meta(double tol) {
    // Build stamp, not wall clock: reruns must match byte for byte.
    return {kToolVersion, tol, std::string(__DATE__) + " " + __TIME__};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
    if (!file.flush()) throw std::runtime_error("write failed: " + out_path);
}

int emit_error(const char* type, const std::string& message, int code) {
    nlohmann::json err = {{"error", {{"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return code;
}

std::pair<int, int> parse_n_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--n-range expects A:B, got " + text);
    std::size_t lo_used = 0, hi_used = 0;
    const std::string lo_s = text.substr(0, colon), hi_s = text.substr(colon + 1);
    int lo = 0, hi = 0;
    try {
        lo = std::stoi(lo_s, &lo_used);
        hi = std::stoi(hi_s, &hi_used);
    } catch (const std::exception&) {
        throw std::invalid_argument("--n-range expects A:B, got " + text);
    }
    if (lo_used != lo_s.size() || hi_used != hi_s.size() || lo < 1 || hi < lo)
        throw std::invalid_argument("--n-range expects integers 1 <= A <= B, got " + text);
    return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
    using namespace rydinfo;

    CLI::App app{"information measures of hydrogenic Rydberg states"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    // ---- compute ----------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "measure report for one state");
    int c_n = 1, c_l = 0, c_m = 0;
    double c_Z = 1.0, c_tol = 1e-9;
    std::string c_measures, c_space = "both", c_format = "csv", c_out;
    compute->add_option("--n", c_n, "principal quantum number")->required();
    compute->add_option("--l", c_l, "orbital quantum number");
    compute->add_option("--m", c_m, "magnetic quantum number");
    compute->add_option("--Z", c_Z, "nuclear charge");
    compute
        ->add_option("--measures", c_measures,
                     "comma list: shannon,fisher,cramer_rao,fisher_shannon,lmc,"
                     "disequilibrium,log_moment,r_moment:<alpha>")
        ->required();
    compute->add_option("--space", c_space, "density to report on")
        ->check(CLI::IsMember({"position", "momentum", "both"}));
    compute->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--tol", c_tol, "quadrature relative tolerance");
    compute->add_option("--out", c_out, "output file (default stdout)");

    // ---- audit ------------------------------------------------------------
    auto* audit = app.add_subcommand("audit", "uncertainty-relation audit over a state grid");
    std::string a_range, a_states = "all-lm", a_relations, a_format = "csv", a_out;
    std::vector<double> a_Zs = {1.0};
    double a_tol = 1e-8;
    audit->add_option("--n-range", a_range, "principal quantum numbers A:B")->required();
    audit->add_option("--states", a_states, "grid policy")
        ->check(CLI::IsMember({"all-lm", "circular", "quasicircular"}));
    audit->add_option("--Z", a_Zs, "nuclear charges")->delimiter(',');
    audit->add_option("--relations", a_relations,
                      "comma list: entropic-sum,fisher-product,heisenberg,log-sum,"
                      "log-sum-central,formula-vs-quadrature (default all)");
    audit->add_option("--tol", a_tol, "audit tolerance");
    audit->add_option("--format", a_format)->check(CLI::IsMember({"csv", "json"}));
    audit->add_option("--out", a_out, "output file (default stdout)");

    // ---- converge ---------------------------------------------------------
    auto* converge = app.add_subcommand("converge", "exact-vs-asymptotic convergence table");
    std::string v_quantity, v_format = "csv", v_out;
    std::vector<int> v_ns;
    int v_l = 0, v_m = 0;
    double v_Z = 1.0, v_tol = 1e-9;
    std::optional<double> v_alpha;
    converge
        ->add_option("--quantity", v_quantity,
                     "e.g. shannon-position, fisher-momentum, r-moment, "
                     "lmc-circular-position, shannon-quasicircular-momentum")
        ->required();
    converge->add_option("--n", v_ns, "principal quantum numbers")->required()->delimiter(',');
    converge->add_option("--l", v_l, "orbital quantum number (fixed-(l,m) quantities)");
    converge->add_option("--m", v_m, "magnetic quantum number (fixed-(l,m) quantities)");
    converge->add_option("--Z", v_Z, "nuclear charge");
    converge->add_option("--alpha", v_alpha, "moment exponent (r-moment/p-moment)");
    converge->add_option("--tol", v_tol, "quadrature relative tolerance");
    converge->add_option("--format", v_format)->check(CLI::IsMember({"csv", "json"}));
    converge->add_option("--out", v_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        const int code = e.get_exit_code();
        return emit_error("usage", e.what(), code == 0 ? 2 : code);
    }

    if (const char* cap = std::getenv("RYDINFO_MAX_N"))
        std::cerr << "warning: RYDINFO_MAX_N=" << cap
                  << " overrides the n cap; quadrature above the default cap is"
                     " outside the validated accuracy envelope\n";

    try {
        if (compute->parsed()) {
            const auto state = states::make_state(c_n, c_l, c_m, c_Z);
            const auto requests = report::parse_measures(c_measures);
            std::vector<report::MeasureReport> reports;
            if (c_space != "momentum")
                reports.push_back(report::compute_report(state, requests, Space::Position, c_tol));
            if (c_space != "position")
                reports.push_back(report::compute_report(state, requests, Space::Momentum, c_tol));
            emit(c_format == "json" ? report::to_json(reports, make_meta(c_tol))
                                    : report::to_csv(reports),
                 c_out);
        } else if (audit->parsed()) {
            report::AuditGrid grid;
            std::tie(grid.n_lo, grid.n_hi) = parse_n_range(a_range);
            grid.policy = report::parse_policy(a_states);
            grid.Zs = a_Zs;
            if (!a_relations.empty())
                for (auto& name : report::detail::split(a_relations, ','))
                    grid.relations.push_back(std::move(name));
            grid.tol = a_tol;
            const auto rows = report::run_audits(grid);
            emit(a_format == "json" ? report::to_json(rows, make_meta(a_tol))
                                    : report::to_csv(rows),
                 a_out);
        } else {
            report::ConvergeRequest req;
            req.quantity = v_quantity;
            req.l = v_l;
            req.m = v_m;
            req.Z = v_Z;
            req.alpha = v_alpha;
            req.ns = v_ns;
            req.rel_tol = v_tol;
            const auto table = report::converge(req);
            emit(v_format == "json" ? report::to_json(table, make_meta(v_tol))
                                    : report::to_csv(table),
                 v_out);
        }
    } catch (const std::invalid_argument& e) {
        return emit_error("invalid-request", e.what(), 2);
    } catch (const std::domain_error& e) {
        return emit_error("domain", e.what(), 2);
    } catch (const std::exception& e) {
        return emit_error("runtime", e.what(), 1);
    }
    return 0;
}
