#pragma once

// Batch reporting layer behind the command-line tool: per-state measure
// reports, uncertainty-relation audit grids, and asymptotic-convergence
// tables, serialized to CSV and JSON. Everything in here is deterministic:
// the same request produces byte-identical output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rydinfo/complexity.hpp"
#include "rydinfo/core.hpp"
#include "rydinfo/entropy.hpp"
#include "rydinfo/fisher.hpp"
#include "rydinfo/moments.hpp"
#include "rydinfo/special_states.hpp"
#include "rydinfo/specfun.hpp"
#include "rydinfo/states.hpp"

namespace rydinfo::report {

namespace detail {

// 17 significant digits: enough for a lossless double round-trip.
inline std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<std::string> split(const std::string& list, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto next = list.find(sep, pos);
        const auto end = next == std::string::npos ? list.size() : next;
        std::string item = list.substr(pos, end - pos);
        const auto a = item.find_first_not_of(" \t");
        const auto b = item.find_last_not_of(" \t");
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Measure reports

// One requested measure. r_moment carries the exponent parsed from the
// "r_moment:<alpha>" token and means the radial moment of the density the
// row lives in: <r^alpha> in position rows, <p^alpha> in momentum rows.
struct MeasureRequest {
    std::string token;
    std::string name;
    double alpha = 0.0;
};

inline MeasureRequest parse_measure(const std::string& token) {
    MeasureRequest req;
    req.token = token;
    const auto colon = token.find(':');
    req.name = token.substr(0, colon);
    static const std::set<std::string> plain = {
        "shannon", "fisher", "cramer_rao", "fisher_shannon",
        "lmc",     "disequilibrium", "log_moment"};
    if (req.name == "r_moment") {
        if (colon == std::string::npos)
            throw std::invalid_argument("measure r_moment requires an exponent, e.g. r_moment:2");
        const std::string arg = token.substr(colon + 1);
        std::size_t used = 0;
        try {
            req.alpha = std::stod(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || arg.empty())
            throw std::invalid_argument("bad exponent in measure token: " + token);
        return req;
    }
    if (colon != std::string::npos || !plain.count(req.name))
        throw std::invalid_argument("unknown measure: " + token);
    return req;
}

// Comma-separated request list; duplicates collapse to the first occurrence.
inline std::vector<MeasureRequest> parse_measures(const std::string& list) {
    std::vector<MeasureRequest> out;
    std::set<std::string> seen;
    for (const auto& token : detail::split(list, ','))
        if (seen.insert(token).second) out.push_back(parse_measure(token));
    if (out.empty()) throw std::invalid_argument("no measures requested");
    return out;
}

// error nonempty marks a failed entry (divergent moment window, overflow);
// the entry still appears in the report, value NaN. No silent omissions.
struct MeasureEntry {
    std::string measure;
    double value = std::numeric_limits<double>::quiet_NaN();
    double abs_err = 0.0;
    Method method = Method::Exact;
    std::string error;
};

struct MeasureReport {
    states::QuantumState state;
    Space space = Space::Position;
    std::vector<MeasureEntry> entries;
};

inline MeasureEntry compute_entry(const states::QuantumState& s, const MeasureRequest& req,
                                  Space space, double rel_tol) {
    MeasureEntry e;
    e.measure = req.token;
    try {
        if (req.name == "r_moment") {
            const auto q = space == Space::Position ? moments::r_moment(s, req.alpha, rel_tol)
                                                    : moments::p_moment(s, req.alpha, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else if (req.name == "log_moment") {
            const auto q = space == Space::Position ? moments::log_r_moment(s, rel_tol)
                                                    : moments::log_p_moment(s, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else if (req.name == "shannon") {
            const auto q = entropy::shannon(s, space, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else if (req.name == "fisher") {
            e.value = space == Space::Position ? fisher::fisher_position(s)
                                               : fisher::fisher_momentum(s);
            e.method = Method::Exact;
        } else if (req.name == "cramer_rao") {
            e.value = complexity::cramer_rao(s, space);
            e.method = Method::Exact;
        } else if (req.name == "fisher_shannon") {
            const auto q = complexity::fisher_shannon(s, space, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else if (req.name == "lmc") {
            const auto q = complexity::lmc(s, space, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else if (req.name == "disequilibrium") {
            // The position kernel has a closed form up to moderate n; the
            // log-gamma guard inside it trips at large n, where quadrature
            // takes over.
            if (space == Space::Position) {
                try {
                    e.value = complexity::disequilibrium_exact(s);
                    e.method = Method::Exact;
                    return e;
                } catch (const std::overflow_error&) {
                }
            }
            const auto q = complexity::disequilibrium(s, space, rel_tol);
            e.value = q.value;
            e.abs_err = q.abs_err;
            e.method = Method::Quadrature;
        } else {
            throw std::invalid_argument("unknown measure: " + req.token);
        }
    } catch (const std::exception& ex) {
        e.value = std::numeric_limits<double>::quiet_NaN();
        e.abs_err = 0.0;
        e.error = ex.what();
    }
    return e;
}

inline MeasureReport compute_report(const states::QuantumState& s,
                                    const std::vector<MeasureRequest>& requests, Space space,
                                    double rel_tol) {
    MeasureReport rep;
    rep.state = s;
    rep.space = space;
    rep.entries.reserve(requests.size());
    for (const auto& req : requests) rep.entries.push_back(compute_entry(s, req, space, rel_tol));
    return rep;
}

// ---------------------------------------------------------------------------
// Audit grids

// Relation vocabulary of the audit command. "formula-vs-quadrature" enables
// every closed-form-vs-quadrature check applicable to a state, including the
// circular/quasicircular printed-entropy audits when the state is one.
inline const std::vector<std::string>& audit_relations() {
    static const std::vector<std::string> names = {
        "entropic-sum", "fisher-product",  "heisenberg",
        "log-sum",      "log-sum-central", "formula-vs-quadrature"};
    return names;
}

inline std::vector<AuditRecord> state_audits(const states::QuantumState& s,
                                             const std::set<std::string>& enabled, double tol) {
    std::vector<AuditRecord> out;
    const auto want = [&](const char* name) { return enabled.empty() || enabled.count(name); };

    if (want("entropic-sum")) {
        const auto rec = entropy::entropic_sum_audit(s);
        out.push_back(make_bound_audit("entropic-sum", rec.left, rec.bound_or_reference, tol));
    }
    if (want("fisher-product")) {
        const double product = fisher::fisher_position(s) * fisher::fisher_momentum(s);
        out.push_back(make_bound_audit("fisher-product", product, 36.0, tol));
    }
    if (want("heisenberg")) {
        // <p^2> is the exact level energy identity; <r^2> by quadrature.
        const double p2 = s.Z * s.Z / (double(s.n) * s.n);
        const double left = moments::r_moment(s, 2.0).value * p2;
        out.push_back(make_bound_audit("heisenberg", left, 9.0 / 4.0, tol));
    }
    if (want("log-sum") || want("log-sum-central")) {
        const double lsum = moments::log_r_moment(s).value + moments::log_p_moment(s).value;
        if (want("log-sum")) {
            const double bound = specfun::digamma(0.75) + std::numbers::ln2;
            out.push_back(make_bound_audit("log-sum", lsum, bound, tol));
        }
        if (want("log-sum-central")) {
            const double bound = specfun::digamma((2.0 * s.l + 3.0) / 4.0) + std::numbers::ln2;
            out.push_back(make_bound_audit("log-sum-central", lsum, bound, tol));
        }
    }
    if (want("formula-vs-quadrature")) {
        out.push_back(fisher::fisher_relation_check(s, Space::Position, tol));
        out.push_back(fisher::fisher_relation_check(s, Space::Momentum, tol));
        const int am = s.m < 0 ? -s.m : s.m;
        if (s.l == s.n - 1 && am == s.n - 1) {
            out.push_back(special::circ_shannon_audit(s.n, s.Z, Space::Position, tol));
            out.push_back(special::circ_shannon_audit(s.n, s.Z, Space::Momentum, tol));
            out.push_back(special::circ_fisher_shannon_audit(s.n, s.Z, Space::Position, tol));
            out.push_back(special::circ_fisher_shannon_audit(s.n, s.Z, Space::Momentum, tol));
        }
        if (s.n >= 2 && s.l == s.n - 2 && am == s.n - 2) {
            out.push_back(special::quasi_shannon_position_audit(s.n, s.Z, tol));
            out.push_back(special::quasi_shannon_momentum_audit(s.n, s.Z, tol));
        }
    }
    return out;
}

enum class StatePolicy { AllLM, Circular, Quasicircular };

inline StatePolicy parse_policy(const std::string& name) {
    if (name == "all-lm") return StatePolicy::AllLM;
    if (name == "circular") return StatePolicy::Circular;
    if (name == "quasicircular") return StatePolicy::Quasicircular;
    throw std::invalid_argument("unknown state policy: " + name);
}

struct AuditGrid {
    int n_lo = 1;
    int n_hi = 1;
    StatePolicy policy = StatePolicy::AllLM;
    std::vector<double> Zs = {1.0};
    std::vector<std::string> relations;  // empty selects every relation
    double tol = 1e-8;
};

struct AuditRow {
    states::QuantumState state;
    AuditRecord record;
};

// One row per (state, relation), rows ordered by (Z, n, l, m, emission
// order). m runs over 0..l only: every measure here depends on |m|.
inline std::vector<AuditRow> run_audits(const AuditGrid& grid) {
    if (grid.n_lo < 1 || grid.n_hi < grid.n_lo)
        throw std::invalid_argument("run_audits: need 1 <= n_lo <= n_hi");
    if (grid.Zs.empty()) throw std::invalid_argument("run_audits: need at least one Z");
    std::set<std::string> enabled;
    for (const auto& name : grid.relations) {
        const auto& known = audit_relations();
        if (std::find(known.begin(), known.end(), name) == known.end())
            throw std::invalid_argument("unknown audit relation: " + name);
        enabled.insert(name);
    }

    std::vector<states::QuantumState> grid_states;
    for (const double Z : grid.Zs)
        for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
            if (grid.policy == StatePolicy::Circular) {
                grid_states.push_back(states::make_state(n, n - 1, n - 1, Z));
            } else if (grid.policy == StatePolicy::Quasicircular) {
                if (n >= 2) grid_states.push_back(states::make_state(n, n - 2, n - 2, Z));
            } else {
                for (int l = 0; l < n; ++l)
                    for (int m = 0; m <= l; ++m) grid_states.push_back(states::make_state(n, l, m, Z));
            }
        }

    std::vector<AuditRow> rows;
    for (const auto& s : grid_states)
        for (auto& rec : state_audits(s, enabled, grid.tol)) rows.push_back({s, std::move(rec)});
    return rows;
}

// ---------------------------------------------------------------------------
// Convergence tables

struct ConvergenceRow {
    int n = 0;
    double exact = 0.0;
    double exact_abs_err = 0.0;
    Method exact_method = Method::Exact;
    double asymptotic = 0.0;
    double difference = 0.0;
    double scaled = 0.0;  // difference * n^scale_power
};

struct ConvergenceTable {
    std::string quantity;
    int l = 0;
    int m = 0;
    double Z = 1.0;
    std::optional<double> alpha;
    double scale_power = 0.0;
    bool monotone = false;  // |difference| non-increasing down the table
    std::vector<ConvergenceRow> rows;
};

struct ConvergeRequest {
    std::string quantity;
    int l = 0;
    int m = 0;
    double Z = 1.0;
    std::optional<double> alpha;
    std::vector<int> ns;
    double rel_tol = 1e-9;
};

namespace detail {

struct PointValue {
    double value = 0.0;
    double abs_err = 0.0;
    Method method = Method::Exact;
};

inline PointValue from_quad(const quadrature::QuadResult& q) {
    return {q.value, q.abs_err, Method::Quadrature};
}

struct ConvergeRoutes {
    std::function<PointValue(int)> exact;
    std::function<AsymptoticValue(int)> asymptotic;
};

// Registry of convergence studies. The asymptotic route for the LMC entries
// is the constant limit, so the scaled column exposes the printed 1/n
// coefficient (7e/24 circular position and so on) rather than a remainder.
inline ConvergeRoutes converge_routes(const ConvergeRequest& req) {
    const auto ends_with = [](const std::string& s, const std::string& tail) {
        return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
    };
    const std::string& q = req.quantity;
    Space space = Space::Position;
    if (ends_with(q, "-momentum")) space = Space::Momentum;
    else if (!ends_with(q, "-position") && q != "r-moment" && q != "p-moment")
        throw std::invalid_argument("unknown quantity id: " + q);
    const int l = req.l, m = req.m;
    const double Z = req.Z;
    const auto state = [=](int n) { return states::make_state(n, l, m, Z); };
    const double tol = req.rel_tol;

    if (q == "shannon-position" || q == "shannon-momentum")
        return {[=](int n) { return from_quad(entropy::shannon(state(n), space, tol)); },
                [=](int n) { return entropy::shannon_asymptotic(state(n), space); }};
    if (q == "fisher-position" || q == "fisher-momentum")
        return {[=](int n) -> PointValue {
                    const auto s = state(n);
                    const double v = space == Space::Position ? fisher::fisher_position(s)
                                                              : fisher::fisher_momentum(s);
                    return {v, 0.0, Method::Exact};
                },
                [=](int n) { return fisher::fisher_asymptotic(space, n, Z); }};
    if (q == "fisher-shannon-position" || q == "fisher-shannon-momentum")
        return {[=](int n) { return from_quad(complexity::fisher_shannon(state(n), space, tol)); },
                [=](int n) { return complexity::fisher_shannon_asymptotic(space, l, m, n); }};
    if (q == "log-moment-position" || q == "log-moment-momentum")
        return {[=](int n) {
                    const auto s = state(n);
                    return from_quad(space == Space::Position ? moments::log_r_moment(s, tol)
                                                              : moments::log_p_moment(s, tol));
                },
                [=](int n) {
                    const auto target = space == Space::Position
                                            ? moments::LogMomentTarget::Position
                                            : moments::LogMomentTarget::Momentum;
                    return moments::log_moment_asymptotic(Z, n, l, target);
                }};
    if (q == "r-moment" || q == "p-moment") {
        if (!req.alpha) throw std::invalid_argument(q + " requires --alpha");
        const double alpha = *req.alpha;
        if (q == "r-moment")
            return {[=](int n) { return from_quad(moments::r_moment(state(n), alpha, tol)); },
                    [=](int n) { return moments::r_moment_asymptotic(Z, n, l, alpha); }};
        return {[=](int n) { return from_quad(moments::p_moment(state(n), alpha, tol)); },
                [=](int n) { return moments::p_moment_asymptotic(Z, n, alpha); }};
    }
    if (q == "shannon-circular-position" || q == "shannon-circular-momentum")
        return {[=](int n) -> PointValue {
                    return {special::circ_shannon(n, Z, space), 0.0, Method::Exact};
                },
                [=](int n) { return special::circ_shannon_asymptotic(n, Z, space); }};
    if (q == "shannon-quasicircular-position")
        return {[=](int n) { return from_quad(special::quasi_shannon_position(n, Z)); },
                [=](int n) { return special::quasi_shannon_position_asymptotic(n, Z); }};
    if (q == "shannon-quasicircular-momentum")
        return {[=](int n) -> PointValue {
                    return {special::quasi_shannon_momentum(n, Z), 0.0, Method::Exact};
                },
                [=](int n) { return special::quasi_shannon_momentum_asymptotic(n, Z); }};
    if (q == "lmc-circular-position" || q == "lmc-circular-momentum")
        return {[=](int n) -> PointValue {
                    return {special::circ_lmc(n, Z, space), 0.0, Method::Exact};
                },
                [](int) -> AsymptoticValue {
                    return {std::numbers::e / 2.0, ErrorOrder::O_inv_n};
                }};
    if (q == "lmc-quasicircular-position")
        return {[=](int n) -> PointValue {
                    const auto s = special::quasi_shannon_position(n, Z);
                    const double d = special::quasi_disequilibrium(n, Z, Space::Position);
                    const double v = d * std::exp(s.value);
                    return {v, std::abs(v) * s.abs_err, Method::Quadrature};
                },
                [](int) -> AsymptoticValue {
                    return {0.75 * std::exp(specfun::euler_gamma), ErrorOrder::o1};
                }};
    if (q == "lmc-quasicircular-momentum")
        return {[=](int n) -> PointValue {
                    const double v = special::quasi_disequilibrium(n, Z, Space::Momentum) *
                                     std::exp(special::quasi_shannon_momentum(n, Z));
                    return {v, 0.0, Method::Exact};
                },
                [](int) -> AsymptoticValue {
                    return {0.75 * std::exp(specfun::euler_gamma), ErrorOrder::O_inv_n};
                }};
    if (q == "fisher-shannon-circular-position" || q == "fisher-shannon-circular-momentum")
        return {[=](int n) -> PointValue {
                    return {special::circ_fisher_shannon(n, Z, space), 0.0, Method::Exact};
                },
                [=](int n) { return special::circ_fisher_shannon_asymptotic(n, space); }};
    if (q == "fisher-shannon-quasicircular-position")
        return {[=](int n) -> PointValue {
                    const auto fi = special::quasi_fisher(n, Z).first;
                    const auto s = special::quasi_shannon_position(n, Z);
                    const double v = fi / (2.0 * std::numbers::pi * std::numbers::e) *
                                     std::exp(2.0 / 3.0 * s.value);
                    return {v, std::abs(v) * (2.0 / 3.0) * s.abs_err, Method::Quadrature};
                },
                [=](int n) { return special::quasi_fisher_shannon_asymptotic(n, Space::Position); }};
    if (q == "fisher-shannon-quasicircular-momentum")
        return {[=](int n) -> PointValue {
                    const double v = special::quasi_fisher(n, Z).second /
                                     (2.0 * std::numbers::pi * std::numbers::e) *
                                     std::exp(2.0 / 3.0 * special::quasi_shannon_momentum(n, Z));
                    return {v, 0.0, Method::Exact};
                },
                [=](int n) { return special::quasi_fisher_shannon_asymptotic(n, Space::Momentum); }};
    throw std::invalid_argument("unknown quantity id: " + q);
}

}  // namespace detail

inline ConvergenceTable converge(const ConvergeRequest& req) {
    if (req.ns.empty()) throw std::invalid_argument("converge: need at least one n");
    auto routes = detail::converge_routes(req);
    std::vector<int> ns = req.ns;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    ConvergenceTable table;
    table.quantity = req.quantity;
    table.l = req.l;
    table.m = req.m;
    table.Z = req.Z;
    table.alpha = req.alpha;
    table.monotone = true;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        const auto exact = routes.exact(n);
        const auto asym = routes.asymptotic(n);
        if (i == 0) table.scale_power = decay_exponent(asym.error_order);
        ConvergenceRow row;
        row.n = n;
        row.exact = exact.value;
        row.exact_abs_err = exact.abs_err;
        row.exact_method = exact.method;
        row.asymptotic = asym.value;
        row.difference = exact.value - asym.value;
        row.scaled = row.difference * std::pow(double(n), table.scale_power);
        if (i > 0 && std::abs(row.difference) > std::abs(table.rows.back().difference))
            table.monotone = false;
        table.rows.push_back(row);
    }
    return table;
}

// ---------------------------------------------------------------------------
// Serialization

// timestamp is the tool's build stamp, not the wall clock: rerunning a
// command must reproduce the output byte for byte.
struct Meta {
    std::string tool_version;
    double tol = 0.0;
    std::string timestamp;
};

inline std::string to_csv(const std::vector<MeasureReport>& reports) {
    std::string out = "n,l,m,Z,space,measure,value,abs_err,method\n";
    for (const auto& rep : reports) {
        const auto& s = rep.state;
        const std::string prefix = std::to_string(s.n) + "," + std::to_string(s.l) + "," +
                                   std::to_string(s.m) + "," + detail::fmt(s.Z) + "," +
                                   to_string(rep.space) + ",";
        for (const auto& e : rep.entries) {
            out += prefix + e.measure + "," + detail::fmt(e.value) + "," + detail::fmt(e.abs_err) +
                   "," + (e.error.empty() ? to_string(e.method) : "error") + "\n";
        }
    }
    return out;
}

namespace detail {

inline nlohmann::json state_json(const states::QuantumState& s) {
    return {{"n", s.n}, {"l", s.l}, {"m", s.m}, {"Z", s.Z}};
}

inline nlohmann::json meta_json(const Meta& meta) {
    return {{"tool_version", meta.tool_version}, {"tol", meta.tol}, {"timestamp", meta.timestamp}};
}

}  // namespace detail

inline std::string to_json(const std::vector<MeasureReport>& reports, const Meta& meta) {
    nlohmann::json root;
    root["meta"] = detail::meta_json(meta);
    root["reports"] = nlohmann::json::array();
    for (const auto& rep : reports) {
        nlohmann::json jr;
        jr["state"] = detail::state_json(rep.state);
        jr["space"] = to_string(rep.space);
        jr["entries"] = nlohmann::json::array();
        for (const auto& e : rep.entries) {
            nlohmann::json je;
            je["measure"] = e.measure;
            je["value"] = e.value;  // NaN serializes as null
            je["abs_err"] = e.abs_err;
            je["method"] = e.error.empty() ? to_string(e.method) : "error";
            if (!e.error.empty()) je["error"] = e.error;
            jr["entries"].push_back(std::move(je));
        }
        root["reports"].push_back(std::move(jr));
    }
    return root.dump(2) + "\n";
}

inline std::string to_csv(const std::vector<AuditRow>& rows) {
    std::string out = "n,l,m,Z,relation,left,bound_or_reference,margin,pass,tolerance\n";
    for (const auto& row : rows) {
        const auto& s = row.state;
        const auto& r = row.record;
        out += std::to_string(s.n) + "," + std::to_string(s.l) + "," + std::to_string(s.m) + "," +
               detail::fmt(s.Z) + "," + r.relation + "," + detail::fmt(r.left) + "," +
               detail::fmt(r.bound_or_reference) + "," + detail::fmt(r.margin) + "," +
               (r.pass ? "true" : "false") + "," + detail::fmt(r.tolerance) + "\n";
    }
    return out;
}

inline std::string to_json(const std::vector<AuditRow>& rows, const Meta& meta) {
    nlohmann::json root;
    root["meta"] = detail::meta_json(meta);
    root["reports"] = nlohmann::json::array();
    for (const auto& row : rows) {
        const auto& r = row.record;
        root["reports"].push_back({{"state", detail::state_json(row.state)},
                                   {"relation", r.relation},
                                   {"left", r.left},
                                   {"bound_or_reference", r.bound_or_reference},
                                   {"margin", r.margin},
                                   {"pass", r.pass},
                                   {"tolerance", r.tolerance}});
    }
    return root.dump(2) + "\n";
}

inline std::string to_csv(const ConvergenceTable& t) {
    std::string out =
        "quantity,n,exact,exact_abs_err,exact_method,asymptotic,difference,scaled,scale_power,"
        "monotone\n";
    for (const auto& row : t.rows) {
        out += t.quantity + "," + std::to_string(row.n) + "," + detail::fmt(row.exact) + "," +
               detail::fmt(row.exact_abs_err) + "," + to_string(row.exact_method) + "," +
               detail::fmt(row.asymptotic) + "," + detail::fmt(row.difference) + "," +
               detail::fmt(row.scaled) + "," + detail::fmt(t.scale_power) + "," +
               (t.monotone ? "true" : "false") + "\n";
    }
    return out;
}

inline std::string to_json(const ConvergenceTable& t, const Meta& meta) {
    nlohmann::json root;
    root["meta"] = detail::meta_json(meta);
    root["quantity"] = t.quantity;
    root["l"] = t.l;
    root["m"] = t.m;
    root["Z"] = t.Z;
    if (t.alpha) root["alpha"] = *t.alpha;
    root["scale_power"] = t.scale_power;
    root["monotone"] = t.monotone;
    root["reports"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        root["reports"].push_back({{"n", row.n},
                                   {"exact", row.exact},
                                   {"exact_abs_err", row.exact_abs_err},
                                   {"exact_method", to_string(row.exact_method)},
                                   {"asymptotic", row.asymptotic},
                                   {"difference", row.difference},
                                   {"scaled", row.scaled}});
    }
    return root.dump(2) + "\n";
}

}  // namespace rydinfo::report
