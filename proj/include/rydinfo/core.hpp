#pragma once

// Shared vocabulary types used across the library.

#include <cstdint>
#include <string>

namespace rydinfo {

enum class Space { Position, Momentum };

inline const char* to_string(Space s) {
    return s == Space::Position ? "position" : "momentum";
}

// How a reported number was obtained.
enum class Method { Exact, Quadrature, Asymptotic };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Quadrature: return "quadrature";
        default: return "asymptotic";
    }
}

// Declared remainder class of an asymptotic formula, as printed in the
// source displays. For formulas stated only with "~" (ratio tends to 1,
// no rate given) the class is o1 on the ratio.
enum class ErrorOrder {
    o1,         // + o(1)
    O_inv_n,    // + O(1/n)
    O_inv_n2,   // + O(1/n^2)
    O_inv_n3,   // + O(1/n^3)
    O_inv_n23,  // + O(n^{-2/3})
    o_n,        // + o(n)
    o_n13,      // + o(n^{1/3})
    o_n2,       // + o(n^2)
    O_n,        // + O(n)
    O_n3        // + O(n^3)
};

inline const char* to_string(ErrorOrder e) {
    switch (e) {
        case ErrorOrder::o1: return "o(1)";
        case ErrorOrder::O_inv_n: return "O(1/n)";
        case ErrorOrder::O_inv_n2: return "O(1/n^2)";
        case ErrorOrder::O_inv_n3: return "O(1/n^3)";
        case ErrorOrder::O_inv_n23: return "O(n^-2/3)";
        case ErrorOrder::o_n: return "o(n)";
        case ErrorOrder::o_n13: return "o(n^1/3)";
        case ErrorOrder::o_n2: return "o(n^2)";
        case ErrorOrder::O_n: return "O(n)";
        default: return "O(n^3)";
    }
}

// Exponent of the decay the declared class asserts once the leading term is
// removed: difference * n^decay_exponent should stay bounded (and tend to a
// constant for the O classes). Pure o(1) declarations assert no rate.
inline double decay_exponent(ErrorOrder e) {
    switch (e) {
        case ErrorOrder::o1: return 0.0;
        case ErrorOrder::O_inv_n: return 1.0;
        case ErrorOrder::O_inv_n2: return 2.0;
        case ErrorOrder::O_inv_n3: return 3.0;
        case ErrorOrder::O_inv_n23: return 2.0 / 3.0;
        case ErrorOrder::o_n: return -1.0;
        case ErrorOrder::o_n13: return -1.0 / 3.0;
        case ErrorOrder::o_n2: return -2.0;
        case ErrorOrder::O_n: return -1.0;
        default: return -3.0;
    }
}

struct AsymptoticValue {
    double value = 0.0;
    ErrorOrder error_order = ErrorOrder::o1;
};

// One uncertainty-relation or formula-vs-quadrature check.
// Uniform semantics: pass <=> margin >= -tolerance. Bound-type relations set
// margin = left - bound; formula-vs-quadrature audits set
// margin = -|formula - reference| (optionally relative).
struct AuditRecord {
    std::string relation;
    double left = 0.0;
    double bound_or_reference = 0.0;
    double margin = 0.0;
    bool pass = false;
    double tolerance = 0.0;
};

inline AuditRecord make_bound_audit(std::string relation, double left, double bound,
                                    double tolerance) {
    AuditRecord rec;
    rec.relation = std::move(relation);
    rec.left = left;
    rec.bound_or_reference = bound;
    rec.margin = left - bound;
    rec.tolerance = tolerance;
    rec.pass = rec.margin >= -tolerance;
    return rec;
}

inline AuditRecord make_formula_audit(std::string relation, double formula, double reference,
                                      double tolerance) {
    AuditRecord rec;
    rec.relation = std::move(relation);
    rec.left = formula;
    rec.bound_or_reference = reference;
    double diff = formula - reference;
    rec.margin = -(diff < 0 ? -diff : diff);
    rec.tolerance = tolerance;
    rec.pass = rec.margin >= -tolerance;
    return rec;
}

}  // namespace rydinfo
