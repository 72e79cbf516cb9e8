#pragma once

// Fisher information of a bound hydrogenic state in both reciprocal spaces.
//
// Both informations are exact closed forms in the quantum numbers:
//
//   I[rho]   = (4 Z^2 / n^3) (n - |m|)
//   I[gamma] = (2 n^2 / Z^2) [5 n^2 - 3 l (l+1) - |m| (8n - 6l - 3) + 1]
//
// They also satisfy gradient-functional identities built from radial moments,
//
//   I[rho]   = 4 <p^2> - 2|m|(2l+1) <r^-2>,
//   I[gamma] = 4 <r^2> - 2|m|(2l+1) <p^-2>,
//
// which fisher_relation_check verifies by quadrature; the identities are the
// independent oracle for the closed forms. The product I[rho] I[gamma] is
// Z-free and grows like 40 n^2 for large n at fixed (l, m).

#include <cmath>
#include <stdexcept>
#include <string>

#include "rydinfo/core.hpp"
#include "rydinfo/moments.hpp"
#include "rydinfo/states.hpp"

namespace rydinfo::fisher {

inline double fisher_position(const states::QuantumState& s) {
    const double n = s.n;
    return 4.0 * s.Z * s.Z / (n * n * n) * (n - std::abs(s.m));
}

inline double fisher_momentum(const states::QuantumState& s) {
    const double n = s.n;
    const double bracket = 5.0 * n * n - 3.0 * s.l * (s.l + 1.0) -
                           std::abs(s.m) * (8.0 * n - 6.0 * s.l - 3.0) + 1.0;
    return 2.0 * n * n / (s.Z * s.Z) * bracket;
}

// Checks the closed form of the chosen space against the gradient identity
// with the moment side computed entirely by quadrature. margin is the
// negated relative difference, so pass <=> agreement within rel_tol.
inline AuditRecord fisher_relation_check(const states::QuantumState& s, Space space,
                                         double rel_tol = 1e-8) {
    const double cross = 2.0 * std::abs(s.m) * (2.0 * s.l + 1.0);
    double closed = 0.0;
    double reference = 0.0;
    if (space == Space::Position) {
        closed = fisher_position(s);
        reference = 4.0 * moments::p_moment(s, 2.0).value;
        if (s.m != 0) reference -= cross * moments::r_moment(s, -2.0).value;
    } else {
        closed = fisher_momentum(s);
        reference = 4.0 * moments::r_moment(s, 2.0).value;
        if (s.m != 0) reference -= cross * moments::p_moment(s, -2.0).value;
    }
    AuditRecord rec;
    rec.relation = std::string("formula-vs-quadrature:fisher-") + to_string(space);
    rec.left = closed;
    rec.bound_or_reference = reference;
    rec.margin = -std::fabs(closed - reference) / std::fabs(reference);
    rec.tolerance = rel_tol;
    rec.pass = rec.margin >= -rel_tol;
    return rec;
}

// Leading terms at fixed (l, m): I[rho] ~ (2Z/n)^2, I[gamma] ~ 10 n^4 / Z^2.
inline AsymptoticValue fisher_asymptotic(Space space, int n, double Z) {
    moments::detail::check_state_numbers(Z, n, 0, "fisher_asymptotic");
    const double nn = n;
    if (space == Space::Position)
        return {4.0 * Z * Z / (nn * nn), ErrorOrder::O_inv_n3};
    return {10.0 * nn * nn * nn * nn / (Z * Z), ErrorOrder::O_n3};
}

// Reciprocal-space product against the bound 36. Some m != 0 states land
// below the bound (e.g. (2,1,1) gives 32); the record reports them verbatim.
inline AuditRecord fisher_product_audit(const states::QuantumState& s) {
    const double product = fisher_position(s) * fisher_momentum(s);
    return make_bound_audit("I[rho] x I[gamma] >= 36", product, 36.0, 1e-9);
}

}  // namespace rydinfo::fisher
