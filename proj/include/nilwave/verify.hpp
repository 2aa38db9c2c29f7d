/**
 * @file verify.hpp
 * @brief Checks that the canonical unramified wavefront set of every unipotent
 * supercuspidal equals d_A(O^vee, 1).
 *
 * For a classical support the wavefront side is the lift of the factor-wise
 * Kawanaka wavefront sets: 2A factors are doubled, all factors are merged, the
 * result is collapsed to the ambient type, and the marking is taken from a
 * designated factor and reduced. The other side is d_A(lambda, 1) evaluated
 * independently through the Barbasch-Vogan dual.
 *
 * Mathematical disagreements are recorded in the report, never thrown.
 */

#ifndef NILWAVE_VERIFY_HPP
#define NILWAVE_VERIFY_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nilwave/duality.hpp"
#include "nilwave/supports.hpp"

namespace nilwave {

struct LiftResult {
    TypedOrbit underlying;
    Partition marking_raw;
    Partition marking_reduced;
    bool collapse_was_nontrivial = false;
};

/// Throws Error(DataIntegrity) when the component totals do not fill the ambient rank.
LiftResult lift(const SupportFamily& family);

/// Ambient type of the wavefront side: A, B, C, D for PGL, SO_odd, PSp, PSO_even.
ClassicalKind ambient_kind(GroupFamily family);

struct VerificationReport {
    std::string family_id;
    GroupSpec group;
    std::optional<FamilyParams> params;  ///< classical reports only
    std::optional<Partition> lambda;     ///< classical reports only

    std::map<std::string, bool> checks;
    std::map<std::string, std::string> skipped;  ///< check name -> reason
    std::map<std::string, std::string> diagnostics;

    std::optional<LiftResult> lift_result;
    std::optional<MarkedOrbit> dual;

    /// The binding check: lift_equals_dA.
    bool binding_passed() const;
    /// Every evaluated check, including closed-form regressions.
    bool all_passed() const;
};

VerificationReport verify_family(const SupportFamily& family);
std::vector<VerificationReport> verify_exceptional();

struct AggregateReport {
    std::vector<VerificationReport> reports;

    std::size_t binding_failures() const;
    std::size_t regression_failures() const;  ///< failed non-binding checks
    std::size_t skipped_checks() const;
    bool ok() const { return binding_failures() == 0; }
};

/// Runs verify_family over all supports with 1 <= n <= n_max and the requested
/// twists (all twists when empty); twists that do not exist for a given n are
/// ignored. Ordered by (n, twist, a, b).
AggregateReport verify_range(GroupFamily family, int n_max, const std::vector<InnerTwist>& twists);

}  // namespace nilwave

#endif  // NILWAVE_VERIFY_HPP
