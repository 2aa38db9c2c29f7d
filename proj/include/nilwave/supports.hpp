/**
 * @file supports.hpp
 * @brief Unipotent cuspidal supports (J, sigma) of adjoint p-adic groups.
 *
 * For every classical family and inner twist this enumerates the maximal
 * pseudo-Levi types J carrying a cuspidal unipotent representation, together
 * with the Kawanaka wavefront set of that representation (one partition per
 * simple factor of J) and the partition lambda of the dual nilpotent orbit.
 * J is kept symbolically as a list of factor types and ranks.
 *
 * The exceptional groups are covered by a fixed table of Bala-Carter labels.
 */

#ifndef NILWAVE_SUPPORTS_HPP
#define NILWAVE_SUPPORTS_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilwave/partition.hpp"

namespace nilwave {

enum class GroupFamily { PGL, SO_odd, PSp, PSO_even, G2, F4, E6, E7, E8 };

std::string_view to_string(GroupFamily family);
/// Accepts the display names and the CLI tokens (pgl, so-odd, psp, pso, g2, ...).
std::optional<GroupFamily> parse_family(std::string_view text);
bool is_classical(GroupFamily family);

enum class TwistName { Trivial, Minus, Eta, Rho, EtaRho, Zeta, Zeta2, Order };

/// Character omega of the centre of the dual group. For PGL(n) the twists are
/// identified by their order, a divisor of n.
struct InnerTwist {
    TwistName name = TwistName::Trivial;
    int order = 1;  ///< used only by TwistName::Order

    static InnerTwist of_order(int d) { return {TwistName::Order, d}; }

    std::string to_string() const;

    friend bool operator==(const InnerTwist&, const InnerTwist&) = default;
    friend auto operator<=>(const InnerTwist&, const InnerTwist&) = default;
};

/// "1", "-1", "eta", "rho", "etarho", "zeta", "zeta2", or "order:d".
std::optional<InnerTwist> parse_twist(std::string_view text);

/// Maps the trivial twist of PGL to order 1; every other twist is returned unchanged.
InnerTwist normalize_twist(GroupFamily family, InnerTwist twist);

/// The group of inner twists of a family, in canonical order.
std::vector<InnerTwist> twists_of(GroupFamily family, int n);

struct GroupSpec {
    GroupFamily family = GroupFamily::PGL;
    int n = 0;  ///< rank parameter; ignored for the exceptional families
    InnerTwist twist;

    std::string to_string() const;
};

/// Throws Error(InvalidInput) when the twist does not belong to the family or n < 0.
void validate(const GroupSpec& group);

/// Which block of the classification a (family, twist) pair falls in.
enum class SupportCase { Pgl, SoOdd, PspSplit, PspTwisted, PsoSplit, PsoRho };

std::string_view to_string(SupportCase c);
SupportCase support_case(const GroupSpec& group);

/// The integers (a, b) of a support together with the derived quantities
/// delta, Sigma and a'. The derived values are always recomputed.
struct FamilyParams {
    SupportCase which = SupportCase::Pgl;
    int a = 0;
    int b = 0;

    int a_prime() const { return a / 2; }
    int sigma() const;
    int delta() const;
    /// Branch selector of the case formulas: b >= a (SO), 2b >= a (PSp twisted),
    /// 2b > a (PSO rho). False for the cases without branches.
    bool b_branch() const;
};

/// Rank n determined by (a, b) in a case, or nullopt when (a, b) violates the
/// case's parity and ordering constraints.
std::optional<int> rank_of(SupportCase c, int a, int b, InnerTwist twist);

enum class CuspidalFactor { B, C, D, TwistedD, TwistedA };

/// Kawanaka wavefront set of the cuspidal unipotent representation of the factor
/// with parameter r (rank r^2+r for B/C, r^2 for D/2D, r(r+1)/2 - 1 for 2A).
/// r = 0 is the trivial factor and gives its zero orbit. Throws Error(NoCuspidal)
/// for negative r or the wrong parity of r in types D and 2D.
Partition kawanaka_wf(CuspidalFactor factor, int r);

/// Parameter r of a factor of the given rank; throws Error(NoCuspidal) if none exists.
int cuspidal_parameter(CuspidalFactor factor, int rank);

enum class ComponentKind { A, B, C, D, ADouble };

std::string_view to_string(ComponentKind kind);

/// One simple factor of J and the wavefront set of its cuspidal representation.
/// ADouble factors (type 2A) enter the ambient partition twice.
struct WfComponent {
    ComponentKind kind = ComponentKind::A;
    std::string factor;
    Partition partition;

    int contribution() const {
        return kind == ComponentKind::ADouble ? 2 * partition.total() : partition.total();
    }
};

struct SupportFamily {
    GroupSpec group;
    FamilyParams params;
    std::string j_label;
    std::vector<WfComponent> wf_components;
    TypedOrbit lambda;
    std::optional<std::size_t> marking_index;  ///< component whose WF is the marking nu
    std::optional<Partition> alt_marking;      ///< second candidate for nu, if the source is ambiguous
    int sigma_count = 1;

    /// "PSp n=7 w=-1 a=2 b=1".
    std::string id() const;
};

/// The partition lambda of the dual orbit for (a, b) in the given case.
Partition dual_orbit_partition(const FamilyParams& params, int n);

/// All supports of a classical group with the given twist, ordered by (a, b).
/// Throws Error(Unsupported) for exceptional families and Error(InvalidInput) for
/// a twist outside the family.
std::vector<SupportFamily> enumerate_supports(const GroupSpec& group);

struct DualityFact {
    bool self_dual = true;
    std::string dual_label;  ///< d(dual orbit) when not self-dual

    std::string to_string() const;
};

struct PartitionAlias {
    Partition partition;
    std::string ambient;  ///< type of the partition, e.g. "D_4"
    std::string label;    ///< Bala-Carter label in the ambient exceptional algebra
};

struct ExceptionalRow {
    GroupSpec group;
    std::vector<InnerTwist> twists;  ///< all twists sharing this row
    std::string j_label;
    std::vector<std::string> sigma_names;
    std::vector<std::string> sigma_params;  ///< the pair (x, tau) per sigma, opaque
    std::string wf_label;
    std::string dual_orbit_label;
    DualityFact duality_fact;
    std::string component_group;
    std::optional<PartitionAlias> partition_alias;
    bool j_is_full_diagram = true;  ///< J = Delta; otherwise J is a proper subset of Delta
};

const std::vector<ExceptionalRow>& exceptional_rows();

/// d on the special orbits of the exceptional algebras that the table refers to.
std::optional<std::string> exceptional_bv_dual(GroupFamily family, std::string_view label);

/// Bala-Carter label of a classical-partition orbit of a twisted Levi factor, when tabulated.
std::optional<std::string> bala_carter_alias(GroupFamily family, std::string_view ambient,
                                             const Partition& p);

}  // namespace nilwave

#endif  // NILWAVE_SUPPORTS_HPP
