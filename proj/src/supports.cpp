/**
 * @file supports.cpp
 */

#include "nilwave/supports.hpp"

#include <cmath>
#include <sstream>

#include "nilwave/error.hpp"

namespace nilwave {

std::string_view to_string(GroupFamily family) {
    switch (family) {
        case GroupFamily::PGL: return "PGL";
        case GroupFamily::SO_odd: return "SO_odd";
        case GroupFamily::PSp: return "PSp";
        case GroupFamily::PSO_even: return "PSO_even";
        case GroupFamily::G2: return "G2";
        case GroupFamily::F4: return "F4";
        case GroupFamily::E6: return "E6";
        case GroupFamily::E7: return "E7";
        case GroupFamily::E8: return "E8";
    }
    return "?";
}

std::optional<GroupFamily> parse_family(std::string_view text) {
    struct Token {
        std::string_view a, b;
        GroupFamily family;
    };
    static constexpr Token tokens[] = {
        {"PGL", "pgl", GroupFamily::PGL},        {"SO_odd", "so-odd", GroupFamily::SO_odd},
        {"PSp", "psp", GroupFamily::PSp},        {"PSO_even", "pso", GroupFamily::PSO_even},
        {"G2", "g2", GroupFamily::G2},           {"F4", "f4", GroupFamily::F4},
        {"E6", "e6", GroupFamily::E6},           {"E7", "e7", GroupFamily::E7},
        {"E8", "e8", GroupFamily::E8},
    };
    for (const auto& t : tokens) {
        if (text == t.a || text == t.b) return t.family;
    }
    return std::nullopt;
}

bool is_classical(GroupFamily family) {
    switch (family) {
        case GroupFamily::PGL:
        case GroupFamily::SO_odd:
        case GroupFamily::PSp:
        case GroupFamily::PSO_even: return true;
        default: return false;
    }
}

std::string InnerTwist::to_string() const {
    switch (name) {
        case TwistName::Trivial: return "1";
        case TwistName::Minus: return "-1";
        case TwistName::Eta: return "eta";
        case TwistName::Rho: return "rho";
        case TwistName::EtaRho: return "etarho";
        case TwistName::Zeta: return "zeta";
        case TwistName::Zeta2: return "zeta2";
        case TwistName::Order: return "order:" + std::to_string(order);
    }
    return "?";
}

std::optional<InnerTwist> parse_twist(std::string_view text) {
    if (text == "1") return InnerTwist{TwistName::Trivial};
    if (text == "-1") return InnerTwist{TwistName::Minus};
    if (text == "eta") return InnerTwist{TwistName::Eta};
    if (text == "rho") return InnerTwist{TwistName::Rho};
    if (text == "etarho") return InnerTwist{TwistName::EtaRho};
    if (text == "zeta") return InnerTwist{TwistName::Zeta};
    if (text == "zeta2") return InnerTwist{TwistName::Zeta2};
    constexpr std::string_view prefix = "order:";
    if (text.starts_with(prefix)) {
        auto digits = text.substr(prefix.size());
        if (digits.empty() || digits.size() > 6) return std::nullopt;
        int d = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') return std::nullopt;
            d = d * 10 + (c - '0');
        }
        if (d < 1) return std::nullopt;
        return InnerTwist::of_order(d);
    }
    return std::nullopt;
}

InnerTwist normalize_twist(GroupFamily family, InnerTwist twist) {
    if (family == GroupFamily::PGL && twist.name == TwistName::Trivial) {
        return InnerTwist::of_order(1);
    }
    return twist;
}

std::vector<InnerTwist> twists_of(GroupFamily family, int n) {
    switch (family) {
        case GroupFamily::PGL: {
            std::vector<InnerTwist> out;
            for (int d = 1; d <= n; ++d) {
                if (n % d == 0) out.push_back(InnerTwist::of_order(d));
            }
            return out;
        }
        case GroupFamily::SO_odd:
        case GroupFamily::PSp:
        case GroupFamily::E7: return {{TwistName::Trivial}, {TwistName::Minus}};
        case GroupFamily::PSO_even:
            return {{TwistName::Trivial}, {TwistName::Eta}, {TwistName::Rho}, {TwistName::EtaRho}};
        case GroupFamily::E6: return {{TwistName::Trivial}, {TwistName::Zeta}, {TwistName::Zeta2}};
        case GroupFamily::G2:
        case GroupFamily::F4:
        case GroupFamily::E8: return {{TwistName::Trivial}};
    }
    return {};
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    os << nilwave::to_string(family);
    if (is_classical(family)) os << " n=" << n;
    os << " w=" << twist.to_string();
    return os.str();
}

void validate(const GroupSpec& group) {
    if (is_classical(group.family) && group.n < 0) {
        throw Error(ErrorCode::InvalidInput, "rank must be nonnegative");
    }
    const InnerTwist twist = normalize_twist(group.family, group.twist);
    for (const auto& w : twists_of(group.family, group.n)) {
        if (w == twist) return;
    }
    throw Error(ErrorCode::InvalidInput, "twist " + group.twist.to_string() +
                                             " is not an inner twist of " +
                                             std::string(nilwave::to_string(group.family)) +
                                             (is_classical(group.family)
                                                  ? "(" + std::to_string(group.n) + ")"
                                                  : std::string()));
}

std::string_view to_string(SupportCase c) {
    switch (c) {
        case SupportCase::Pgl: return "PGL";
        case SupportCase::SoOdd: return "SO_odd";
        case SupportCase::PspSplit: return "PSp split";
        case SupportCase::PspTwisted: return "PSp twisted";
        case SupportCase::PsoSplit: return "PSO split";
        case SupportCase::PsoRho: return "PSO rho";
    }
    return "?";
}

SupportCase support_case(const GroupSpec& group) {
    switch (group.family) {
        case GroupFamily::PGL: return SupportCase::Pgl;
        case GroupFamily::SO_odd: return SupportCase::SoOdd;
        case GroupFamily::PSp:
            return group.twist.name == TwistName::Minus ? SupportCase::PspTwisted
                                                        : SupportCase::PspSplit;
        case GroupFamily::PSO_even:
            return (group.twist.name == TwistName::Rho || group.twist.name == TwistName::EtaRho)
                       ? SupportCase::PsoRho
                       : SupportCase::PsoSplit;
        default:
            throw Error(ErrorCode::Unsupported,
                        std::string(to_string(group.family)) + " is not a classical family");
    }
}

int FamilyParams::sigma() const {
    switch (which) {
        case SupportCase::PspTwisted:
        case SupportCase::PsoRho: return b + a_prime();
        case SupportCase::Pgl: return 0;
        default: return a + b;
    }
}

bool FamilyParams::b_branch() const {
    switch (which) {
        case SupportCase::SoOdd: return b >= a;
        case SupportCase::PspTwisted: return 2 * b >= a;
        case SupportCase::PsoRho: return 2 * b > a;
        default: return false;
    }
}

int FamilyParams::delta() const {
    switch (which) {
        case SupportCase::SoOdd: return b_branch() ? b - a : a - b - 1;
        case SupportCase::PspSplit:
        case SupportCase::PsoSplit: return a - b;
        case SupportCase::PspTwisted:
        case SupportCase::PsoRho: return b_branch() ? b - a_prime() : a_prime() - b;
        case SupportCase::Pgl: return 0;
    }
    return 0;
}

std::optional<int> rank_of(SupportCase c, int a, int b, InnerTwist twist) {
    if (a < 0 || b < 0) return std::nullopt;
    const int tri = a * (a + 1) / 2;
    switch (c) {
        case SupportCase::Pgl: return std::nullopt;
        case SupportCase::SoOdd: {
            const bool want_odd = twist.name == TwistName::Minus;
            if ((a % 2 == 1) != want_odd) return std::nullopt;
            return a * a + b * (b + 1);
        }
        case SupportCase::PspSplit:
            if (a < b) return std::nullopt;
            return a * (a + 1) + b * (b + 1);
        case SupportCase::PspTwisted: return 2 * b * (b + 1) + tri;
        case SupportCase::PsoSplit: {
            const int parity = twist.name == TwistName::Eta ? 1 : 0;
            if (a < b || a % 2 != parity || b % 2 != parity) return std::nullopt;
            return a * a + b * b;
        }
        case SupportCase::PsoRho:
            // The two D_l ends are exchanged by the twist; over the quadratic
            // extension they are split when n is even and quasi-split when n is
            // odd, so b must have the parity of n = 2b^2 + a(a+1)/2.
            if (b % 2 != tri % 2) return std::nullopt;
            return 2 * b * b + tri;
    }
    return std::nullopt;
}

Partition kawanaka_wf(CuspidalFactor factor, int r) {
    if (r < 0) {
        throw Error(ErrorCode::NoCuspidal, "cuspidal parameter must be nonnegative");
    }
    std::vector<int> parts;
    switch (factor) {
        case CuspidalFactor::B:
            parts.push_back(2 * r + 1);
            for (int v = 2 * r - 1; v >= 1; v -= 2) parts.insert(parts.end(), {v, v});
            break;
        case CuspidalFactor::C:
            for (int v = 2 * r; v >= 2; v -= 2) parts.insert(parts.end(), {v, v});
            break;
        case CuspidalFactor::D:
        case CuspidalFactor::TwistedD: {
            const int want = factor == CuspidalFactor::D ? 0 : 1;
            if (r > 0 && r % 2 != want) {
                throw Error(ErrorCode::NoCuspidal,
                            std::string(factor == CuspidalFactor::D ? "split" : "non-split") +
                                " D_" + std::to_string(r * r) +
                                " has no cuspidal unipotent representation");
            }
            for (int v = 2 * r - 1; v >= 1; v -= 2) parts.insert(parts.end(), {v, v});
            break;
        }
        case CuspidalFactor::TwistedA:
            for (int v = r; v >= 1; --v) parts.push_back(v);
            break;
    }
    return Partition(std::move(parts));
}

int cuspidal_parameter(CuspidalFactor factor, int rank) {
    for (int r = 0; r <= rank + 2; ++r) {
        int size = 0;
        switch (factor) {
            case CuspidalFactor::B:
            case CuspidalFactor::C: size = r * r + r; break;
            case CuspidalFactor::D:
                size = r * r;
                if (r % 2 != 0) continue;
                break;
            case CuspidalFactor::TwistedD:
                size = r * r;
                if (r != 0 && r % 2 == 0) continue;
                break;
            case CuspidalFactor::TwistedA: size = r * (r + 1) / 2 - 1; break;
        }
        if (size == rank) return r;
        if (size > rank) break;
    }
    throw Error(ErrorCode::NoCuspidal,
                "no cuspidal unipotent representation in rank " + std::to_string(rank));
}

std::string_view to_string(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::A: return "A";
        case ComponentKind::B: return "B";
        case ComponentKind::C: return "C";
        case ComponentKind::D: return "D";
        case ComponentKind::ADouble: return "A-double";
    }
    return "?";
}

std::string SupportFamily::id() const {
    std::ostringstream os;
    os << group.to_string();
    if (group.family != GroupFamily::PGL) os << " a=" << params.a << " b=" << params.b;
    return os.str();
}

namespace {

// first, first+step, ..., up to and including last; empty when last < first.
std::vector<int> progression(int first, int last, int step) {
    std::vector<int> out;
    for (int v = first; v <= last; v += step) out.push_back(v);
    return out;
}

Partition union_of(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> all = x;
    all.insert(all.end(), y.begin(), y.end());
    return Partition::from_unsorted(std::move(all));
}

std::string factor_name(std::string_view type, int rank) {
    return std::string(type) + "_" + std::to_string(rank);
}

WfComponent d_component(int r) {
    const bool twisted = r % 2 == 1;
    return {ComponentKind::D, factor_name(twisted ? "^2D" : "D", r * r),
            kawanaka_wf(twisted ? CuspidalFactor::TwistedD : CuspidalFactor::D, r)};
}

WfComponent c_component(int r) {
    return {ComponentKind::C, factor_name("C", r * (r + 1)), kawanaka_wf(CuspidalFactor::C, r)};
}

WfComponent a_component(int r) {
    return {ComponentKind::ADouble, factor_name("^2A", r * (r + 1) / 2 - 1),
            kawanaka_wf(CuspidalFactor::TwistedA, r)};
}

}  // namespace

Partition dual_orbit_partition(const FamilyParams& p, int n) {
    const int d = p.delta();
    const int s = p.sigma();
    switch (p.which) {
        case SupportCase::Pgl: return Partition{n};
        case SupportCase::SoOdd: return union_of(progression(2, 2 * d, 2), progression(2, 2 * s, 2));
        case SupportCase::PspSplit:
            return union_of(progression(1, 2 * d - 1, 2), progression(1, 2 * s + 1, 2));
        case SupportCase::PsoSplit:
            return union_of(progression(1, 2 * d - 1, 2), progression(1, 2 * s - 1, 2));
        case SupportCase::PspTwisted: {
            const bool even = p.a % 2 == 0;
            auto first = even ? progression(1, 4 * s + 1, 4) : progression(3, 4 * s + 3, 4);
            auto second = (even == p.b_branch()) ? progression(3, 4 * d - 1, 4)
                                                 : progression(1, 4 * d - 3, 4);
            return union_of(first, second);
        }
        case SupportCase::PsoRho: {
            if (p.a % 2 == 0) {
                auto second =
                    p.b_branch() ? progression(1, 4 * d - 3, 4) : progression(3, 4 * d - 1, 4);
                return union_of(progression(3, 4 * s - 1, 4), second);
            }
            auto second = p.b_branch() ? progression(3, 4 * d - 5, 4) : progression(1, 4 * d + 1, 4);
            return union_of(progression(1, 4 * s + 1, 4), second);
        }
    }
    throw Error(ErrorCode::Unsupported, "unknown support case");
}

namespace {

SupportFamily make_family(const GroupSpec& group, SupportCase c, int a, int b) {
    const FamilyParams params{c, a, b};
    const int n = group.n;
    std::vector<WfComponent> comps;
    std::string j_label;
    std::optional<std::size_t> marking;
    std::optional<Partition> alt_marking;
    ClassicalKind lambda_kind = ClassicalKind::A;

    switch (c) {
        case SupportCase::Pgl:
            comps.push_back(
                {ComponentKind::A, "T", Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
            j_label = "empty";
            break;
        case SupportCase::SoOdd: {
            const int l = a * a;
            const int t = b * (b + 1);
            comps.push_back(d_component(a));
            comps.push_back({ComponentKind::B, factor_name("B", t), kawanaka_wf(CuspidalFactor::B, b)});
            j_label = factor_name("D", l) + " x " + factor_name("B", t);
            marking = 0;
            lambda_kind = ClassicalKind::C;
            break;
        }
        case SupportCase::PspSplit:
            comps.push_back(c_component(a));
            comps.push_back(c_component(b));
            j_label = comps[0].factor + " x " + comps[1].factor;
            marking = 0;
            lambda_kind = ClassicalKind::B;
            break;
        case SupportCase::PspTwisted: {
            comps.push_back(c_component(b));
            comps.push_back(a_component(a));
            comps.push_back(c_component(b));
            const auto& cl = comps[0].factor;
            j_label = a <= 1 ? cl + " x " + cl : cl + " " + comps[1].factor + " " + cl;
            marking = 0;
            lambda_kind = ClassicalKind::B;
            break;
        }
        case SupportCase::PsoSplit:
            comps.push_back(d_component(a));
            comps.push_back(d_component(b));
            j_label = comps[0].factor + " x " + comps[1].factor;
            marking = 0;
            lambda_kind = ClassicalKind::D;
            break;
        case SupportCase::PsoRho: {
            comps.push_back(d_component(b));
            comps.push_back(a_component(a));
            comps.push_back(d_component(b));
            const auto& dl = comps[0].factor;
            if (b == 0) {
                j_label = comps[1].factor;
            } else if (a <= 1) {
                j_label = dl + " x " + dl;
            } else {
                j_label = dl + " " + comps[1].factor + " " + dl;
            }
            marking = 0;
            alt_marking = kawanaka_wf(CuspidalFactor::C, b);
            lambda_kind = ClassicalKind::D;
            break;
        }
    }

    return SupportFamily{group,
                         params,
                         std::move(j_label),
                         std::move(comps),
                         TypedOrbit(lambda_kind, n, dual_orbit_partition(params, n)),
                         marking,
                         std::move(alt_marking),
                         1};
}

}  // namespace

std::vector<SupportFamily> enumerate_supports(const GroupSpec& group) {
    if (!is_classical(group.family)) {
        throw Error(ErrorCode::Unsupported, std::string(to_string(group.family)) +
                                                " is exceptional; use exceptional_rows()");
    }
    validate(group);
    std::vector<SupportFamily> out;
    const SupportCase c = support_case(group);
    if (c == SupportCase::Pgl) {
        const int order = group.twist.name == TwistName::Order ? group.twist.order : 1;
        if (group.n >= 1 && order == group.n) {
            out.push_back(make_family(group, c, 0, 0));
        }
        return out;
    }
    if (group.n < 1) return out;
    const int bound = static_cast<int>(std::ceil(std::sqrt(2.0 * group.n))) + 2;
    for (int a = 0; a <= bound; ++a) {
        for (int b = 0; b <= bound; ++b) {
            auto n = rank_of(c, a, b, group.twist);
            if (n && *n == group.n) out.push_back(make_family(group, c, a, b));
        }
    }
    return out;
}

std::string DualityFact::to_string() const {
    return self_dual ? std::string("self-dual") : "pair(" + dual_label + ")";
}

const std::vector<ExceptionalRow>& exceptional_rows() {
    using T = InnerTwist;
    static const std::vector<ExceptionalRow> rows = {
        {{GroupFamily::G2, 0, T{}},
         {T{}},
         "G_2",
         {"G2[1]", "G2[-1]", "G2[theta]", "G2[theta^2]"},
         {"(1,eps)", "(g2,eps)", "(g3,theta)", "(g3,theta^2)"},
         "G_2(a_1)",
         "G_2(a_1)",
         {true, {}},
         "S_3",
         std::nullopt,
         true},
        {{GroupFamily::F4, 0, T{}},
         {T{}},
         "F_4",
         {"F4^II[1]", "F4[-1]", "F4^I[1]", "F4[theta]", "F4[theta^2]", "F4[i]", "F4[-i]"},
         {"(1,lambda^3)", "(g2,eps)", "(g2',eps)", "(g3,theta)", "(g3,theta^2)", "(g4,i)",
          "(g4,-i)"},
         "F_4(a_3)",
         "F_4(a_3)",
         {true, {}},
         "S_4",
         std::nullopt,
         true},
        {{GroupFamily::E6, 0, T{}},
         {T{}},
         "E_6",
         {"E6[theta]", "E6[theta^2]"},
         {"(g3,theta)", "(g3,theta^2)"},
         "D_4(a_1)",
         "D_4(a_1)",
         {true, {}},
         "S_3",
         std::nullopt,
         true},
        {{GroupFamily::E6, 0, T{TwistName::Zeta}},
         {T{TwistName::Zeta}, T{TwistName::Zeta2}},
         "^3D_4",
         {"3D4[1]", "3D4[-1]"},
         {},
         "A_2",
         "E_6(a_3)",
         {false, "A_2"},
         "S_2",
         PartitionAlias{Partition{3, 3, 1, 1}, "D_4", "A_2"},
         false},
        {{GroupFamily::E7, 0, T{}},
         {T{}},
         "E_7",
         {"E7[xi]", "E7[-xi]"},
         {"(g2,1)", "(g2,eps)"},
         "A_4+A_1",
         "A_4+A_1",
         {true, {}},
         "Z/2",
         std::nullopt,
         true},
        {{GroupFamily::E7, 0, T{TwistName::Minus}},
         {T{TwistName::Minus}},
         "^2E_6",
         {"2E6[1]", "2E6[theta]", "2E6[theta^2]"},
         {},
         "D_4(a_1)",
         "E_7(a_5)",
         {false, "D_4(a_1)"},
         "S_3",
         std::nullopt,
         false},
        {{GroupFamily::E8, 0, T{}},
         {T{}},
         "E_8",
         {"E8^II[1]", "E8[-1]", "E8^I[1]", "E8[theta]", "E8[theta^2]", "E8[-theta]",
          "E8[-theta^2]", "E8[i]", "E8[-i]", "E8[zeta]", "E8[zeta^2]", "E8[zeta^3]",
          "E8[zeta^4]"},
         {"(1,lambda^4)", "(g2,-eps)", "(g2',eps)", "(g3,eps theta)", "(g3,eps theta^2)",
          "(g6,-theta)", "(g6,-theta^2)", "(g4,i)", "(g4,-i)", "(g5,zeta)", "(g5,zeta^2)",
          "(g5,zeta^3)", "(g5,zeta^4)"},
         "E_8(a_7)",
         "E_8(a_7)",
         {true, {}},
         "S_5",
         std::nullopt,
         true},
    };
    return rows;
}

namespace {

struct DualEntry {
    GroupFamily family;
    std::string_view orbit;
    std::string_view dual;
};

// Each pair is listed once; lookups go both ways.
constexpr DualEntry exceptional_duals[] = {
    {GroupFamily::G2, "0", "G_2"},
    {GroupFamily::G2, "G_2(a_1)", "G_2(a_1)"},
    {GroupFamily::F4, "0", "F_4"},
    {GroupFamily::F4, "F_4(a_3)", "F_4(a_3)"},
    {GroupFamily::E6, "0", "E_6"},
    {GroupFamily::E6, "D_4(a_1)", "D_4(a_1)"},
    {GroupFamily::E6, "A_2", "E_6(a_3)"},
    {GroupFamily::E7, "0", "E_7"},
    {GroupFamily::E7, "A_4+A_1", "A_4+A_1"},
    {GroupFamily::E7, "D_4(a_1)", "E_7(a_5)"},
    {GroupFamily::E8, "0", "E_8"},
    {GroupFamily::E8, "E_8(a_7)", "E_8(a_7)"},
};

}  // namespace

std::optional<std::string> exceptional_bv_dual(GroupFamily family, std::string_view label) {
    for (const auto& e : exceptional_duals) {
        if (e.family != family) continue;
        if (e.orbit == label) return std::string(e.dual);
        if (e.dual == label) return std::string(e.orbit);
    }
    return std::nullopt;
}

std::optional<std::string> bala_carter_alias(GroupFamily family, std::string_view ambient,
                                             const Partition& p) {
    // Orbits of the twisted Levi ^3D_4 inside E_6, named by their D_4 partition.
    if (family == GroupFamily::E6 && ambient == "D_4") {
        if (p == Partition{3, 3, 1, 1}) return "A_2";
        if (p == Partition{1, 1, 1, 1, 1, 1, 1, 1}) return "0";
    }
    return std::nullopt;
}

}  // namespace nilwave
