#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilwave/closed_forms.hpp"
#include "nilwave/error.hpp"
#include "nilwave/verify.hpp"

using namespace nilwave;

namespace {

InnerTwist tw(TwistName name) { return {name, 1}; }

SupportFamily find(GroupFamily family, int n, InnerTwist w, int a, int b) {
    for (auto& f : enumerate_supports({family, n, w})) {
        if (f.params.a == a && f.params.b == b) return f;
    }
    FAIL("support not enumerated");
    throw 0;
}

}  // namespace

TEST_CASE("lift examples") {
    const auto so = lift(find(GroupFamily::SO_odd, 7, tw(TwistName::Minus), 1, 2));
    CHECK(so.underlying == TypedOrbit(ClassicalKind::B, 7, {5, 3, 3, 1, 1, 1, 1}));
    CHECK(so.marking_raw == Partition{1, 1});
    CHECK(so.marking_reduced.empty());
    CHECK_FALSE(so.collapse_was_nontrivial);

    const auto psp = lift(find(GroupFamily::PSp, 7, tw(TwistName::Minus), 2, 1));
    CHECK(psp.underlying == TypedOrbit(ClassicalKind::C, 7, {2, 2, 2, 2, 2, 2, 1, 1}));
    CHECK(psp.marking_reduced.empty());
    CHECK_FALSE(psp.collapse_was_nontrivial);

    const auto rho = lift(find(GroupFamily::PSO_even, 6, tw(TwistName::Rho), 3, 0));
    CHECK(rho.underlying == TypedOrbit(ClassicalKind::D, 6, {3, 3, 2, 2, 1, 1}));
    CHECK(rho.marking_reduced.empty());
    CHECK(rho.underlying == bv_dual(TypedOrbit(ClassicalKind::D, 6, {5, 5, 1, 1})));
}

TEST_CASE("lift rejects inconsistent component data") {
    auto f = find(GroupFamily::SO_odd, 7, tw(TwistName::Minus), 1, 2);
    f.wf_components.pop_back();
    try {
        lift(f);
        FAIL("expected a data-integrity error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DataIntegrity);
    }
}

TEST_CASE("verify_family examples") {
    const auto so = verify_family(find(GroupFamily::SO_odd, 7, tw(TwistName::Minus), 1, 2));
    CHECK(so.all_passed());
    CHECK(so.skipped.empty());
    CHECK(so.checks.at("lift_equals_dA"));

    auto pgl = enumerate_supports({GroupFamily::PGL, 5, InnerTwist::of_order(5)});
    REQUIRE(pgl.size() == 1);
    const auto r = verify_family(pgl[0]);
    CHECK(r.binding_passed());
    REQUIRE(r.lift_result.has_value());
    CHECK(r.lift_result->underlying.partition() == Partition{1, 1, 1, 1, 1});
    CHECK(r.lift_result->marking_reduced.empty());
    REQUIRE(r.dual.has_value());
    CHECK(r.dual->trivially_marked());

    const auto psp = verify_family(find(GroupFamily::PSp, 4, tw(TwistName::Trivial), 1, 1));
    CHECK(psp.all_passed());
    CHECK(d_closed_form(psp.params.value(), 4).value == Partition{2, 2, 2, 2});
}

TEST_CASE("PSO rho d closed form is skipped with a reason when b > 0") {
    const auto agg = verify_range(GroupFamily::PSO_even, 50,
                                  {tw(TwistName::Rho), tw(TwistName::EtaRho)});
    REQUIRE_FALSE(agg.reports.empty());
    CHECK(agg.ok());
    std::size_t skipped = 0;
    for (const auto& r : agg.reports) {
        INFO(r.family_id);
        CHECK(r.binding_passed());
        if (r.params->b > 0) {
            REQUIRE(r.skipped.count("d_closed_form") == 1);
            CHECK(r.skipped.at("d_closed_form").rfind("total-inconsistent", 0) == 0);
            ++skipped;
        } else {
            CHECK(r.checks.at("d_closed_form"));
        }
    }
    CHECK(skipped > 0);
}

TEST_CASE("verify_range") {
    CHECK(verify_range(GroupFamily::PSp, 0, {tw(TwistName::Trivial)}).reports.empty());

    const auto so = verify_range(GroupFamily::SO_odd, 50, {tw(TwistName::Trivial), tw(TwistName::Minus)});
    CHECK_FALSE(so.reports.empty());
    CHECK(so.ok());
    CHECK(so.regression_failures() == 0);
    CHECK(so.skipped_checks() == 0);

    const auto pgl = verify_range(GroupFamily::PGL, 12, {});
    CHECK(pgl.reports.size() == 12);
    CHECK(pgl.ok());

    // The trivial PGL twist is the twist of order 1.
    const auto pgl1 = verify_range(GroupFamily::PGL, 12, {tw(TwistName::Trivial)});
    CHECK(pgl1.reports.size() == 1);
}

TEST_CASE("no collapse is needed for any enumerated union") {
    for (auto family : {GroupFamily::SO_odd, GroupFamily::PSp, GroupFamily::PSO_even}) {
        for (const auto& r : verify_range(family, 50, {}).reports) {
            INFO(r.family_id);
            CHECK(r.checks.at("union_was_valid"));
            CHECK(r.checks.at("marking_trivial"));
            CHECK(r.checks.at("pi_certified"));
        }
    }
}

TEST_CASE("exceptional suite") {
    const auto reports = verify_exceptional();
    REQUIRE(reports.size() == 7);
    for (const auto& r : reports) {
        INFO(r.family_id);
        CHECK(r.all_passed());
    }
    CHECK(reports[3].checks.count("alias") == 1);
    CHECK(reports[0].checks.count("alias") == 0);
}
