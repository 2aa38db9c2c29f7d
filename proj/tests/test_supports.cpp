#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilwave/error.hpp"
#include "nilwave/supports.hpp"

using namespace nilwave;

namespace {

InnerTwist tw(TwistName name) { return {name, 1}; }

int dual_total(GroupFamily f, int n) {
    switch (f) {
        case GroupFamily::PGL: return n;
        case GroupFamily::SO_odd: return 2 * n;
        case GroupFamily::PSp: return 2 * n + 1;
        default: return 2 * n;
    }
}

int wf_total(GroupFamily f, int n) {
    switch (f) {
        case GroupFamily::PGL: return n;
        case GroupFamily::SO_odd: return 2 * n + 1;
        default: return 2 * n;
    }
}

}  // namespace

TEST_CASE("twist parsing") {
    CHECK(parse_twist("1") == tw(TwistName::Trivial));
    CHECK(parse_twist("-1") == tw(TwistName::Minus));
    CHECK(parse_twist("etarho") == tw(TwistName::EtaRho));
    CHECK(parse_twist("order:4") == InnerTwist::of_order(4));
    CHECK_FALSE(parse_twist("order:0").has_value());
    CHECK_FALSE(parse_twist("sigma").has_value());
    CHECK(normalize_twist(GroupFamily::PGL, tw(TwistName::Trivial)) == InnerTwist::of_order(1));
    CHECK(normalize_twist(GroupFamily::PSp, tw(TwistName::Trivial)) == tw(TwistName::Trivial));
    CHECK(twists_of(GroupFamily::PGL, 6).size() == 4);
    CHECK(twists_of(GroupFamily::PSO_even, 3).size() == 4);
    CHECK(parse_family("so-odd") == GroupFamily::SO_odd);
    CHECK(parse_family("pso") == GroupFamily::PSO_even);
    CHECK_FALSE(parse_family("spin").has_value());
}

TEST_CASE("group validation") {
    CHECK_NOTHROW(validate({GroupFamily::PGL, 6, InnerTwist::of_order(3)}));
    CHECK_THROWS_AS(validate({GroupFamily::PGL, 6, InnerTwist::of_order(4)}), Error);
    CHECK_THROWS_AS(validate({GroupFamily::PSp, 3, tw(TwistName::Eta)}), Error);
    CHECK_THROWS_AS(validate({GroupFamily::SO_odd, -1, tw(TwistName::Trivial)}), Error);
    CHECK_THROWS_AS(enumerate_supports({GroupFamily::E8, 0, tw(TwistName::Trivial)}), Error);
}

TEST_CASE("kawanaka wavefront sets") {
    CHECK(kawanaka_wf(CuspidalFactor::B, 2) == Partition{5, 3, 3, 1, 1});
    CHECK(kawanaka_wf(CuspidalFactor::B, 0) == Partition{1});
    CHECK(kawanaka_wf(CuspidalFactor::C, 1) == Partition{2, 2});
    CHECK(kawanaka_wf(CuspidalFactor::C, 0) == Partition{});
    CHECK(kawanaka_wf(CuspidalFactor::D, 0) == Partition{});
    CHECK(kawanaka_wf(CuspidalFactor::D, 2) == Partition{3, 3, 1, 1});
    CHECK(kawanaka_wf(CuspidalFactor::TwistedD, 1) == Partition{1, 1});
    CHECK(kawanaka_wf(CuspidalFactor::TwistedA, 3) == Partition{3, 2, 1});

    CHECK_THROWS_AS(kawanaka_wf(CuspidalFactor::D, 1), Error);
    CHECK_THROWS_AS(kawanaka_wf(CuspidalFactor::TwistedD, 2), Error);
    try {
        kawanaka_wf(CuspidalFactor::B, -1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoCuspidal);
    }

    CHECK(cuspidal_parameter(CuspidalFactor::C, 6) == 2);
    CHECK(cuspidal_parameter(CuspidalFactor::TwistedA, 5) == 3);
    CHECK_THROWS_AS(cuspidal_parameter(CuspidalFactor::B, 4), Error);
}

TEST_CASE("enumeration examples") {
    CHECK(enumerate_supports({GroupFamily::SO_odd, 7, tw(TwistName::Trivial)}).empty());

    auto so = enumerate_supports({GroupFamily::SO_odd, 7, tw(TwistName::Minus)});
    REQUIRE(so.size() == 1);
    CHECK(so[0].params.a == 1);
    CHECK(so[0].params.b == 2);
    CHECK(so[0].params.delta() == 1);
    CHECK(so[0].params.sigma() == 3);
    CHECK(so[0].j_label == "D_1 x B_6");
    CHECK(so[0].lambda == TypedOrbit(ClassicalKind::C, 7, {6, 4, 2, 2}));

    auto psp = enumerate_supports({GroupFamily::PSp, 4, tw(TwistName::Trivial)});
    REQUIRE(psp.size() == 1);
    CHECK(psp[0].params.a == 1);
    CHECK(psp[0].params.b == 1);
    CHECK(psp[0].lambda.partition() == Partition{5, 3, 1});

    auto twisted = enumerate_supports({GroupFamily::PSp, 7, tw(TwistName::Minus)});
    bool found = false;
    for (const auto& f : twisted) {
        if (f.params.a == 2 && f.params.b == 1) {
            found = true;
            CHECK(f.lambda == TypedOrbit(ClassicalKind::B, 7, {9, 5, 1}));
            CHECK(f.j_label == "C_2 ^2A_2 C_2");
        }
    }
    CHECK(found);

    auto pgl = enumerate_supports({GroupFamily::PGL, 5, InnerTwist::of_order(5)});
    REQUIRE(pgl.size() == 1);
    CHECK(pgl[0].lambda == TypedOrbit(ClassicalKind::A, 5, {5}));
    CHECK(pgl[0].j_label == "empty");
    CHECK(enumerate_supports({GroupFamily::PGL, 6, InnerTwist::of_order(3)}).empty());
}

TEST_CASE("degenerate pseudo-Levi labels") {
    // a in {0,1}: the 2A factor is trivial, so J has two C factors.
    for (int a : {0, 1}) {
        const int n = 2 * 2 * 3 + a * (a + 1) / 2;
        bool found = false;
        for (const auto& f : enumerate_supports({GroupFamily::PSp, n, tw(TwistName::Minus)})) {
            if (f.params.a == a && f.params.b == 2) {
                found = true;
                CHECK(f.j_label == "C_6 x C_6");
            }
        }
        CHECK(found);
    }
    auto rho = enumerate_supports({GroupFamily::PSO_even, 6, tw(TwistName::Rho)});
    REQUIRE(rho.size() == 1);
    CHECK(rho[0].params.a == 3);
    CHECK(rho[0].params.b == 0);
    CHECK(rho[0].j_label == "^2A_5");
    CHECK(rho[0].lambda.partition() == Partition{5, 5, 1, 1});
}

TEST_CASE("PSO rho: the two lambda branches agree at b = 0") {
    // The branch 2b > a is vacuous at b = 0, so only one formula applies there;
    // evaluate the other branch by hand and compare.
    CHECK(dual_orbit_partition({SupportCase::PsoRho, 3, 0}, 6) == Partition{5, 5, 1, 1});
    CHECK(dual_orbit_partition({SupportCase::PsoRho, 4, 0}, 10) == Partition{7, 7, 3, 3});
}

TEST_CASE("support invariants up to n = 50") {
    for (auto family : {GroupFamily::PGL, GroupFamily::SO_odd, GroupFamily::PSp,
                        GroupFamily::PSO_even}) {
        for (int n = 1; n <= 50; ++n) {
            for (const auto& w : twists_of(family, n)) {
                for (const auto& f : enumerate_supports({family, n, w})) {
                    INFO(f.id());
                    REQUIRE(f.lambda.rank() == n);
                    REQUIRE(f.lambda.partition().total() == dual_total(family, n));
                    REQUIRE(is_valid(f.lambda.partition(), f.lambda.kind()));
                    int total = 0;
                    for (const auto& c : f.wf_components) total += c.contribution();
                    REQUIRE(total == wf_total(family, n));
                    if (family != GroupFamily::PGL) {
                        REQUIRE(rank_of(f.params.which, f.params.a, f.params.b, w) == n);
                        REQUIRE(f.marking_index.has_value());
                    }
                }
            }
        }
    }
}

TEST_CASE("exceptional table") {
    const auto& rows = exceptional_rows();
    REQUIRE(rows.size() == 7);
    std::size_t sigmas = 0;
    for (const auto& r : rows) {
        sigmas += r.sigma_names.size();
        if (r.duality_fact.self_dual) CHECK(r.wf_label == r.dual_orbit_label);
    }
    CHECK(sigmas == 4 + 7 + 2 + 2 + 2 + 3 + 13);
    CHECK(rows.back().group.family == GroupFamily::E8);
    CHECK(rows.back().sigma_names.size() == 13);

    const auto& e6 = rows[3];
    REQUIRE(e6.partition_alias.has_value());
    CHECK(e6.partition_alias->partition == Partition{3, 3, 1, 1});
    CHECK(e6.partition_alias->label == "A_2");
    CHECK(e6.twists.size() == 2);

    CHECK(rows[5].duality_fact.to_string() == "pair(D_4(a_1))");
    CHECK(exceptional_bv_dual(GroupFamily::E6, "E_6(a_3)") == "A_2");
    CHECK(exceptional_bv_dual(GroupFamily::E7, "E_7(a_5)") == "D_4(a_1)");
    CHECK(exceptional_bv_dual(GroupFamily::G2, "G_2(a_1)") == "G_2(a_1)");
    CHECK_FALSE(exceptional_bv_dual(GroupFamily::F4, "B_3").has_value());
    CHECK(bala_carter_alias(GroupFamily::E6, "D_4", Partition{3, 3, 1, 1}) == "A_2");
}
