#include "doctest.h"
#include "dpz/surface.hpp"
#include "dpz/weyl.hpp"

#include <random>

using namespace dpz;

TEST_CASE("surface registry and lattice invariants") {
    CHECK(Surface::ids().size() == 10);
    CHECK_THROWS_AS(Surface::get("X9"), std::invalid_argument);
    for (const auto& id : Surface::ids()) {
        const Surface& s = Surface::get(id);
        CAPTURE(id);
        const int n = s.blowups() < 0 ? 1 : s.blowups();
        CHECK(s.K2() == (s.blowups() < 0 ? 8 : 9 - n));
        CHECK(s.dot(s.canonical_class(), s.canonical_class()) == s.K2());
        for (const auto& rho : s.simple_roots()) {
            CHECK(s.dot(rho, rho) == -2);
            CHECK(s.dot(rho, s.canonical_class()) == 0);
        }
        CHECK(s.even_lattice() == (id == "P1xP1"));
    }
    CHECK_THROWS_AS(Surface::get("P2").dot({1, 0}, {1}), std::invalid_argument);
}

TEST_CASE("euler form") {
    const Surface& p2 = Surface::get("P2");
    const NumClass o{1, {0}, 1}, o1{1, {1}, 3}, o2{1, {2}, 6};
    CHECK(euler_form(o, o1, p2) == 3);
    CHECK(euler_form(o1, o1, p2) == 1);
    CHECK(euler_form(o2, o1, p2) == 0);
    CHECK(euler_form(o, o2, p2) == 6);
    const Surface& x8 = Surface::get("X8");
    const NumClass e = make_exceptional(4, {15, -3, -3, -3, -3, -3, -3, -2, -2}, x8);
    CHECK(euler_form(e, e, x8) == 1);
}

TEST_CASE("make_exceptional") {
    CHECK(make_exceptional(1, {1}, Surface::get("P2")).chi == 3);
    CHECK(make_exceptional(1, {0, 0}, Surface::get("P1xP1")).chi == 1);
    CHECK(make_exceptional(2, {3}, Surface::get("P2")).chi == 8);
    // No integral Euler characteristic makes (2, 0) exceptional on P2.
    CHECK_THROWS_AS(make_exceptional(2, {0}, Surface::get("P2")), std::domain_error);
    CHECK_THROWS_AS(make_exceptional(1, {0, 0}, Surface::get("P2")), std::invalid_argument);
}

TEST_CASE("degree and slope") {
    const Surface& p2 = Surface::get("P2");
    const NumClass o1{1, {1}, 3};
    CHECK(degree(o1, p2) == 3);
    CHECK(slope(o1, p2) == Slope::of(3, 1));
    CHECK(degree(NumClass{2, {0}, 2}, p2) == 0);
    CHECK(degree(NumClass{1, {0, 1}, 2}, Surface::get("P1xP1")) == 2);
    CHECK(Slope::of(5, 0).infinite);
    CHECK(Slope::of(1000, 1) < Slope::of(1, 0));
    CHECK(Slope::of(3, 2) == Slope::of(6, 4));
    CHECK(Slope::of(3, 1).plus(9) == Slope::of(12, 1));
}

TEST_CASE("twists and sign normalization") {
    const Surface& p2 = Surface::get("P2");
    const NumClass o{1, {0}, 1};
    CHECK(twist(o, {2}, p2) == NumClass{1, {2}, 6});
    CHECK(twist_canonical(o, 1, p2) == NumClass{1, {-3}, 1});
    CHECK(twist_canonical(twist_canonical(o, 1, p2), -1, p2) == o);
    CHECK(normalize_sign(-1 * NumClass{2, {3}, 8}, p2) == NumClass{2, {3}, 8});
    const Surface& x1 = Surface::get("X1");
    CHECK(normalize_sign(NumClass{0, {0, -1}, -1}, x1).c1 == Vec{0, 1});
}

TEST_CASE("root reflections") {
    const Surface& x2 = Surface::get("X2");
    CHECK(reflect({0, 1, -1}, {0, 1, 0}, x2) == Vec{0, 0, 1});
    for (const auto& id : Surface::ids()) {
        const Surface& s = Surface::get(id);
        for (const auto& rho : s.simple_roots()) CHECK(reflect(rho, s.canonical_class(), s) == s.canonical_class());
    }
    const Surface& x3 = Surface::get("X3");
    CHECK(reflect({1, -1, -1, -1}, {1, 0, 0, 0}, x3) == Vec{2, -1, -1, -1});
    CHECK_THROWS_AS(reflect({1, 0, 0, 0}, {1, 0, 0, 0}, x3), std::invalid_argument);
}

TEST_CASE("Weyl words") {
    const Surface& x2 = Surface::get("X2");
    const NumClass e{1, {0, 1, 0}, 1};
    CHECK(weyl_apply({}, e, x2) == e);
    const NumClass swapped = weyl_apply({0}, e, x2);
    CHECK(swapped.c1 == Vec{0, 0, 1});
    CHECK(swapped.chi == e.chi);

    std::mt19937_64 rng(11);
    const Surface& x6 = Surface::get("X6");
    const NumClass f = make_exceptional(2, {5, -1, -1, -1, -1, -2, -2}, x6);
    for (int k = 0; k < 200; ++k) {
        std::vector<int> word(1 + rng() % 10);
        for (auto& w : word) w = static_cast<int>(rng() % x6.simple_roots().size());
        const NumClass g = weyl_apply(word, f, x6, 0);
        CHECK(degree(g, x6) == degree(f, x6));
        CHECK(euler_form(g, g, x6) == 1);
    }
}

TEST_CASE("published reflection index translation") {
    const Surface& x4 = Surface::get("X4");
    CHECK(simple_root_position(x4, 1, 0) == 3);
    CHECK(simple_root_position(x4, 3, 0) == 1);
    CHECK(simple_root_position(x4, 2, 0) == 2);
    CHECK(simple_root_position(Surface::get("X7"), 0, 0) == 1);
    CHECK(simple_root_position(Surface::get("X7"), 1, 0) == 0);
    CHECK(simple_root_position(Surface::get("X7"), 2, 1) == 1);
    CHECK_THROWS_AS(simple_root_position(x4, 9, 0), std::out_of_range);
}

TEST_CASE("Weyl group orders") {
    // |W(E_n)| for the root systems A1, A1xA2, A4, D5, E6, E7, E8.
    const std::vector<std::pair<std::string, long long>> expected = {
        {"P2", 1},     {"P1xP1", 2},     {"X1", 1},         {"X2", 2},          {"X3", 12},         {"X4", 120},
        {"X5", 1920}, {"X6", 51840}, {"X7", 2903040}, {"X8", 696729600}};
    for (const auto& [id, order] : expected) {
        CAPTURE(id);
        CHECK(weyl_group_order(Surface::get(id)) == BigInt(order));
    }
    CHECK(root_system(Surface::get("X6")).size() == 72);
    CHECK(root_system(Surface::get("X8")).size() == 240);
}
