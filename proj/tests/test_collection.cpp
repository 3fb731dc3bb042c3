#include "doctest.h"
#include "testkit.hpp"

using namespace dpz;
using namespace dpz::testkit;

namespace {

Collection p1p1(std::vector<Vec> c1s) {
    const Surface& s = Surface::get("P1xP1");
    std::vector<NumClass> objs;
    for (const auto& c1 : c1s) objs.push_back(make_exceptional(1, c1, s));
    return Collection(s, objs);
}

}  // namespace

TEST_CASE("Gram matrices") {
    const Collection c = p2_standard();
    CHECK(gram_matrix(c) == Matrix{{1, 3, 6}, {0, 1, 3}, {0, 0, 1}});
    CHECK(gram_matrix(Collection(c.surf(), {c[1]})) == Matrix{{1}});

    const FixtureEntry& e = fixture("P1xP1", 3, 2);
    CHECK(with_blocks(e.collection).blocks == std::vector<int>{1, 2, 1});
    CHECK(reduced_gram(e.collection) == Matrix{{1, 2, 4}, {0, 1, 2}, {0, 0, 1}});
}

TEST_CASE("validation") {
    const Collection c = p2_standard();
    CHECK_NOTHROW(validate(c));
    CHECK(is_exceptional(c));
    const Collection reversed(c.surf(), {c[2], c[1], c[0]});
    CHECK_FALSE(is_exceptional(reversed));
    CHECK_THROWS_AS(validate(reversed), std::invalid_argument);
    CHECK_THROWS_AS(validate(Collection(c.surf(), {c[0], c[1]})), std::invalid_argument);
    CHECK_NOTHROW(validate(Collection(c.surf(), {c[0], c[1]}), false));
    CHECK_THROWS_AS(validate(Collection(c.surf(), c.objects, {1, 1})), std::invalid_argument);
}

TEST_CASE("very strong collections") {
    CHECK(is_very_strong(p2_standard()));
    // Degrees 4, 6, 2: the slope chain breaks at the third object.
    const Collection broken = p1p1({{0, 2}, {0, 3}, {1, 0}, {1, 1}});
    CHECK(is_exceptional(broken));
    CHECK_FALSE(is_very_strong(broken));
    const Collection fixture_c = fixture("P1xP1", 3, 2).collection;
    CHECK(braid_right(braid_right(fixture_c, 1), 1).objects == broken.objects);
    // Wrap condition: mu(E_{n-1}) <= mu(E_0) + K^2 fails for slopes 0, 3, 12 on P2.
    const Surface& p2 = Surface::get("P2");
    CHECK_FALSE(is_very_strong(Collection(p2, {NumClass{1, {0}, 1}, NumClass{1, {1}, 3}, NumClass{1, {4}, 15}})));
}

TEST_CASE("braid moves") {
    const Collection c = p2_standard();
    const Collection r = braid_right(c, 1);
    CHECK(r.objects == std::vector<NumClass>{NumClass{1, {1}, 3}, NumClass{2, {3}, 8}, NumClass{1, {2}, 6}});
    for (int i = 1; i <= 3; ++i) {
        CHECK(braid_left(braid_right(c, i), i).objects == c.objects);
        CHECK(braid_right(braid_left(c, i), i).objects == c.objects);
    }
    CHECK(braid_left(braid_left(braid_left(c, 1), 2), 1).objects == braid_left(braid_left(braid_left(c, 2), 1), 2).objects);
    CHECK(is_exceptional(braid_left(c, 3)));
    CHECK_THROWS_AS(braid_left(c, 0), std::out_of_range);
}

TEST_CASE("rotations") {
    const Collection c = p2_standard();
    CHECK(rotate_left(rotate_right(c)).objects == c.objects);
    CHECK(rotate_right(rotate_left(c)).objects == c.objects);
    const Collection three = rotate_left(rotate_left(rotate_left(c)));
    CHECK(three.objects == std::vector<NumClass>{NumClass{1, {-3}, 1}, NumClass{1, {-2}, 0}, NumClass{1, {-1}, 0}});

    for (const auto& sf : fixtures())
        for (const auto& e : sf.entries) {
            const Collection& d = e.collection;
            const int n = d.size();
            const Matrix g = gram_matrix(d);
            const Matrix rg = gram_matrix(rotate_left(d));
            for (int i = 0; i + 1 < n; ++i)
                for (int j = 0; j + 1 < n; ++j) CHECK(rg[i + 1][j + 1] == g[i][j]);
            for (int j = 0; j + 1 < n; ++j)
                CHECK(rg[0][j + 1] == euler_form(d[n - 1], twist_canonical(d[j], -1, d.surf()), d.surf()));
        }
}

TEST_CASE("dual collections") {
    const Collection c = p2_standard();
    CHECK(dual_right(c) == std::vector<NumClass>{NumClass{1, {3}, 10}, NumClass{-2, {-5}, -15}, NumClass{1, {2}, 6}});
    const Collection single(c.surf(), {c[0]});
    CHECK(dual_right(single) == single.objects);
    CHECK(dual_left(single) == single.objects);

    for (const auto& sf : fixtures())
        for (const auto& e : sf.entries) {
            const Collection& d = e.collection;
            const Surface& s = d.surf();
            const int n = d.size();
            const auto f = dual_right(d);
            const auto g = dual_left(d);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    CHECK(euler_form(f[j], d[i], s) == (i == j));
                    CHECK(euler_form(d[i], g[j], s) == (i == j));
                }
            CHECK(f[n - 1] == d[n - 1]);
            CHECK(normalize_sign(f[0], s) == twist_canonical(d[0], -1, s));
            CHECK(g[0] == d[0]);
            CHECK(normalize_sign(g[n - 1], s) == twist_canonical(d[n - 1], 1, s));
        }
}

TEST_CASE("block detection") {
    const Collection c = fixture("P1xP1", 3, 2).collection;
    const BlockInfo info = detect_blocks(c);
    CHECK(info.sizes == std::vector<int>{1, 2, 1});
    CHECK_FALSE(info.broken);
    CHECK(detect_blocks(braid_right(p2_standard(), 1)).sizes == std::vector<int>{1, 1, 1});
    // Rotating by two splits the size-two block across the end.
    const BlockInfo split = detect_blocks(rotate_right(rotate_right(c)));
    CHECK(split.broken);
    CHECK(canonical_rotation(block_data(rotate_right(rotate_right(c)))) == canonical_rotation(block_data(c)));
}

TEST_CASE("line bundle twists") {
    const Collection c = p2_standard();
    const Collection t = tensor_line_bundle(c, {1});
    CHECK(gram_matrix(t) == gram_matrix(c));
    CHECK(tensor_line_bundle(c, {0}).objects == c.objects);
    for (int i = 0; i < 3; ++i) CHECK(slope(t[i], c.surf()) == slope(c[i], c.surf()).plus(3));
}

TEST_CASE("equivalence") {
    const Collection c = p2_standard();
    CHECK(equivalent(c, rotate_left(c)));
    CHECK(equivalent(c, tensor_line_bundle(c, {1})));
    CHECK_FALSE(equivalent(c, quiver_mutate_right(c, 0).collection));

    const Collection d = fixture("P1xP1", 3, 2).collection;
    const Collection swapped(d.surf(), {d[0], d[2], d[1], d[3]});
    CHECK(equivalent(d, swapped));
    std::vector<NumClass> negated;
    for (const auto& e : d.objects) negated.push_back(-1 * e);
    const auto w = equivalent(d, Collection(d.surf(), negated));
    REQUIRE(w);
    CHECK(w->sign == -1);
    CHECK_FALSE(equivalent(d, p2_standard()));
}

TEST_CASE("Serre matrices") {
    const SerreResult s = serre_matrix(gram_matrix(p2_standard()));
    CHECK(s.unipotent);
    CHECK(s.rank_minus_identity == 2);
    CHECK(s.plausible());
    const SerreResult id = serre_matrix(Matrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(id.s == identity(3));
    CHECK(id.rank_minus_identity == 0);
    CHECK_FALSE(serre_matrix(Matrix{{1, 1, 1}, {0, 1, 5}, {0, 0, 1}}).unipotent);
    CHECK_FALSE(serre_matrix(Matrix{{1, 2, 3}, {0, 1, 2}, {0, 0, 1}}).plausible());
    CHECK_THROWS_AS(serre_matrix(Matrix{{0, 0}, {0, 0}}), std::domain_error);
    for (const auto& sf : fixtures())
        for (const auto& e : sf.entries) CHECK(serre_matrix(gram_matrix(e.collection)).plausible());
}

TEST_CASE("block data and reduced Gram reconstruction") {
    for (const auto& sf : fixtures())
        for (const auto& e : sf.entries) {
            CAPTURE(e.label.str());
            const auto data = block_data(e.collection);
            const auto m = reduced_gram_from_data(data);
            REQUIRE(m);
            CHECK(*m == e.reduced_gram);
            CHECK(expand_reduced_gram(e.reduced_gram, e.alphas) == gram_matrix(e.collection));
            CHECK(rank_zero_lattice_even(gram_matrix(e.collection), e.collection.ranks()) == (sf.surface == "P1xP1"));
        }
}
