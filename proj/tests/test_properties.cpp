#include "doctest.h"
#include "testkit.hpp"

using namespace dpz;
using namespace dpz::testkit;

namespace {

void require(const PropertyResult& r, int min_cases) {
    INFO(r.name << ": " << r.failures << " failures, first: " << r.first_failure);
    CHECK(r.cases >= min_cases);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("braid group relations") {
    Rng rng(101);
    require(prop_braid_relations(rng, 300), 300);
}

TEST_CASE("Plucker identity on block quivers") {
    Rng rng(102);
    require(prop_plucker(rng, 300), 300);
}

TEST_CASE("vertex primitivity") {
    Rng rng(103);
    require(prop_vertex_primitivity(rng, 300), 300);
}

TEST_CASE("area equals sum of squared ranks") {
    Rng rng(104);
    require(prop_area(rng, 300), 300);
}

TEST_CASE("convexity iff very strong") {
    Rng rng(105);
    require(prop_convexity(rng, 200), 200 * 10);
}

TEST_CASE("toric system identities") {
    Rng rng(106);
    require(prop_toric(rng, 300), 300);
}

TEST_CASE("Gram invariance under Weyl group and twists") {
    Rng rng(107);
    require(prop_gram_invariance(rng, 300), 300);
}

TEST_CASE("polygon braid moves follow collection braid moves") {
    Rng rng(108);
    require(prop_polygon_braid(rng, 300), 300);
}

TEST_CASE("left and right quiver mutations are inverse") {
    Rng rng(109);
    require(prop_mutation_inverse(rng, 300), 300);
}

TEST_CASE("DWZ mutation is an involution") {
    Rng rng(110);
    require(prop_dwz_involution(rng, 300), 300);
}

TEST_CASE("quiver mutation cross-checks") {
    Rng rng(111);
    require(prop_mutation_consistency(rng, 600), 600);
}

TEST_CASE("mutation reduction ends in published collections") {
    Rng rng(112);
    require(prop_reduced_samples(rng, 500), 500);
}
