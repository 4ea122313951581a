#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hyperring/oracle.hpp"

using namespace hyperring;
using testutil::partition_of;

namespace {

std::string signature(const Partition& p) {
    std::string s;
    for (const SubsetMask& c : p.classes()) s += to_string(c);
    return s;
}

}  // namespace

TEST_CASE("partition iterator yields Bell(q) distinct partitions") {
    const std::vector<std::uint64_t> bell{1, 2, 5, 15, 52, 203, 877};
    for (int q = 1; q <= 7; ++q) {
        PartitionIterator it(q);
        Partition p;
        std::set<std::string> seen;
        std::uint64_t n = 0;
        while (it.next(p)) {
            ++n;
            seen.insert(signature(p));
        }
        CHECK(n == bell[static_cast<std::size_t>(q - 1)]);
        CHECK(seen.size() == n);
    }
}

TEST_CASE("the scan starts coarse and reaches the discrete partition") {
    PartitionIterator it(3);
    Partition p;
    REQUIRE(it.next(p));
    CHECK(p.class_count() == 1);  // all-zero growth string
    bool saw_discrete = false;
    while (it.next(p)) saw_discrete = saw_discrete || p.class_count() == 3;
    CHECK(saw_discrete);
}

TEST_CASE("minimal partitions match the spec examples") {
    const Hyperring z2 = make_catalog("ring-as-hyperring:z2");
    CHECK(minimal_partition(z2, QuotientAxioms{true, false, 1}) == partition_of(2, {{0}, {1}}));

    const Hyperring t3 = make_catalog("total:3");
    CHECK(minimal_partition(t3, QuotientAxioms{}) == partition_of(3, {{0, 1, 2}}));

    const Hyperring coset = make_catalog("coset-hyperring:z4:0,2");
    CHECK(minimal_partition(coset, QuotientAxioms{}) == partition_of(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("oracle refuses carriers above the cap") {
    const Hyperring ut8 = ring_as_hyperring(upper_triangular8_ring());
    CHECK_THROWS_AS(minimal_partition(ut8, QuotientAxioms{}), InputError);
}

TEST_CASE("engine, oracle and generators agree on the whole catalog") {
    for (const auto& entry : standard_catalog()) {
        const CrossValidationReport rep = cross_validate(entry.structure);
        INFO(entry.spec);
        CHECK(rep.all_agree);
        for (const auto& en : rep.entries) {
            CHECK(en.oracle_matches_engine);
            CHECK(en.generator_matches_engine);
            CHECK(en.generator_stabilized);
        }
    }
}

TEST_CASE("generator pairs stay inside the fundamental partition at every bound") {
    for (const auto& entry : testutil::small_catalog()) {
        const Hyperring& R = entry.structure;
        const Relation gamma_star = starred(R, StarredKind::GammaStar).to_relation();
        for (int r = 1; r <= 3; ++r)
            CHECK(generate(R, RelationKind::Gamma, Bounds{r, r, r}).subset_of(gamma_star));
        for (ElementId e = 0; e < R.q; ++e) {
            const Relation lam_star = starred(R, StarredKind::LambdaStar, e).to_relation();
            for (int r = 1; r <= 3; ++r)
                CHECK(generate(R, RelationKind::Lambda, Bounds{r, r, r}, e).subset_of(lam_star));
        }
    }
}
