#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "naive_gen.hpp"
#include "hyperring/generate.hpp"

using namespace hyperring;

namespace {

const std::vector<RelationKind> kAllKinds{
    RelationKind::Beta,       RelationKind::Gamma,  RelationKind::AlphaPlus,
    RelationKind::AlphaTimes, RelationKind::Alpha,  RelationKind::AlphaUnion,
    RelationKind::LambdaTimes, RelationKind::Lambda, RelationKind::BigLambda};

}  // namespace

TEST_CASE("fast generator agrees with the literal enumeration") {
    const std::vector<Bounds> bounds{{2, 2, 2}, {3, 2, 1}, {2, 3, 2}};
    for (const auto& entry : testutil::small_catalog()) {
        const Hyperring& R = entry.structure;
        for (const Bounds& b : bounds)
            for (RelationKind kind : kAllKinds) {
                if (kind_needs_e(kind)) {
                    for (ElementId e = 0; e < R.q; ++e) {
                        INFO(entry.spec << " " << kind_name(kind) << " e=" << e);
                        CHECK(generate(R, kind, b, e) == testutil::naive_generate(R, kind, b, e));
                    }
                } else {
                    INFO(entry.spec << " " << kind_name(kind));
                    CHECK(generate(R, kind, b) == testutil::naive_generate(R, kind, b));
                }
            }
    }
}

TEST_CASE("generator output is always reflexive and symmetric") {
    for (const auto& entry : testutil::small_catalog())
        for (RelationKind kind : kAllKinds) {
            const Relation rel = generate(entry.structure, kind, Bounds{2, 2, 1},
                                          kind_needs_e(kind) ? std::optional<ElementId>{0} : std::nullopt);
            CHECK(rel.reflexive());
            CHECK(rel.symmetric());
        }
}

TEST_CASE("bounded generators match hand-derived relations") {
    const Hyperring t2 = make_catalog("total:2");
    CHECK(generate(t2, RelationKind::Gamma, Bounds{2, 2, 1}) == Relation::full(2));

    const Hyperring z2 = make_catalog("ring-as-hyperring:z2");
    CHECK(generate(z2, RelationKind::AlphaPlus, Bounds{2, 2, 1}) == Relation::diagonal(2));
    CHECK(generate(z2, RelationKind::LambdaTimes, Bounds{2, 2, 1}, 1) == Relation::diagonal(2));

    // splicing the z4 unit never moves a singleton value
    const Hyperring z4 = make_catalog("ring-as-hyperring:z4");
    CHECK(generate(z4, RelationKind::LambdaTimes, Bounds{2, 3, 2}, 1) == Relation::diagonal(4));

    // splicing 3 relates x to 3x: pairs (1,3) and the forced (0,2) at two terms
    Relation expected = Relation::diagonal(4);
    expected.add_symmetric(1, 3);
    expected.add_symmetric(0, 2);
    CHECK(transitive_closure(generate(z4, RelationKind::Lambda, Bounds{2, 2, 1}, 3)) == expected);
}

TEST_CASE("larger bounds only add pairs") {
    for (const auto& entry : testutil::small_catalog())
        for (RelationKind kind : kAllKinds) {
            const std::optional<ElementId> e =
                kind_needs_e(kind) ? std::optional<ElementId>{1 % entry.structure.q} : std::nullopt;
            const Relation small = generate(entry.structure, kind, Bounds{1, 1, 1}, e);
            const Relation mid = generate(entry.structure, kind, Bounds{2, 2, 2}, e);
            const Relation large = generate(entry.structure, kind, Bounds{3, 2, 2}, e);
            CHECK(small.subset_of(mid));
            CHECK(mid.subset_of(large));
        }
}

TEST_CASE("splice relation grows monotonically with the term level") {
    for (const auto& entry : testutil::small_catalog())
        for (ElementId e = 0; e < entry.structure.q; ++e)
            for (int m = 1; m <= 3; ++m) {
                const Relation lo = generate(entry.structure, RelationKind::LambdaTimes, Bounds{m, 2, 1}, e);
                const Relation hi = generate(entry.structure, RelationKind::LambdaTimes, Bounds{m + 1, 2, 1}, e);
                CHECK(lo.subset_of(hi));
            }
}

TEST_CASE("exact-level splice relations are nested") {
    const Bounds b{4, 2, 1};
    for (const auto& entry : testutil::small_catalog(3))
        for (ElementId e = 0; e < entry.structure.q; ++e)
            for (int m = 1; m <= 3; ++m) {
                const Relation lo = generate_level(entry.structure, RelationKind::LambdaTimes, m, b, e);
                const Relation hi = generate_level(entry.structure, RelationKind::LambdaTimes, m + 1, b, e);
                INFO(entry.spec << " e=" << e << " m=" << m);
                CHECK(lo.subset_of(hi));
            }
}

TEST_CASE("kind algebra: unions and containments") {
    const Bounds b{2, 2, 1};
    for (const auto& entry : testutil::small_catalog()) {
        const Hyperring& R = entry.structure;
        Relation uni = generate(R, RelationKind::AlphaPlus, b);
        uni |= generate(R, RelationKind::AlphaTimes, b);
        CHECK(generate(R, RelationKind::AlphaUnion, b) == uni);
        CHECK(uni.subset_of(generate(R, RelationKind::Alpha, b)));
        CHECK(generate(R, RelationKind::Gamma, b).subset_of(generate(R, RelationKind::AlphaPlus, b)));
        CHECK(generate(R, RelationKind::Beta, b).subset_of(generate(R, RelationKind::Gamma, b)));
    }
}

TEST_CASE("saturation stabilizes on the catalog") {
    const Hyperring t3 = make_catalog("total:3");
    const SaturationResult sat = saturated_generate(t3, RelationKind::Gamma);
    CHECK(sat.stabilized);
    CHECK(Partition::from_relation(sat.closed).class_count() == 1);

    const Hyperring z2 = make_catalog("ring-as-hyperring:z2");
    const SaturationResult lam = saturated_generate(z2, RelationKind::Lambda, 1);
    CHECK(lam.stabilized);
    CHECK(lam.closed == Relation::diagonal(2));

    const Hyperring coset = make_catalog("coset-hyperring:z4:0,2");
    const SaturationResult gam = saturated_generate(coset, RelationKind::Gamma);
    CHECK(gam.stabilized);
    CHECK(Partition::from_relation(gam.closed) ==
          testutil::partition_of(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("saturated closures are strongly regular") {
    for (const auto& entry : testutil::small_catalog())
        for (RelationKind kind : kAllKinds) {
            if (kind_needs_e(kind)) {
                for (ElementId e = 0; e < entry.structure.q; ++e) {
                    const SaturationResult sat = saturated_generate(entry.structure, kind, e);
                    REQUIRE(sat.stabilized);
                    CHECK(is_strongly_regular(entry.structure, sat.closed));
                }
            } else {
                const SaturationResult sat = saturated_generate(entry.structure, kind);
                REQUIRE(sat.stabilized);
                CHECK(is_strongly_regular(entry.structure, sat.closed));
            }
        }
}

TEST_CASE("round cap reports a non-stabilized result") {
    const Hyperring coset = make_catalog("coset-hyperring:z4:0,2");
    const SaturationResult sat = saturated_generate(coset, RelationKind::Gamma, std::nullopt, 1);
    CHECK_FALSE(sat.stabilized);
    CHECK(sat.rounds == 1);
}

TEST_CASE("lambda kinds demand an element") {
    const Hyperring z2 = make_catalog("ring-as-hyperring:z2");
    CHECK_THROWS_AS(generate(z2, RelationKind::Lambda, Bounds{2, 2, 1}), InputError);
    CHECK_THROWS_AS(generate(z2, RelationKind::LambdaTimes, Bounds{2, 2, 1}, 9), InputError);
}
