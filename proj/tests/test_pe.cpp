#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hyperring/pe.hpp"

using namespace hyperring;

namespace {

std::set<std::string> partner_strings(const SumOfProducts& e, ElementId unit, const Bounds& b) {
    std::set<std::string> out;
    for_each_pe_partner(e, unit, b, [&](const PeWitness& w) {
        out.insert(format_expr(w.left) + " -> " + format_expr(w.right));
    });
    return out;
}

}  // namespace

TEST_CASE("partners of a single symbol include left and right splices") {
    const SumOfProducts x{{{3}}};
    const auto partners = partner_strings(x, 7, Bounds{1, 2, 1});
    CHECK(partners.count("3 -> 3"));      // identity
    CHECK(partners.count("3 -> 7*3"));    // block before
    CHECK(partners.count("3 -> 3*7"));    // block after
    CHECK(partners.size() == 3);
}

TEST_CASE("contraction is the reverse of insertion") {
    const SumOfProducts ex{{{7, 3}}};
    const auto partners = partner_strings(ex, 7, Bounds{1, 2, 1});
    CHECK(partners.count("3 -> 7*3"));  // left is the contracted expression
    // no expansion fits: 2 factors is already the bound
    CHECK(partners.size() == 2);
}

TEST_CASE("multi-term splice hits every chosen term once") {
    const SumOfProducts e{{{1}, {2}}};
    const auto partners = partner_strings(e, 0, Bounds{2, 2, 1});
    CHECK(partners.count("1+2 -> 0*1+0*2"));
    CHECK(partners.count("1+2 -> 1*0+2*0"));
    CHECK(partners.count("1+2 -> 0*1+2"));
    CHECK(partners.count("1+2 -> 1+2*0"));
}

TEST_CASE("insertion metadata reconstructs the right-hand expression") {
    // every witness over a small universe round-trips through apply_insertions
    for_each_expression(3, Bounds{2, 3, 2}, [&](const SumOfProducts& expr) {
        for_each_pe_partner(expr, 1, Bounds{2, 3, 2}, [&](const PeWitness& w) {
            CHECK(apply_insertions(w.left, 1, w.insertions) == w.right);
        });
    });
}

TEST_CASE("expanded factor counts respect the bounds") {
    for_each_expression(2, Bounds{2, 3, 2}, [&](const SumOfProducts& expr) {
        for_each_pe_partner(expr, 1, Bounds{2, 3, 2}, [&](const PeWitness& w) {
            for (const Product& t : w.right.terms) CHECK(t.size() <= 3);
            for (const auto& ins : w.insertions) CHECK(ins.length() <= 2);
        });
    });
}

TEST_CASE("block lengths over the run bound are not generated") {
    const SumOfProducts x{{{0}}};
    const auto partners = partner_strings(x, 1, Bounds{1, 4, 1});
    CHECK(partners.count("0 -> 1*0"));
    CHECK_FALSE(partners.count("0 -> 1*1*0"));
}
