#pragma once

#include <optional>
#include <string>

#include "hyperring/partition.hpp"

namespace hyperring {

// Target axioms for the quotient of the smallest strongly regular equivalence.
struct QuotientAxioms {
    bool add_commutative = false;
    bool mul_commutative = false;
    std::optional<ElementId> unit_class_of;

    bool operator==(const QuotientAxioms& o) const {
        return add_commutative == o.add_commutative && mul_commutative == o.mul_commutative &&
               unit_class_of == o.unit_class_of;
    }
};

// Smallest equivalence that is strongly regular for both operations and
// whose quotient satisfies `ax`, computed as a union-find fixpoint:
//   (a) each hyperproduct value collapses into one class;
//   (b) class-level well-definedness: equal elements give blockwise equal
//       translates (strong regularity);
//   (c,d) requested commutativity merges x o y with y o x;
//   (e) a requested unit class merges x with x*e and e*x.
// Each rule only merges consequences forced in every qualifying relation,
// and the fixpoint itself qualifies, so it is the least one.
inline Partition smallest_regular(const Hyperring& R, const QuotientAxioms& ax) {
    if (ax.unit_class_of && (*ax.unit_class_of < 0 || *ax.unit_class_of >= R.q))
        throw InputError("unit element out of range");
    Partition p(R.q);
    auto merge_cells = [&](const SubsetMask& a, const SubsetMask& b) {
        return p.merge(a.lowest(), b.lowest());
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (bool mult : {false, true}) {
            const HyperOp& op = R.op(mult);
            for (ElementId x = 0; x < R.q; ++x)
                for (ElementId y = 0; y < R.q; ++y) {
                    const SubsetMask& cell = op.at(x, y);
                    const ElementId first = cell.lowest();
                    cell.for_each([&](ElementId z) { changed |= p.merge(first, z); });
                }
        }
        for (ElementId x = 0; x < R.q; ++x)
            for (ElementId x2 = x + 1; x2 < R.q; ++x2) {
                if (!p.same(x, x2)) continue;
                for (ElementId a = 0; a < R.q; ++a)
                    for (bool mult : {false, true}) {
                        const HyperOp& op = R.op(mult);
                        changed |= merge_cells(op.at(x, a), op.at(x2, a));
                        changed |= merge_cells(op.at(a, x), op.at(a, x2));
                    }
            }
        if (ax.add_commutative)
            for (ElementId x = 0; x < R.q; ++x)
                for (ElementId y = x + 1; y < R.q; ++y)
                    changed |= merge_cells(R.plus.at(x, y), R.plus.at(y, x));
        if (ax.mul_commutative)
            for (ElementId x = 0; x < R.q; ++x)
                for (ElementId y = x + 1; y < R.q; ++y)
                    changed |= merge_cells(R.times.at(x, y), R.times.at(y, x));
        if (ax.unit_class_of) {
            const ElementId e = *ax.unit_class_of;
            for (ElementId x = 0; x < R.q; ++x) {
                R.times.at(x, e).for_each([&](ElementId z) { changed |= p.merge(x, z); });
                R.times.at(e, x).for_each([&](ElementId z) { changed |= p.merge(x, z); });
            }
        }
    }
    return p;
}

enum class StarredKind { GammaStar, AlphaStar, LambdaStar, BigLambdaStar };

inline bool starred_needs_e(StarredKind k) {
    return k == StarredKind::LambdaStar || k == StarredKind::BigLambdaStar;
}

inline const char* starred_name(StarredKind k) {
    switch (k) {
        case StarredKind::GammaStar: return "gamma-star";
        case StarredKind::AlphaStar: return "alpha-star";
        case StarredKind::LambdaStar: return "lambda-star-e";
        case StarredKind::BigLambdaStar: return "Lambda-star-e";
    }
    return "?";
}

inline std::optional<StarredKind> starred_from_string(const std::string& s) {
    for (StarredKind k : {StarredKind::GammaStar, StarredKind::AlphaStar, StarredKind::LambdaStar,
                          StarredKind::BigLambdaStar})
        if (s == starred_name(k)) return k;
    if (s == "big-lambda-star-e") return StarredKind::BigLambdaStar;
    return std::nullopt;
}

// Axiom preset for each fundamental relation. The unit presets include
// additive commutativity, which a unital distributive quotient forces anyway.
inline QuotientAxioms starred_axioms(StarredKind kind, std::optional<ElementId> e = std::nullopt) {
    if (starred_needs_e(kind) && !e)
        throw InputError(std::string(starred_name(kind)) + " requires an element e");
    switch (kind) {
        case StarredKind::GammaStar: return {};
        case StarredKind::AlphaStar: return {true, true, std::nullopt};
        case StarredKind::LambdaStar: return {true, false, e};
        case StarredKind::BigLambdaStar: return {true, true, e};
    }
    return {};
}

inline Partition starred(const Hyperring& R, StarredKind kind,
                         std::optional<ElementId> e = std::nullopt) {
    return smallest_regular(R, starred_axioms(kind, e));
}

}  // namespace hyperring
