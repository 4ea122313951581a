#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/closure.hpp"
#include "hyperring/generate.hpp"
#include "hyperring/pe.hpp"
#include "hyperring/quotient.hpp"

namespace hyperring {

// P(x): everything reachable from x by one generator pair, split by source.
struct Neighborhood {
    ElementId x = 0;
    SubsetMask px;
    SubsetMask alpha_plus_component;
    SubsetMask lambda_times_component;
};

inline Neighborhood neighborhood(const Hyperring& R, ElementId x, ElementId e, const Bounds& b) {
    if (x < 0 || x >= R.q) throw InputError("x out of range");
    Neighborhood out;
    out.x = x;
    out.alpha_plus_component = generate(R, RelationKind::AlphaPlus, b).row(x);
    out.lambda_times_component = generate(R, RelationKind::LambdaTimes, b, e).row(x);
    out.px = out.alpha_plus_component | out.lambda_times_component;
    return out;
}

struct PartEscape {
    ElementId inside = 0;   // element of M
    ElementId outside = 0;  // related element that escapes M
};

// Bounded test: M is closed under the rows of the generator relation.
inline std::optional<PartEscape> part_escape(const Relation& rel, const SubsetMask& M) {
    if (M.empty()) throw InputError("part test: M must be non-empty");
    for (ElementId x = 0; x < rel.size(); ++x) {
        if (!M.test(x)) continue;
        const std::uint64_t escapes = rel.row_bits(x) & ~M.bits;
        if (escapes) return PartEscape{x, SubsetMask{escapes, rel.size()}.lowest()};
    }
    return std::nullopt;
}

// Exact test: M is a union of classes of the fundamental partition.
inline std::optional<PartEscape> part_escape_exact(const Partition& p, const SubsetMask& M) {
    if (M.empty()) throw InputError("part test: M must be non-empty");
    for (ElementId x = 0; x < p.size(); ++x) {
        if (!M.test(x)) continue;
        const SubsetMask cls = p.class_of(x);
        SubsetMask out{cls.bits & ~M.bits, p.size()};
        if (!out.empty()) return PartEscape{x, out.lowest()};
    }
    return std::nullopt;
}

// Direct check of the defining closure conditions: whenever a bounded
// expression value meets M, every term-permuted variant's value (P1) and
// every e-splice partner's value (P2, both directions) stays inside M.
inline std::optional<PartEscape> part_escape_p1p2(const Hyperring& R, const SubsetMask& M,
                                                  ElementId e, const Bounds& b) {
    if (M.empty()) throw InputError("part test: M must be non-empty");
    std::optional<PartEscape> escape;
    for_each_expression(R.q, b, [&](const SumOfProducts& expr) {
        if (escape) return;
        const SubsetMask v = evaluate(R, expr);
        if (!v.intersects(M)) return;
        const ElementId inside = (v & M).lowest();
        std::vector<int> sigma(expr.terms.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = static_cast<int>(i);
        do {
            const SubsetMask w = evaluate(R, permute_terms(expr, sigma));
            if (!w.subset_of(M)) {
                escape = PartEscape{inside, SubsetMask{w.bits & ~M.bits, R.q}.lowest()};
                return;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        for_each_pe_partner(expr, e, b, [&](const PeWitness& pw) {
            if (escape) return;
            for (const SumOfProducts* side : {&pw.left, &pw.right}) {
                const SubsetMask w = evaluate(R, *side);
                if (!w.subset_of(M)) {
                    escape = PartEscape{inside, SubsetMask{w.bits & ~M.bits, R.q}.lowest()};
                    return;
                }
            }
        });
    });
    return escape;
}

struct TransitivityReport {
    bool generator_transitive = false;   // (1) the relation equals its closure
    bool rows_match_closure = false;     // (2) P(x) equals the fundamental class of x
    bool neighborhoods_are_parts = false;  // (3) every P(x) is closed under the generator
    bool agree = false;
    Bounds bounds;
    std::string discrepancy;
};

// Evaluates the three equivalent transitivity conditions. With no bounds
// given, the generator is saturated first so that (2) compares like with like.
inline TransitivityReport transitivity_report(const Hyperring& R, ElementId e,
                                              std::optional<Bounds> bounds = std::nullopt) {
    Relation gen(R.q);
    TransitivityReport rep;
    if (bounds) {
        rep.bounds = *bounds;
        gen = generate(R, RelationKind::Lambda, *bounds, e);
    } else {
        SaturationResult sat = saturated_generate(R, RelationKind::Lambda, e);
        rep.bounds = sat.bounds;
        gen = generate(R, RelationKind::Lambda, sat.bounds, e);
    }
    rep.generator_transitive = gen.transitive();

    const Relation closure_rel = starred(R, StarredKind::LambdaStar, e).to_relation();
    rep.rows_match_closure = true;
    for (ElementId x = 0; x < R.q && rep.rows_match_closure; ++x)
        rep.rows_match_closure = gen.row_bits(x) == closure_rel.row_bits(x);

    rep.neighborhoods_are_parts = true;
    for (ElementId x = 0; x < R.q && rep.neighborhoods_are_parts; ++x)
        rep.neighborhoods_are_parts = !part_escape(gen, gen.row(x)).has_value();

    rep.agree = rep.generator_transitive == rep.rows_match_closure &&
                rep.rows_match_closure == rep.neighborhoods_are_parts;
    if (!rep.agree)
        rep.discrepancy = "(1)=" + std::to_string(rep.generator_transitive) +
                          " (2)=" + std::to_string(rep.rows_match_closure) +
                          " (3)=" + std::to_string(rep.neighborhoods_are_parts);
    return rep;
}

struct StrongReport {
    bool strong = false;
    bool translates_overlap = false;  // related elements have intersecting e-translates
    bool e_invertible = false;        // z in x*e implies x in z*e, both sides
    std::string witness;
};

inline StrongReport lambda_e_strong_report(const Hyperring& R, ElementId e) {
    if (e < 0 || e >= R.q) throw InputError("e out of range");
    StrongReport rep;
    const Partition lam = starred(R, StarredKind::LambdaStar, e);
    const SubsetMask eset = SubsetMask::single(e, R.q);

    rep.translates_overlap = true;
    for (ElementId x = 0; x < R.q && rep.translates_overlap; ++x)
        for (ElementId y = x; y < R.q && rep.translates_overlap; ++y) {
            if (!lam.same(x, y)) continue;
            SubsetMask xe = extend(R.times, SubsetMask::single(x, R.q), eset);
            SubsetMask ye = extend(R.times, SubsetMask::single(y, R.q), eset);
            SubsetMask ex = extend(R.times, eset, SubsetMask::single(x, R.q));
            SubsetMask ey = extend(R.times, eset, SubsetMask::single(y, R.q));
            if (!xe.intersects(ye) || !ex.intersects(ey)) {
                rep.translates_overlap = false;
                rep.witness = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                              ": x*e=" + to_string(xe) + " y*e=" + to_string(ye) +
                              " e*x=" + to_string(ex) + " e*y=" + to_string(ey);
            }
        }

    rep.e_invertible = true;
    for (ElementId x = 0; x < R.q && rep.e_invertible; ++x)
        for (ElementId z = 0; z < R.q && rep.e_invertible; ++z) {
            const bool right_bad = R.times.at(x, e).test(z) && !R.times.at(z, e).test(x);
            const bool left_bad = R.times.at(e, x).test(z) && !R.times.at(e, z).test(x);
            if (right_bad || left_bad) {
                rep.e_invertible = false;
                rep.witness = "z=" + std::to_string(z) + " in " +
                              (right_bad ? std::to_string(x) + "*e but x not in z*e"
                                         : "e*" + std::to_string(x) + " but x not in e*z");
            }
        }

    rep.strong = rep.translates_overlap && rep.e_invertible;
    return rep;
}

inline bool is_lambda_e_strong(const Hyperring& R, ElementId e) {
    return lambda_e_strong_report(R, e).strong;
}

struct StrongTransitivityReport {
    StrongReport strong;
    bool applicable = false;  // only strong structures assert anything
    TransitivityReport transitivity;
    bool pass = false;
};

inline StrongTransitivityReport strong_implies_transitive(const Hyperring& R, ElementId e) {
    StrongTransitivityReport rep;
    rep.strong = lambda_e_strong_report(R, e);
    rep.applicable = rep.strong.strong;
    if (!rep.applicable) {
        rep.pass = true;  // vacuous
        return rep;
    }
    rep.transitivity = transitivity_report(R, e);
    rep.pass = rep.transitivity.generator_transitive && rep.transitivity.agree;
    return rep;
}

// Scalar identity: x*e = e*x = {x} for all x.
inline std::optional<ElementId> scalar_identity(const Hyperring& R) {
    for (ElementId e = 0; e < R.q; ++e) {
        bool ok = true;
        for (ElementId x = 0; x < R.q && ok; ++x)
            ok = R.times.at(x, e) == SubsetMask::single(x, R.q) &&
                 R.times.at(e, x) == SubsetMask::single(x, R.q);
        if (ok) return e;
    }
    return std::nullopt;
}

struct CompletenessReport {
    int n = 1;
    Bounds bounds;
    bool n_complete = false;
    std::string n_witness;  // expression whose value is not gamma-saturated

    std::optional<ElementId> unit;  // scalar identity, when the structure is unitary
    std::optional<ElementId> e_used;
    std::optional<bool> splice_n_complete;  // (Lambda_e)_n-completeness
    std::string splice_witness;

    // cross-checks, evaluated when a unit exists
    std::optional<bool> corollary_agrees;       // n-complete <=> (Lambda_e)_n-complete
    std::optional<bool> gamma_equals_big_lambda;  // bounded pair sets coincide
    // when (Lambda_e)_n-complete: level-n pairs already give the whole relation
    std::optional<bool> level_collapse;
};

// Saturation of the n-term expression values under the bounded relations.
inline CompletenessReport completeness(const Hyperring& R, int n, std::optional<ElementId> e,
                                       const Bounds& b) {
    if (n < 1 || n > b.max_terms) throw InputError("n must lie within the term bound");
    CompletenessReport rep;
    rep.n = n;
    rep.bounds = b;
    rep.unit = scalar_identity(R);

    const Relation gamma = generate(R, RelationKind::Gamma, b);
    auto saturate = [&R](const Relation& rel, const SubsetMask& S) {
        SubsetMask out = SubsetMask::empty_set(R.q);
        S.for_each([&](ElementId x) { out |= rel.row(x); });
        return out;
    };

    rep.n_complete = true;
    for_each_expression(R.q, Bounds{n, b.max_factors, b.max_insert_run}, [&](const SumOfProducts& expr) {
        if (static_cast<int>(expr.terms.size()) != n || !rep.n_complete) return;
        const SubsetMask v = evaluate(R, expr);
        if (saturate(gamma, v) != v) {
            rep.n_complete = false;
            rep.n_witness = format_expr(expr) + " has value " + to_string(v) +
                            " but gamma-saturation " + to_string(saturate(gamma, v));
        }
    });

    std::optional<ElementId> eu = e ? e : rep.unit;
    if (eu) {
        rep.e_used = eu;
        const Relation big = generate(R, RelationKind::BigLambda, b, eu);
        bool splice_ok = true;
        std::string witness;
        for_each_expression(R.q, Bounds{n, b.max_factors, b.max_insert_run}, [&](const SumOfProducts& expr) {
            if (static_cast<int>(expr.terms.size()) != n || !splice_ok) return;
            const SubsetMask v = evaluate(R, expr);
            SubsetMask partners = SubsetMask::empty_set(R.q);
            for_each_pe_partner(expr, *eu, b, [&](const PeWitness& w) {
                partners |= evaluate(R, w.left);
                partners |= evaluate(R, w.right);
            });
            if (saturate(big, v) != partners) {
                splice_ok = false;
                witness = format_expr(expr) + ": closure " + to_string(saturate(big, v)) +
                          " vs partner values " + to_string(partners);
            }
        });
        rep.splice_n_complete = splice_ok;
        rep.splice_witness = witness;

        if (rep.unit && *eu == *rep.unit) {
            rep.corollary_agrees = rep.n_complete == splice_ok;
            rep.gamma_equals_big_lambda = gamma == big;
            if (splice_ok)
                rep.level_collapse = generate_level(R, RelationKind::BigLambda, n, b, eu) == big;
        }
    }
    return rep;
}

}  // namespace hyperring
