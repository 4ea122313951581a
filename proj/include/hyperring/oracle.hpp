#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/closure.hpp"
#include "hyperring/generate.hpp"
#include "hyperring/quotient.hpp"

namespace hyperring {

// Enumerates every set partition of [0, q) exactly once via restricted
// growth strings: a[0] = 0 and a[i] <= max(a[0..i-1]) + 1.
class PartitionIterator {
public:
    explicit PartitionIterator(int q) : rgs_(static_cast<std::size_t>(q), 0), fresh_(true) {
        if (q < 1) throw InputError("partition iterator needs q >= 1");
    }

    // Returns false once all Bell(q) partitions have been produced.
    bool next(Partition& out) {
        if (!fresh_ && !advance()) return false;
        fresh_ = false;
        out = Partition(static_cast<int>(rgs_.size()));
        std::vector<int> first_of_block;
        for (int i = 0; i < static_cast<int>(rgs_.size()); ++i) {
            const int block = rgs_[static_cast<std::size_t>(i)];
            if (block == static_cast<int>(first_of_block.size()))
                first_of_block.push_back(i);
            else
                out.merge(first_of_block[static_cast<std::size_t>(block)], i);
        }
        return true;
    }

private:
    bool advance() {
        const int q = static_cast<int>(rgs_.size());
        for (int i = q - 1; i >= 1; --i) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, rgs_[static_cast<std::size_t>(j)]);
            if (rgs_[static_cast<std::size_t>(i)] <= mx) {
                ++rgs_[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < q; ++j) rgs_[static_cast<std::size_t>(j)] = 0;
                return true;
            }
            rgs_[static_cast<std::size_t>(i)] = 0;
        }
        return false;
    }

    std::vector<int> rgs_;
    bool fresh_;
};

constexpr int kOracleCarrierCap = 7;  // Bell(7) = 877

// Scans every partition, keeps the strongly regular ones whose quotient is a
// ring satisfying `ax`, and returns the least by pair inclusion. The least
// element is the intersection of all qualifying relations; it must itself
// qualify, which is asserted.
inline Partition minimal_partition(const Hyperring& R, const QuotientAxioms& ax,
                                   int carrier_cap = kOracleCarrierCap) {
    if (R.q > carrier_cap)
        throw InputError("oracle: carrier size " + std::to_string(R.q) + " exceeds cap " +
                         std::to_string(carrier_cap));
    std::vector<Relation> qualifying;
    PartitionIterator it(R.q);
    Partition p;
    while (it.next(p)) {
        const Relation rel = p.to_relation();
        if (strong_regularity_failure(R, rel)) continue;
        const QuotientRing qr = build_quotient(R, p);
        if (!qr.is_ring) continue;
        if (ax.add_commutative && !qr.add_commutative) continue;
        if (ax.mul_commutative && !qr.mul_commutative) continue;
        if (ax.unit_class_of) {
            if (!qr.identity_class) continue;
            if (*qr.identity_class != qr.class_index_of(*ax.unit_class_of)) continue;
        }
        qualifying.push_back(rel);
    }
    if (qualifying.empty()) throw Error("oracle: no qualifying partition (structure is not a hyperring?)");

    Relation least = qualifying.front();
    for (const Relation& rel : qualifying) {
        Relation meet(R.q);
        for (int i = 0; i < R.q; ++i) meet.or_into_row(i, least.row_bits(i) & rel.row_bits(i));
        least = meet;
    }
    bool least_qualifies = false;
    for (const Relation& rel : qualifying) least_qualifies = least_qualifies || rel == least;
    if (!least_qualifies)
        throw Error("oracle: qualifying set has no least element");
    return Partition::from_relation(least);
}

struct CrossValidationEntry {
    StarredKind kind;
    std::optional<ElementId> e;
    bool oracle_matches_engine = false;
    bool generator_matches_engine = false;
    bool generator_stabilized = false;
    std::string detail;
};

struct CrossValidationReport {
    bool all_agree = false;
    std::vector<CrossValidationEntry> entries;
};

namespace detail {

inline std::string classes_string(const Partition& p) {
    std::string out = "[";
    bool first = true;
    for (const SubsetMask& c : p.classes()) {
        if (!first) out += " ";
        out += to_string(c);
        first = false;
    }
    return out + "]";
}

inline RelationKind generator_kind_for(StarredKind k) {
    switch (k) {
        case StarredKind::GammaStar: return RelationKind::Gamma;
        case StarredKind::AlphaStar: return RelationKind::Alpha;
        case StarredKind::LambdaStar: return RelationKind::Lambda;
        case StarredKind::BigLambdaStar: return RelationKind::BigLambda;
    }
    return RelationKind::Gamma;
}

}  // namespace detail

// Three-way agreement for every fundamental relation: exhaustive partition
// scan, congruence-closure fixpoint, and saturated generator closure.
// For the unit-dependent kinds, e ranges over the whole carrier.
inline CrossValidationReport cross_validate(const Hyperring& R,
                                            int carrier_cap = kOracleCarrierCap) {
    CrossValidationReport rep;
    std::vector<std::pair<StarredKind, std::optional<ElementId>>> cases = {
        {StarredKind::GammaStar, std::nullopt},
        {StarredKind::AlphaStar, std::nullopt},
    };
    for (ElementId e = 0; e < R.q; ++e) {
        cases.emplace_back(StarredKind::LambdaStar, e);
        cases.emplace_back(StarredKind::BigLambdaStar, e);
    }
    rep.all_agree = true;
    for (const auto& [kind, e] : cases) {
        CrossValidationEntry entry;
        entry.kind = kind;
        entry.e = e;
        const Partition engine = starred(R, kind, e);
        const Partition oracle = minimal_partition(R, starred_axioms(kind, e), carrier_cap);
        entry.oracle_matches_engine = engine == oracle;
        const SaturationResult sat = saturated_generate(R, detail::generator_kind_for(kind), e);
        entry.generator_stabilized = sat.stabilized;
        entry.generator_matches_engine = Partition::from_relation(sat.closed) == engine;
        if (!entry.oracle_matches_engine || !entry.generator_matches_engine)
            entry.detail = "engine=" + detail::classes_string(engine) +
                           " oracle=" + detail::classes_string(oracle) +
                           " generator=" + detail::classes_string(Partition::from_relation(sat.closed));
        rep.all_agree = rep.all_agree && entry.oracle_matches_engine &&
                        entry.generator_matches_engine && entry.generator_stabilized;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace hyperring
