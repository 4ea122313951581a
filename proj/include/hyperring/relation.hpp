#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperring/core.hpp"

namespace hyperring {

// Binary relation on [0, q) as a dense bit matrix, one word per row.
class Relation {
public:
    Relation() = default;
    explicit Relation(int q) : q_(q), rows_(static_cast<std::size_t>(q), 0) {
        if (q < 1 || q > kMaxCarrier) throw StructuralError("relation size out of range");
    }

    static Relation diagonal(int q) {
        Relation r(q);
        for (int i = 0; i < q; ++i) r.add(i, i);
        return r;
    }
    static Relation full(int q) {
        Relation r(q);
        const std::uint64_t all = SubsetMask::full(q).bits;
        for (auto& row : r.rows_) row = all;
        return r;
    }

    int size() const { return q_; }
    bool test(ElementId x, ElementId y) const { return (rows_[static_cast<std::size_t>(x)] >> y) & 1; }
    void add(ElementId x, ElementId y) { rows_[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y; }
    void add_symmetric(ElementId x, ElementId y) { add(x, y); add(y, x); }

    std::uint64_t row_bits(ElementId x) const { return rows_[static_cast<std::size_t>(x)]; }
    SubsetMask row(ElementId x) const { return {rows_[static_cast<std::size_t>(x)], q_}; }
    void or_into_row(ElementId x, std::uint64_t bits) { rows_[static_cast<std::size_t>(x)] |= bits; }

    // Relates every element of a to every element of b, both orders.
    void add_block(const SubsetMask& a, const SubsetMask& b) {
        a.for_each([&](ElementId x) { rows_[static_cast<std::size_t>(x)] |= b.bits; });
        b.for_each([&](ElementId y) { rows_[static_cast<std::size_t>(y)] |= a.bits; });
    }

    Relation& operator|=(const Relation& o) {
        for (std::size_t i = 0; i < rows_.size(); ++i) rows_[i] |= o.rows_[i];
        return *this;
    }
    bool operator==(const Relation& o) const { return q_ == o.q_ && rows_ == o.rows_; }
    bool operator!=(const Relation& o) const { return !(*this == o); }

    bool subset_of(const Relation& o) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] & ~o.rows_[i]) return false;
        return true;
    }

    bool reflexive() const {
        for (int i = 0; i < q_; ++i)
            if (!test(i, i)) return false;
        return true;
    }
    bool symmetric() const {
        for (int i = 0; i < q_; ++i)
            for (int j = i + 1; j < q_; ++j)
                if (test(i, j) != test(j, i)) return false;
        return true;
    }
    bool transitive() const {
        for (int i = 0; i < q_; ++i) {
            std::uint64_t reach = rows_[static_cast<std::size_t>(i)];
            std::uint64_t expanded = reach;
            for (std::uint64_t m = reach; m;) {
                int k = __builtin_ctzll(m);
                m &= m - 1;
                expanded |= rows_[static_cast<std::size_t>(k)];
            }
            if (expanded != reach) return false;
        }
        return true;
    }
    bool is_equivalence() const { return reflexive() && symmetric() && transitive(); }

    // Sorted (i, j) pairs with i <= j.
    std::vector<std::pair<int, int>> upper_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < q_; ++i)
            for (int j = i; j < q_; ++j)
                if (test(i, j)) out.emplace_back(i, j);
        return out;
    }

private:
    int q_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Smallest transitive superset, by bitset row propagation.
inline Relation transitive_closure(const Relation& rel) {
    Relation out = rel;
    const int q = rel.size();
    for (int k = 0; k < q; ++k)
        for (int i = 0; i < q; ++i)
            if (out.test(i, k)) out.or_into_row(i, out.row_bits(k));
    return out;
}

struct RegularityWitness {
    ElementId x = 0, y = 0, a = 0, u = 0, v = 0;
    bool multiplicative = false;  // which operation
    bool right_side = false;      // x o a vs y o a (instead of a o x vs a o y)
};

// Checks both operations, both sides: whenever x ~ y, every element of
// a o x must relate to every element of a o y (and the mirrored version).
// Returns the first counterexample in scan order, or nullopt.
inline std::optional<RegularityWitness> strong_regularity_failure(const Hyperring& R,
                                                                  const Relation& rel) {
    if (rel.size() != R.q) throw StructuralError("relation size mismatch");
    if (!rel.is_equivalence()) throw Error("strong regularity check requires an equivalence");
    auto blockwise = [&](const SubsetMask& A, const SubsetMask& B, RegularityWitness& w) {
        bool ok = true;
        A.for_each([&](ElementId u) {
            if (!ok) return;
            if (B.bits & ~rel.row_bits(u)) {
                SubsetMask bad{B.bits & ~rel.row_bits(u), R.q};
                w.u = u;
                w.v = bad.lowest();
                ok = false;
            }
        });
        return ok;
    };
    for (ElementId x = 0; x < R.q; ++x)
        for (ElementId y = 0; y < R.q; ++y) {
            if (!rel.test(x, y)) continue;
            for (ElementId a = 0; a < R.q; ++a)
                for (bool mult : {false, true}) {
                    const HyperOp& op = R.op(mult);
                    RegularityWitness w{x, y, a, 0, 0, mult, false};
                    if (!blockwise(op.at(a, x), op.at(a, y), w)) return w;
                    w.right_side = true;
                    if (!blockwise(op.at(x, a), op.at(y, a), w)) return w;
                }
        }
    return std::nullopt;
}

inline bool is_strongly_regular(const Hyperring& R, const Relation& rel) {
    return !strong_regularity_failure(R, rel).has_value();
}

}  // namespace hyperring
