#pragma once

#include <vector>

#include "hyperring/expr.hpp"

namespace hyperring {

// One contiguous block of e occupying positions [pos, end] (0-based, in the
// coordinates of the expanded word) of term `term`.
struct EBlockInsertion {
    int term = 0;
    int pos = 0;
    int end = 0;

    int length() const { return end - pos + 1; }
};

// A pair (left, right) where right is left with one e-block spliced into
// each listed term; an empty insertion list means left == right.
struct PeWitness {
    SumOfProducts left;
    SumOfProducts right;
    std::vector<EBlockInsertion> insertions;
};

// Rebuilds the expanded expression from `left` and the insertion metadata.
inline SumOfProducts apply_insertions(const SumOfProducts& left, ElementId e,
                                      const std::vector<EBlockInsertion>& ins) {
    SumOfProducts out = left;
    for (const EBlockInsertion& b : ins) {
        if (b.term < 0 || b.term >= static_cast<int>(out.terms.size()))
            throw Error("apply_insertions: term index out of range");
        Product& t = out.terms[static_cast<std::size_t>(b.term)];
        const int k = static_cast<int>(t.size());
        if (b.pos < 0 || b.pos > k || b.end < b.pos)
            throw Error("apply_insertions: bad block window");
        t.insert(t.begin() + b.pos, static_cast<std::size_t>(b.length()), e);
    }
    return out;
}

// Visits every e-splice partner of `expr` within the bounds, in both
// directions, starting with the identity partner:
//   - expansions: a non-empty set of terms each gains one e-block
//     (block length <= max_insert_run, expanded length <= max_factors);
//   - contractions: the reverse, for terms of `expr` that contain an
//     all-e window whose removal leaves a non-empty product.
// The witness always satisfies right == apply_insertions(left, e, insertions).
template <typename Fn>
void for_each_pe_partner(const SumOfProducts& expr, ElementId e, const Bounds& b, Fn&& fn) {
    if (!b.valid()) throw InputError("invalid bounds");
    const int m = static_cast<int>(expr.terms.size());

    fn(PeWitness{expr, expr, {}});

    // Expansion options per term: one block, all window positions.
    std::vector<std::vector<EBlockInsertion>> expand(m);
    // Contraction options per term: removable all-e windows of expr.
    std::vector<std::vector<EBlockInsertion>> contract(m);
    for (int i = 0; i < m; ++i) {
        const Product& t = expr.terms[static_cast<std::size_t>(i)];
        const int k = static_cast<int>(t.size());
        for (int len = 1; len <= b.max_insert_run && k + len <= b.max_factors; ++len)
            for (int p = 0; p + len <= k + len; ++p)
                expand[i].push_back({i, p, p + len - 1});
        for (int len = 1; len <= b.max_insert_run && len < k; ++len)
            for (int p = 0; p + len <= k; ++p) {
                bool all_e = true;
                for (int j = 0; j < len; ++j) all_e = all_e && t[static_cast<std::size_t>(p + j)] == e;
                if (all_e) contract[i].push_back({i, p, p + len - 1});
            }
    }

    // All non-empty term subsets, one option per selected term.
    auto visit_combinations = [&](const std::vector<std::vector<EBlockInsertion>>& options, auto&& emit) {
        std::vector<EBlockInsertion> picks;
        auto rec = [&](auto&& self, int from) -> void {
            if (!picks.empty()) emit(picks);
            for (int i = from; i < m; ++i) {
                for (const EBlockInsertion& opt : options[static_cast<std::size_t>(i)]) {
                    picks.push_back(opt);
                    self(self, i + 1);
                    picks.pop_back();
                }
            }
        };
        rec(rec, 0);
    };

    visit_combinations(expand, [&](const std::vector<EBlockInsertion>& picks) {
        fn(PeWitness{expr, apply_insertions(expr, e, picks), picks});
    });
    visit_combinations(contract, [&](const std::vector<EBlockInsertion>& picks) {
        // remove the chosen windows; the removed expression is `left`
        SumOfProducts left = expr;
        for (const EBlockInsertion& w : picks) {
            Product& t = left.terms[static_cast<std::size_t>(w.term)];
            t.erase(t.begin() + w.pos, t.begin() + w.end + 1);
        }
        fn(PeWitness{left, expr, picks});
    });
}

inline std::vector<PeWitness> pe_partners(const SumOfProducts& expr, ElementId e, const Bounds& b) {
    std::vector<PeWitness> out;
    for_each_pe_partner(expr, e, b, [&](const PeWitness& w) { out.push_back(w); });
    return out;
}

}  // namespace hyperring
