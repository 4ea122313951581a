#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hyperring/expr.hpp"
#include "hyperring/relation.hpp"

namespace hyperring {

enum class RelationKind {
    Beta,
    Gamma,
    AlphaPlus,
    AlphaTimes,
    Alpha,
    AlphaUnion,
    LambdaTimes,  // lambda^e_x
    Lambda,       // lambda_e = lambda^e_x | alpha_+
    BigLambda,    // Lambda_e = lambda^e_x | alpha
};

inline bool kind_needs_e(RelationKind k) {
    return k == RelationKind::LambdaTimes || k == RelationKind::Lambda || k == RelationKind::BigLambda;
}

inline const char* kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::Beta: return "beta";
        case RelationKind::Gamma: return "gamma";
        case RelationKind::AlphaPlus: return "alpha-plus";
        case RelationKind::AlphaTimes: return "alpha-times";
        case RelationKind::Alpha: return "alpha";
        case RelationKind::AlphaUnion: return "alpha-union";
        case RelationKind::LambdaTimes: return "lambda-times-e";
        case RelationKind::Lambda: return "lambda-e";
        case RelationKind::BigLambda: return "Lambda-e";
    }
    return "?";
}

inline std::optional<RelationKind> kind_from_string(const std::string& s) {
    for (RelationKind k : {RelationKind::Beta, RelationKind::Gamma, RelationKind::AlphaPlus,
                           RelationKind::AlphaTimes, RelationKind::Alpha, RelationKind::AlphaUnion,
                           RelationKind::LambdaTimes, RelationKind::Lambda, RelationKind::BigLambda})
        if (s == kind_name(k)) return k;
    if (s == "big-lambda-e") return RelationKind::BigLambda;  // shell-friendly alias
    return std::nullopt;
}

namespace detail {

using Mask = std::uint64_t;
using MaskPair = std::pair<Mask, Mask>;

struct MaskPairHash {
    std::size_t operator()(const MaskPair& p) const {
        return std::hash<Mask>{}(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
    }
};

struct MaskVecHash {
    std::size_t operator()(const std::vector<Mask>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Mask m : v) {
            h ^= std::hash<Mask>{}(m);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Memoized subset extension of one hyperoperation.
class ExtendCache {
public:
    explicit ExtendCache(const HyperOp& op) : op_(&op) {}

    Mask fold(Mask a, Mask b) const {
        auto it = cache_.find({a, b});
        if (it != cache_.end()) return it->second;
        Mask acc = 0;
        for (Mask ma = a; ma;) {
            const int x = __builtin_ctzll(ma);
            ma &= ma - 1;
            for (Mask mb = b; mb;) {
                const int y = __builtin_ctzll(mb);
                mb &= mb - 1;
                acc |= op_->at(x, y).bits;
            }
        }
        cache_.emplace(MaskPair{a, b}, acc);
        return acc;
    }

private:
    const HyperOp* op_;
    mutable std::unordered_map<MaskPair, Mask, MaskPairHash> cache_;
};

// Values reachable by folding the masks of a multiset in every order.
class AllOrderFolds {
public:
    explicit AllOrderFolds(const ExtendCache& plus) : plus_(&plus) {}

    // `ms` must be sorted.
    const std::vector<Mask>& folds(const std::vector<Mask>& ms) {
        auto it = memo_.find(ms);
        if (it != memo_.end()) return it->second;
        std::vector<Mask> out;
        if (ms.size() == 1) {
            out = ms;
        } else {
            std::unordered_set<Mask> seen;
            std::vector<Mask> sub(ms.size() - 1);
            for (std::size_t i = 0; i < ms.size(); ++i) {
                if (i > 0 && ms[i] == ms[i - 1]) continue;  // distinct last elements only
                std::copy(ms.begin(), ms.begin() + i, sub.begin());
                std::copy(ms.begin() + i + 1, ms.end(), sub.begin() + i);
                for (Mask g : folds(sub))
                    seen.insert(plus_->fold(g, ms[i]));
            }
            out.assign(seen.begin(), seen.end());
            std::sort(out.begin(), out.end());
        }
        return memo_.emplace(ms, std::move(out)).first->second;
    }

    Mask folds_union(const std::vector<Mask>& ms) {
        Mask u = 0;
        for (Mask m : folds(ms)) u |= m;
        return u;
    }

private:
    const ExtendCache* plus_;
    std::unordered_map<std::vector<Mask>, std::vector<Mask>, MaskVecHash> memo_;
};

template <typename Fn>
void for_each_product_tuple(int q, int max_factors, Fn&& fn) {
    std::vector<ElementId> tup;
    for (int k = 1; k <= max_factors; ++k) {
        tup.assign(static_cast<std::size_t>(k), 0);
        for (;;) {
            fn(const_cast<const std::vector<ElementId>&>(tup));
            int i = k - 1;
            while (i >= 0 && tup[static_cast<std::size_t>(i)] == q - 1) tup[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++tup[static_cast<std::size_t>(i)];
        }
    }
}

inline Mask product_value(const ExtendCache& times, const std::vector<ElementId>& tup) {
    Mask acc = Mask{1} << tup[0];
    for (std::size_t j = 1; j < tup.size(); ++j)
        acc = times.fold(acc, Mask{1} << tup[j]);
    return acc;
}

struct ProductAlphabets {
    std::vector<Mask> values;           // distinct product values
    std::vector<MaskPair> alpha_pairs;  // (value, factor-permuted value)
    std::vector<MaskPair> splice_pairs; // (value, value with one e-block), plus identities
};

inline ProductAlphabets build_product_alphabets(const Hyperring& R, const ExtendCache& times,
                                                const Bounds& b, std::optional<ElementId> e,
                                                bool want_alpha, bool want_splice) {
    std::unordered_set<Mask> values;
    std::unordered_set<MaskPair, MaskPairHash> alpha, splice;
    for_each_product_tuple(R.q, b.max_factors, [&](const std::vector<ElementId>& tup) {
        const Mask v = product_value(times, tup);
        values.insert(v);
        if (want_alpha) {
            std::vector<ElementId> arr = tup;
            std::sort(arr.begin(), arr.end());
            do {
                alpha.emplace(v, product_value(times, arr));
            } while (std::next_permutation(arr.begin(), arr.end()));
        }
        if (want_splice) {
            splice.emplace(v, v);
            const int k = static_cast<int>(tup.size());
            std::vector<ElementId> expanded;
            for (int len = 1; len <= b.max_insert_run && k + len <= b.max_factors; ++len)
                for (int p = 0; p <= k; ++p) {
                    expanded.assign(tup.begin(), tup.begin() + p);
                    expanded.insert(expanded.end(), static_cast<std::size_t>(len), *e);
                    expanded.insert(expanded.end(), tup.begin() + p, tup.end());
                    splice.emplace(v, product_value(times, expanded));
                }
        }
    });
    ProductAlphabets out;
    out.values.assign(values.begin(), values.end());
    std::sort(out.values.begin(), out.values.end());
    out.alpha_pairs.assign(alpha.begin(), alpha.end());
    std::sort(out.alpha_pairs.begin(), out.alpha_pairs.end());
    out.splice_pairs.assign(splice.begin(), splice.end());
    std::sort(out.splice_pairs.begin(), out.splice_pairs.end());
    return out;
}

// Visits every size-m multiset of alphabet indices (nondecreasing index sequences).
template <typename T, typename Fn>
void for_each_multiset(const std::vector<T>& alphabet, int m, Fn&& fn) {
    std::vector<int> idx;
    auto rec = [&](auto&& self, int from, int left) -> void {
        if (left == 0) {
            fn(const_cast<const std::vector<int>&>(idx));
            return;
        }
        for (int i = from; i < static_cast<int>(alphabet.size()); ++i) {
            idx.push_back(i);
            self(self, i, left - 1);
            idx.pop_back();
        }
    };
    rec(rec, 0, m);
}

struct LevelRange {
    int lo = 1, hi = 1;
};

// x-side and y-side term orders decouple (the term permutation is free),
// so each multiset of per-term value pairs contributes the full cross
// product of its x-fold union and y-fold union.
inline void emit_free_order_pairs(Relation& rel, AllOrderFolds& aof,
                                  const std::vector<MaskPair>& alphabet, LevelRange lv, int q) {
    std::vector<Mask> xs, ys;
    for (int m = lv.lo; m <= lv.hi; ++m) {
        for_each_multiset(alphabet, m, [&](const std::vector<int>& idx) {
            xs.clear();
            ys.clear();
            for (int i : idx) {
                xs.push_back(alphabet[static_cast<std::size_t>(i)].first);
                ys.push_back(alphabet[static_cast<std::size_t>(i)].second);
            }
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            rel.add_block({aof.folds_union(xs), q}, {aof.folds_union(ys), q});
        });
    }
}

// Term order is shared by both sides, so fold the two components in
// lockstep over sequences; only the (x-fold, y-fold) state matters.
inline void emit_same_order_pairs(Relation& rel, const ExtendCache& plus,
                                  const std::vector<MaskPair>& alphabet, LevelRange lv, int q) {
    std::unordered_set<MaskPair, MaskPairHash> level(alphabet.begin(), alphabet.end());
    for (int m = 1; m <= lv.hi; ++m) {
        if (m > 1) {
            std::unordered_set<MaskPair, MaskPairHash> next;
            for (const MaskPair& st : level)
                for (const MaskPair& letter : alphabet)
                    next.emplace(plus.fold(st.first, letter.first), plus.fold(st.second, letter.second));
            level = std::move(next);
        }
        if (m >= lv.lo)
            for (const MaskPair& st : level)
                rel.add_block({st.first, q}, {st.second, q});
    }
}

inline void emit_gamma_pairs(Relation& rel, AllOrderFolds& aof, const std::vector<Mask>& values,
                             LevelRange lv, int q) {
    std::vector<Mask> ms;
    for (int m = lv.lo; m <= lv.hi; ++m) {
        for_each_multiset(values, m, [&](const std::vector<int>& idx) {
            ms.clear();
            for (int i : idx) ms.push_back(values[static_cast<std::size_t>(i)]);
            for (Mask w : aof.folds(ms)) rel.add_block({w, q}, {w, q});
        });
    }
}

inline Relation generate_impl(const Hyperring& R, RelationKind kind, const Bounds& b,
                              std::optional<ElementId> e, std::optional<int> exact_terms) {
    if (!b.valid()) throw InputError("invalid bounds");
    if (kind_needs_e(kind)) {
        if (!e) throw InputError(std::string(kind_name(kind)) + " requires an element e");
        if (*e < 0 || *e >= R.q) throw InputError("e out of range");
    }
    ExtendCache plus(R.plus), times(R.times);
    AllOrderFolds aof(plus);
    const bool want_alpha = kind == RelationKind::AlphaTimes || kind == RelationKind::Alpha ||
                            kind == RelationKind::AlphaUnion || kind == RelationKind::BigLambda;
    const bool want_splice = kind_needs_e(kind);
    ProductAlphabets ab = build_product_alphabets(R, times, b, e, want_alpha, want_splice);

    LevelRange lv{1, b.max_terms};
    if (exact_terms) lv = {*exact_terms, *exact_terms};

    Relation rel = Relation::diagonal(R.q);
    std::vector<MaskPair> value_pairs;
    for (Mask v : ab.values) value_pairs.emplace_back(v, v);

    switch (kind) {
        case RelationKind::Beta:
            for (Mask v : ab.values) rel.add_block({v, R.q}, {v, R.q});
            break;
        case RelationKind::Gamma:
            emit_gamma_pairs(rel, aof, ab.values, lv, R.q);
            break;
        case RelationKind::AlphaPlus:
            emit_free_order_pairs(rel, aof, value_pairs, lv, R.q);
            break;
        case RelationKind::AlphaTimes:
            emit_same_order_pairs(rel, plus, ab.alpha_pairs, lv, R.q);
            break;
        case RelationKind::Alpha:
            emit_free_order_pairs(rel, aof, ab.alpha_pairs, lv, R.q);
            break;
        case RelationKind::AlphaUnion:
            emit_free_order_pairs(rel, aof, value_pairs, lv, R.q);
            emit_same_order_pairs(rel, plus, ab.alpha_pairs, lv, R.q);
            break;
        case RelationKind::LambdaTimes:
            emit_same_order_pairs(rel, plus, ab.splice_pairs, lv, R.q);
            break;
        case RelationKind::Lambda:
            emit_same_order_pairs(rel, plus, ab.splice_pairs, lv, R.q);
            emit_free_order_pairs(rel, aof, value_pairs, lv, R.q);
            break;
        case RelationKind::BigLambda:
            emit_same_order_pairs(rel, plus, ab.splice_pairs, lv, R.q);
            emit_free_order_pairs(rel, aof, ab.alpha_pairs, lv, R.q);
            break;
    }
    return rel;
}

}  // namespace detail

// The bounded generator relation: the union over the expression universe
// (m <= max_terms, k_i <= max_factors) of the requested generator pairs.
// Reflexive and symmetric by construction.
inline Relation generate(const Hyperring& R, RelationKind kind, const Bounds& b,
                         std::optional<ElementId> e = std::nullopt) {
    return detail::generate_impl(R, kind, b, e, std::nullopt);
}

// Pairs contributed by expressions with exactly `level` terms (plus the diagonal).
inline Relation generate_level(const Hyperring& R, RelationKind kind, int level, const Bounds& b,
                               std::optional<ElementId> e = std::nullopt) {
    if (level < 1 || level > b.max_terms) throw InputError("level outside bounds");
    return detail::generate_impl(R, kind, b, e, level);
}

struct SaturationResult {
    Relation closed;   // transitive closure of the last round's pair set
    Bounds bounds;     // bounds of the last round computed
    int rounds = 0;
    bool stabilized = false;
};

// Escalates max_terms and max_factors by one per round until two
// consecutive rounds produce the same transitive closure. The insert-run
// bound tracks max_factors, so every block that fits is available.
inline SaturationResult saturated_generate(const Hyperring& R, RelationKind kind,
                                           std::optional<ElementId> e = std::nullopt,
                                           int round_cap = 6) {
    SaturationResult out;
    Relation prev(R.q);
    for (int r = 1; r <= round_cap; ++r) {
        Bounds b{r, r, r};
        Relation closed = transitive_closure(generate(R, kind, b, e));
        out.rounds = r;
        out.bounds = b;
        if (r > 1 && closed == prev) {
            out.closed = closed;
            out.stabilized = true;
            return out;
        }
        prev = closed;
    }
    out.closed = prev;
    out.stabilized = false;
    return out;
}

}  // namespace hyperring
