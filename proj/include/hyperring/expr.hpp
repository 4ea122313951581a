#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperring/core.hpp"

namespace hyperring {

// A product of carrier elements, evaluated left to right under *.
using Product = std::vector<ElementId>;

// Formal sum of products. Terms fold left to right under +; associativity
// of the validated operations makes the fold order immaterial.
struct SumOfProducts {
    std::vector<Product> terms;

    bool operator==(const SumOfProducts& o) const { return terms == o.terms; }
};

struct Bounds {
    int max_terms = 2;       // m
    int max_factors = 2;     // k_i
    int max_insert_run = 1;  // longest inserted block

    bool valid() const { return max_terms >= 1 && max_factors >= 1 && max_insert_run >= 1; }
};

inline std::string format_expr(const SumOfProducts& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += "+";
        for (std::size_t j = 0; j < e.terms[i].size(); ++j) {
            if (j) out += "*";
            out += std::to_string(e.terms[i][j]);
        }
    }
    return out;
}

inline SubsetMask evaluate_product(const Hyperring& R, const Product& p) {
    if (p.empty()) throw Error("evaluate: empty product");
    for (ElementId x : p)
        if (x < 0 || x >= R.q) throw Error("evaluate: element index out of range");
    SubsetMask acc = SubsetMask::single(p[0], R.q);
    for (std::size_t j = 1; j < p.size(); ++j)
        acc = extend(R.times, acc, SubsetMask::single(p[j], R.q));
    return acc;
}

inline SubsetMask evaluate(const Hyperring& R, const SumOfProducts& e) {
    if (e.terms.empty()) throw Error("evaluate: empty sum");
    SubsetMask acc = evaluate_product(R, e.terms[0]);
    for (std::size_t i = 1; i < e.terms.size(); ++i)
        acc = extend(R.plus, acc, evaluate_product(R, e.terms[i]));
    return acc;
}

// Visits every expression with m <= max_terms terms and k_i <= max_factors
// factors, in a fixed order: by m, then factor profile (lexicographic),
// then symbols (base-q counting). Returns the number visited.
template <typename Fn>
std::uint64_t for_each_expression(int q, const Bounds& b, Fn&& fn) {
    if (!b.valid()) throw InputError("invalid bounds");
    std::uint64_t count = 0;
    SumOfProducts expr;
    for (int m = 1; m <= b.max_terms; ++m) {
        std::vector<int> profile(m, 1);
        for (;;) {
            expr.terms.assign(m, {});
            for (int i = 0; i < m; ++i) expr.terms[i].assign(profile[i], 0);
            // count symbols through all q^(sum k_i) assignments
            for (;;) {
                fn(const_cast<const SumOfProducts&>(expr));
                ++count;
                int ti = m - 1, fi = profile[m - 1] - 1;
                for (;;) {
                    if (++expr.terms[ti][fi] < q) break;
                    expr.terms[ti][fi] = 0;
                    if (--fi < 0) {
                        if (--ti < 0) break;
                        fi = profile[ti] - 1;
                    }
                }
                if (ti < 0) break;
            }
            // next factor profile
            int i = m - 1;
            while (i >= 0 && profile[i] == b.max_factors) profile[i--] = 1;
            if (i < 0) break;
            ++profile[i];
        }
    }
    return count;
}

inline std::uint64_t expression_count(int q, const Bounds& b) {
    // sum over profiles of q^(sum k_i); closed form via per-term geometric sum
    std::uint64_t per_term = 0, pw = 1;
    for (int k = 1; k <= b.max_factors; ++k) {
        pw *= static_cast<std::uint64_t>(q);
        per_term += pw;
    }
    std::uint64_t total = 0, level = 1;
    for (int m = 1; m <= b.max_terms; ++m) {
        level *= per_term;
        total += level;
    }
    return total;
}

// Permutations are 0-based images: sigma[i] = index of the term (factor)
// placed at position i.
inline SumOfProducts permute_terms(const SumOfProducts& e, const std::vector<int>& sigma) {
    if (sigma.size() != e.terms.size()) throw Error("permute_terms: size mismatch");
    SumOfProducts out;
    out.terms.reserve(e.terms.size());
    for (int i : sigma) out.terms.push_back(e.terms.at(static_cast<std::size_t>(i)));
    return out;
}

inline SumOfProducts permute_factors(const SumOfProducts& e,
                                     const std::vector<std::vector<int>>& sigmas) {
    if (sigmas.size() != e.terms.size()) throw Error("permute_factors: size mismatch");
    SumOfProducts out = e;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (sigmas[i].size() != e.terms[i].size()) throw Error("permute_factors: size mismatch");
        for (std::size_t j = 0; j < sigmas[i].size(); ++j)
            out.terms[i][j] = e.terms[i].at(static_cast<std::size_t>(sigmas[i][j]));
    }
    return out;
}

// Grammar: sum := product ('+' product)*; product := element ('*' element)*;
// element := decimal index. Whitespace allowed between tokens.
inline SumOfProducts parse_expr(const std::string& text, int q) {
    SumOfProducts out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_element = [&]() -> ElementId {
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InputError("expression: expected element index at offset " + std::to_string(start));
        int v = std::stoi(text.substr(start, i - start));
        if (v >= q) throw InputError("expression: element " + std::to_string(v) + " out of range for q=" + std::to_string(q));
        return v;
    };
    for (;;) {
        Product p{parse_element()};
        skip_ws();
        while (i < text.size() && text[i] == '*') {
            ++i;
            p.push_back(parse_element());
            skip_ws();
        }
        out.terms.push_back(std::move(p));
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '+') throw InputError("expression: unexpected character '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
        ++i;
    }
    return out;
}

}  // namespace hyperring
