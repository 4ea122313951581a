#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperring/closure.hpp"
#include "hyperring/partition.hpp"
#include "hyperring/relation.hpp"

namespace hyperring {

// Single-valued quotient of a hyperring by a strongly regular partition.
struct QuotientRing {
    int class_count = 0;
    std::vector<SubsetMask> classes;       // ordered by smallest member
    std::vector<ElementId> representative; // smallest member per class
    std::vector<int> add_table;            // class_count x class_count, row-major
    std::vector<int> mul_table;

    bool is_ring = false;  // associativity, additive group, distributivity
    bool add_commutative = false;
    bool mul_commutative = false;
    std::optional<int> zero_class;
    std::optional<int> identity_class;

    int add(int c, int d) const { return add_table[static_cast<std::size_t>(c) * class_count + d]; }
    int mul(int c, int d) const { return mul_table[static_cast<std::size_t>(c) * class_count + d]; }

    int class_index_of(ElementId x) const {
        for (int c = 0; c < class_count; ++c)
            if (classes[static_cast<std::size_t>(c)].test(x)) return c;
        throw Error("element not covered by partition");
    }
};

// Builds the quotient tables from representatives and re-verifies that every
// hyperproduct of whole classes lands in a single class (the operations are
// representative-independent exactly when the partition is strongly regular).
inline QuotientRing build_quotient(const Hyperring& R, const Partition& p) {
    if (p.size() != R.q) throw StructuralError("partition size mismatch");
    if (auto w = strong_regularity_failure(R, p.to_relation())) {
        throw Error("partition is not strongly regular: witness x=" + std::to_string(w->x) +
                    " y=" + std::to_string(w->y) + " a=" + std::to_string(w->a) +
                    " u=" + std::to_string(w->u) + " v=" + std::to_string(w->v) +
                    (w->multiplicative ? " under *" : " under +"));
    }
    QuotientRing out;
    out.classes = p.classes();
    out.class_count = static_cast<int>(out.classes.size());
    for (const SubsetMask& c : out.classes) out.representative.push_back(c.lowest());

    const int n = out.class_count;
    out.add_table.assign(static_cast<std::size_t>(n) * n, -1);
    out.mul_table.assign(static_cast<std::size_t>(n) * n, -1);
    auto class_of = [&](ElementId x) {
        for (int c = 0; c < n; ++c)
            if (out.classes[static_cast<std::size_t>(c)].test(x)) return c;
        return -1;
    };
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            SubsetMask sum = extend(R.plus, out.classes[static_cast<std::size_t>(c)],
                                    out.classes[static_cast<std::size_t>(d)]);
            SubsetMask prod = extend(R.times, out.classes[static_cast<std::size_t>(c)],
                                     out.classes[static_cast<std::size_t>(d)]);
            const int cs = class_of(sum.lowest());
            const int cp = class_of(prod.lowest());
            if (!sum.subset_of(out.classes[static_cast<std::size_t>(cs)]) ||
                !prod.subset_of(out.classes[static_cast<std::size_t>(cp)]))
                throw Error("quotient operation not single-valued");
            out.add_table[static_cast<std::size_t>(c) * n + d] = cs;
            out.mul_table[static_cast<std::size_t>(c) * n + d] = cp;
        }

    // classification flags, each verified directly on the tables
    bool ring = true;
    for (int a = 0; a < n && ring; ++a)
        for (int b = 0; b < n && ring; ++b)
            for (int c = 0; c < n && ring; ++c) {
                ring = ring && out.add(out.add(a, b), c) == out.add(a, out.add(b, c));
                ring = ring && out.mul(out.mul(a, b), c) == out.mul(a, out.mul(b, c));
                ring = ring && out.mul(a, out.add(b, c)) == out.add(out.mul(a, b), out.mul(a, c));
                ring = ring && out.mul(out.add(b, c), a) == out.add(out.mul(b, a), out.mul(c, a));
            }
    for (int z = 0; z < n; ++z) {
        bool is_zero = true;
        for (int c = 0; c < n; ++c) is_zero = is_zero && out.add(z, c) == c && out.add(c, z) == c;
        if (is_zero) {
            if (out.zero_class) throw Error("quotient has two additive identities");
            out.zero_class = z;
        }
    }
    if (!out.zero_class) {
        ring = false;
    } else {
        for (int x = 0; x < n && ring; ++x) {
            bool has_neg = false;
            for (int y = 0; y < n; ++y) has_neg = has_neg || out.add(x, y) == *out.zero_class;
            ring = ring && has_neg;
        }
    }
    out.is_ring = ring;
    out.add_commutative = true;
    out.mul_commutative = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            out.add_commutative = out.add_commutative && out.add(a, b) == out.add(b, a);
            out.mul_commutative = out.mul_commutative && out.mul(a, b) == out.mul(b, a);
        }
    for (int u = 0; u < n; ++u) {
        bool ident = true;
        for (int c = 0; c < n; ++c) ident = ident && out.mul(u, c) == c && out.mul(c, u) == c;
        if (ident) {
            out.identity_class = u;  // two-sided identities are unique
            break;
        }
    }
    return out;
}

struct KernelFibers {
    SubsetMask zero_fiber;                  // K: preimage of the zero class
    std::optional<SubsetMask> unit_fiber;   // D: preimage of the identity class, when one exists
};

inline KernelFibers kernel_fibers(const Hyperring& R, const Partition& p) {
    QuotientRing qr = build_quotient(R, p);
    if (!qr.zero_class) throw Error("quotient has no zero class");
    KernelFibers out;
    out.zero_fiber = qr.classes[static_cast<std::size_t>(*qr.zero_class)];
    if (qr.identity_class)
        out.unit_fiber = qr.classes[static_cast<std::size_t>(*qr.identity_class)];
    return out;
}

struct FiberCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct FiberReport {
    bool all_pass = false;
    std::vector<FiberCheck> checks;
};

// Saturation of M by the partition: union of all classes meeting M.
inline SubsetMask class_saturation(const Partition& p, const SubsetMask& M) {
    SubsetMask out = SubsetMask::empty_set(p.size());
    for (const SubsetMask& c : p.classes())
        if (c.intersects(M)) out |= c;
    return out;
}

// Checks K + M = M + K = sat(M) and D*M u M*D subset-of sat(M); with
// `strengthened` also M*D = D*M = sat(M).
inline FiberReport check_fiber_identities(const Hyperring& R, const Partition& p,
                                          const SubsetMask& M, bool strengthened = false) {
    if (M.empty()) throw InputError("fiber check: M must be non-empty");
    KernelFibers f = kernel_fibers(R, p);
    const SubsetMask sat = class_saturation(p, M);
    FiberReport rep;
    auto push = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    SubsetMask km = extend(R.plus, f.zero_fiber, M);
    SubsetMask mk = extend(R.plus, M, f.zero_fiber);
    push("K+M = M+K = saturation(M)", km == sat && mk == sat,
         "K+M=" + to_string(km) + " M+K=" + to_string(mk) + " sat=" + to_string(sat));
    if (f.unit_fiber) {
        SubsetMask dm = extend(R.times, *f.unit_fiber, M);
        SubsetMask md = extend(R.times, M, *f.unit_fiber);
        push("D*M u M*D subset-of saturation(M)", (dm | md).subset_of(sat),
             "D*M=" + to_string(dm) + " M*D=" + to_string(md) + " sat=" + to_string(sat));
        if (strengthened)
            push("M*D = D*M = saturation(M)", dm == sat && md == sat,
                 "D*M=" + to_string(dm) + " M*D=" + to_string(md) + " sat=" + to_string(sat));
    } else if (strengthened) {
        push("M*D = D*M = saturation(M)", false, "no identity class");
    }
    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace hyperring
