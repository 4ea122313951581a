#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "hyperring/core.hpp"

namespace hyperring {

// Ordinary finite ring given by single-valued Cayley tables.
struct FiniteRing {
    int q = 0;
    std::vector<ElementId> add;  // q*q, row-major
    std::vector<ElementId> mul;
    std::string name;

    ElementId plus(ElementId x, ElementId y) const { return add[static_cast<std::size_t>(x) * q + y]; }
    ElementId times(ElementId x, ElementId y) const { return mul[static_cast<std::size_t>(x) * q + y]; }
};

inline FiniteRing zn_ring(int n) {
    if (n < 1 || n > kMaxCarrier) throw InputError("zn: modulus out of range");
    FiniteRing r;
    r.q = n;
    r.name = "z" + std::to_string(n);
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            r.add[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
            r.mul[static_cast<std::size_t>(x) * n + y] = (x * y) % n;
        }
    return r;
}

// Smallest noncommutative ring: pairs (a,b) over GF(2), encoded a*2+b,
// with x*y = y when a(x) = 1 and 0 otherwise (2x2 matrices with zero
// second row). Has no multiplicative identity.
inline FiniteRing noncomm4_ring() {
    FiniteRing r;
    r.q = 4;
    r.name = "noncomm4";
    r.add.resize(16);
    r.mul.resize(16);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            r.add[static_cast<std::size_t>(x) * 4 + y] = x ^ y;
            r.mul[static_cast<std::size_t>(x) * 4 + y] = (x >> 1) ? y : 0;
        }
    return r;
}

// 2x2 upper triangular matrices over GF(2), (a,b,d) encoded a*4+b*2+d.
// Noncommutative, unitary (identity = 5 = (1,0,1)).
inline FiniteRing upper_triangular8_ring() {
    FiniteRing r;
    r.q = 8;
    r.name = "ut8";
    r.add.resize(64);
    r.mul.resize(64);
    auto a = [](int x) { return (x >> 2) & 1; };
    auto b = [](int x) { return (x >> 1) & 1; };
    auto d = [](int x) { return x & 1; };
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            r.add[static_cast<std::size_t>(x) * 8 + y] = x ^ y;
            int pa = a(x) & a(y);
            int pb = (a(x) & b(y)) ^ (b(x) & d(y));
            int pd = d(x) & d(y);
            r.mul[static_cast<std::size_t>(x) * 8 + y] = pa * 4 + pb * 2 + pd;
        }
    return r;
}

// Every ring is a hyperring with singleton-valued hyperoperations.
inline Hyperring ring_as_hyperring(const FiniteRing& r) {
    std::vector<SubsetMask> p, t;
    p.reserve(static_cast<std::size_t>(r.q) * r.q);
    t.reserve(static_cast<std::size_t>(r.q) * r.q);
    for (int x = 0; x < r.q; ++x)
        for (int y = 0; y < r.q; ++y) {
            p.push_back(SubsetMask::single(r.plus(x, y), r.q));
            t.push_back(SubsetMask::single(r.times(x, y), r.q));
        }
    return Hyperring(HyperOp(r.q, std::move(p)), HyperOp(r.q, std::move(t)));
}

// x (+) y = (x+y)+I and x (*) y = (x*y)+I for a two-sided ideal I of the
// base ring. The ideal is checked (additive subgroup, absorbing).
inline Hyperring coset_hyperring(const FiniteRing& r, const std::vector<ElementId>& ideal) {
    SubsetMask I = SubsetMask::empty_set(r.q);
    for (ElementId i : ideal) {
        if (i < 0 || i >= r.q) throw InputError("coset-hyperring: ideal element out of range");
        I.set(i);
    }
    if (!I.test(0)) throw InputError("coset-hyperring: ideal must contain 0");
    bool ok = true;
    I.for_each([&](ElementId i) {
        I.for_each([&](ElementId j) { ok = ok && I.test(r.plus(i, j)); });
        for (ElementId x = 0; x < r.q; ++x)
            ok = ok && I.test(r.times(x, i)) && I.test(r.times(i, x));
    });
    if (!ok) throw InputError("coset-hyperring: set is not a two-sided ideal");

    auto coset_of = [&](ElementId v) {
        SubsetMask m = SubsetMask::empty_set(r.q);
        I.for_each([&](ElementId i) { m.set(r.plus(v, i)); });
        return m;
    };
    std::vector<SubsetMask> p, t;
    for (int x = 0; x < r.q; ++x)
        for (int y = 0; y < r.q; ++y) {
            p.push_back(coset_of(r.plus(x, y)));
            t.push_back(coset_of(r.times(x, y)));
        }
    return Hyperring(HyperOp(r.q, std::move(p)), HyperOp(r.q, std::move(t)));
}

// Every cell of both operations is the full carrier.
inline Hyperring total_hyperring(int q) {
    if (q < 1 || q > kMaxCarrier) throw InputError("total: size out of range");
    std::vector<SubsetMask> cells(static_cast<std::size_t>(q) * q, SubsetMask::full(q));
    return Hyperring(HyperOp(q, cells), HyperOp(q, cells));
}

// Both operations are x o y = {x, y}.
inline Hyperring b_hypergroup_ring(int q) {
    if (q < 1 || q > kMaxCarrier) throw InputError("b-hypergroup-ring: size out of range");
    std::vector<SubsetMask> cells;
    cells.reserve(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
            SubsetMask m = SubsetMask::single(x, q);
            m.set(y);
            cells.push_back(m);
        }
    return Hyperring(HyperOp(q, cells), HyperOp(q, cells));
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

inline int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw InputError("");
        return v;
    } catch (...) {
        throw InputError(std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

inline FiniteRing ring_by_name(const std::string& name) {
    if (name == "noncomm4") return noncomm4_ring();
    if (name == "ut8") return upper_triangular8_ring();
    if (name.size() > 1 && name[0] == 'z') return zn_ring(parse_int(name.substr(1), "zN modulus"));
    throw InputError("unknown ring '" + name + "' (expected zN, noncomm4 or ut8)");
}

}  // namespace detail

// Construct a catalog structure from "name:params" form, e.g.
//   ring-as-hyperring:z4   coset-hyperring:z4:0,2   total:3   b-hypergroup-ring:3
inline Hyperring make_catalog(const std::string& spec) {
    auto parts = detail::split(spec, ':');
    if (parts.empty()) throw InputError("empty catalog spec");
    const std::string& name = parts[0];
    if (name == "ring-as-hyperring") {
        if (parts.size() != 2) throw InputError("ring-as-hyperring:<ring> expected");
        return ring_as_hyperring(detail::ring_by_name(parts[1]));
    }
    if (name == "coset-hyperring") {
        if (parts.size() != 3) throw InputError("coset-hyperring:<ring>:<ideal csv> expected");
        std::vector<ElementId> ideal;
        for (const auto& tok : detail::split(parts[2], ','))
            ideal.push_back(detail::parse_int(tok, "ideal element"));
        return coset_hyperring(detail::ring_by_name(parts[1]), ideal);
    }
    if (name == "total") {
        if (parts.size() != 2) throw InputError("total:<q> expected");
        return total_hyperring(detail::parse_int(parts[1], "carrier size"));
    }
    if (name == "b-hypergroup-ring") {
        if (parts.size() != 2) throw InputError("b-hypergroup-ring:<q> expected");
        return b_hypergroup_ring(detail::parse_int(parts[1], "carrier size"));
    }
    throw InputError("unknown catalog family '" + name + "'");
}

struct CatalogEntry {
    std::string spec;
    Hyperring structure;
};

// The fixture set exercised by the verification suites.
inline std::vector<CatalogEntry> standard_catalog() {
    std::vector<CatalogEntry> out;
    for (const char* spec : {
             "ring-as-hyperring:z2",
             "ring-as-hyperring:z4",
             "ring-as-hyperring:noncomm4",
             "coset-hyperring:z4:0,2",
             "total:2",
             "total:3",
             "total:4",
             "b-hypergroup-ring:3",
         })
        out.push_back({spec, make_catalog(spec)});
    return out;
}

}  // namespace hyperring
