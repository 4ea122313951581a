#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperring {

// Carrier elements are 0-based indices into a structure of size q (q <= 64).
using ElementId = int;

constexpr int kMaxCarrier = 64;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed structure: width mismatch, empty cell, inconsistent table sizes.
struct StructuralError : Error {
    using Error::Error;
};

// Bad user input: syntax/semantic errors in documents, flags, expressions.
struct InputError : Error {
    using Error::Error;
};

// Subset of a carrier of size `width`, one bit per element.
struct SubsetMask {
    std::uint64_t bits = 0;
    int width = 0;

    SubsetMask() = default;
    SubsetMask(std::uint64_t b, int w) : bits(b), width(w) {}

    static SubsetMask empty_set(int q) { return {0, q}; }
    static SubsetMask full(int q) {
        return {q == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1, q};
    }
    static SubsetMask single(ElementId x, int q) { return {std::uint64_t{1} << x, q}; }

    bool empty() const { return bits == 0; }
    int count() const { return __builtin_popcountll(bits); }
    bool test(ElementId x) const { return (bits >> x) & 1; }
    void set(ElementId x) { bits |= std::uint64_t{1} << x; }
    void reset(ElementId x) { bits &= ~(std::uint64_t{1} << x); }
    ElementId lowest() const { return __builtin_ctzll(bits); }

    bool subset_of(const SubsetMask& o) const { return (bits & ~o.bits) == 0; }
    bool intersects(const SubsetMask& o) const { return (bits & o.bits) != 0; }

    SubsetMask operator|(const SubsetMask& o) const { return {bits | o.bits, width}; }
    SubsetMask operator&(const SubsetMask& o) const { return {bits & o.bits, width}; }
    SubsetMask& operator|=(const SubsetMask& o) { bits |= o.bits; return *this; }
    bool operator==(const SubsetMask& o) const { return bits == o.bits && width == o.width; }
    bool operator!=(const SubsetMask& o) const { return !(*this == o); }

    std::vector<ElementId> elements() const {
        std::vector<ElementId> out;
        for (std::uint64_t m = bits; m;) {
            out.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::uint64_t m = bits; m;) {
            fn(static_cast<ElementId>(__builtin_ctzll(m)));
            m &= m - 1;
        }
    }
};

inline std::string to_string(const SubsetMask& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](ElementId x) {
        if (!first) out += ",";
        out += std::to_string(x);
        first = false;
    });
    return out + "}";
}

// A hyperoperation: q x q table of non-empty subsets of the carrier.
class HyperOp {
public:
    HyperOp() = default;
    HyperOp(int q, std::vector<SubsetMask> cells) : q_(q), table_(std::move(cells)) {
        check_shape();
    }

    static HyperOp from_cells(int q, const std::vector<std::vector<std::vector<ElementId>>>& cells) {
        std::vector<SubsetMask> t;
        t.reserve(static_cast<std::size_t>(q) * q);
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                SubsetMask m = SubsetMask::empty_set(q);
                for (ElementId z : cells[x][y]) {
                    if (z < 0 || z >= q) throw StructuralError("cell entry out of range");
                    m.set(z);
                }
                t.push_back(m);
            }
        return HyperOp(q, std::move(t));
    }

    int size() const { return q_; }
    const SubsetMask& at(ElementId x, ElementId y) const {
        return table_[static_cast<std::size_t>(x) * q_ + y];
    }
    SubsetMask& at(ElementId x, ElementId y) {
        return table_[static_cast<std::size_t>(x) * q_ + y];
    }

private:
    void check_shape() const {
        if (q_ < 1 || q_ > kMaxCarrier) throw StructuralError("carrier size out of range");
        if (table_.size() != static_cast<std::size_t>(q_) * q_)
            throw StructuralError("hyperoperation table has wrong shape");
        const std::uint64_t carrier = SubsetMask::full(q_).bits;
        for (const SubsetMask& cell : table_) {
            if (cell.width != q_) throw StructuralError("cell width mismatch");
            if (cell.empty()) throw StructuralError("hyperoperation cell is empty");
            if (cell.bits & ~carrier) throw StructuralError("cell exceeds carrier");
        }
    }

    int q_ = 0;
    std::vector<SubsetMask> table_;
};

// A o B = union of all o(x, y) with x in A, y in B.
inline SubsetMask extend(const HyperOp& op, const SubsetMask& a, const SubsetMask& b) {
    if (a.width != op.size() || b.width != op.size())
        throw StructuralError("extend: width mismatch");
    if (a.empty() || b.empty())
        throw Error("extend: operands must be non-empty");
    SubsetMask acc = SubsetMask::empty_set(op.size());
    a.for_each([&](ElementId x) {
        b.for_each([&](ElementId y) { acc |= op.at(x, y); });
    });
    return acc;
}

enum class AxiomMode { StrongDistributive, InclusiveDistributive };

// (R, +, *): (R, +) a hypergroup, (R, *) a semihypergroup, * distributive over +.
// Axioms are not enforced at construction; run validate() to check them.
struct Hyperring {
    int q = 0;
    HyperOp plus;
    HyperOp times;
    AxiomMode axiom_mode = AxiomMode::StrongDistributive;

    Hyperring() = default;
    Hyperring(HyperOp p, HyperOp t, AxiomMode mode = AxiomMode::StrongDistributive)
        : q(p.size()), plus(std::move(p)), times(std::move(t)), axiom_mode(mode) {
        if (plus.size() != times.size())
            throw StructuralError("plus and times disagree on carrier size");
    }

    const HyperOp& op(bool multiplicative) const { return multiplicative ? times : plus; }
    SubsetMask carrier() const { return SubsetMask::full(q); }
};

enum class Axiom {
    PlusAssociativity,
    Reproducibility,
    TimesAssociativity,
    Distributivity,
};

inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::PlusAssociativity: return "plus-associativity";
        case Axiom::Reproducibility: return "reproducibility";
        case Axiom::TimesAssociativity: return "times-associativity";
        case Axiom::Distributivity: return "distributivity";
    }
    return "?";
}

struct AxiomCheck {
    Axiom axiom;
    bool pass = false;
    // First failing tuple in lexicographic scan; size 1 (reproducibility) or 3.
    std::vector<ElementId> witness;
    std::string detail;
};

struct ValidationReport {
    bool all_pass = false;
    std::vector<AxiomCheck> checks;

    const AxiomCheck* failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

namespace detail {

inline bool plus_associative(const Hyperring& R, AxiomCheck& out) {
    for (ElementId x = 0; x < R.q; ++x)
        for (ElementId y = 0; y < R.q; ++y)
            for (ElementId z = 0; z < R.q; ++z) {
                SubsetMask l = extend(R.plus, R.plus.at(x, y), SubsetMask::single(z, R.q));
                SubsetMask r = extend(R.plus, SubsetMask::single(x, R.q), R.plus.at(y, z));
                if (l != r) {
                    out.witness = {x, y, z};
                    out.detail = "(x+y)+z = " + to_string(l) + " but x+(y+z) = " + to_string(r);
                    return false;
                }
            }
    return true;
}

inline bool times_associative(const Hyperring& R, AxiomCheck& out) {
    for (ElementId x = 0; x < R.q; ++x)
        for (ElementId y = 0; y < R.q; ++y)
            for (ElementId z = 0; z < R.q; ++z) {
                SubsetMask l = extend(R.times, R.times.at(x, y), SubsetMask::single(z, R.q));
                SubsetMask r = extend(R.times, SubsetMask::single(x, R.q), R.times.at(y, z));
                if (l != r) {
                    out.witness = {x, y, z};
                    out.detail = "(x*y)*z = " + to_string(l) + " but x*(y*z) = " + to_string(r);
                    return false;
                }
            }
    return true;
}

inline bool reproducible(const Hyperring& R, AxiomCheck& out) {
    const SubsetMask full = R.carrier();
    for (ElementId x = 0; x < R.q; ++x) {
        SubsetMask left = extend(R.plus, SubsetMask::single(x, R.q), full);
        SubsetMask right = extend(R.plus, full, SubsetMask::single(x, R.q));
        if (left != full || right != full) {
            out.witness = {x};
            out.detail = "x+R = " + to_string(left) + ", R+x = " + to_string(right);
            return false;
        }
    }
    return true;
}

inline bool distributive(const Hyperring& R, AxiomCheck& out) {
    for (ElementId x = 0; x < R.q; ++x)
        for (ElementId y = 0; y < R.q; ++y)
            for (ElementId z = 0; z < R.q; ++z) {
                SubsetMask ldist = extend(R.times, SubsetMask::single(x, R.q), R.plus.at(y, z));
                SubsetMask lsum = extend(R.plus, R.times.at(x, y), R.times.at(x, z));
                SubsetMask rdist = extend(R.times, R.plus.at(y, z), SubsetMask::single(x, R.q));
                SubsetMask rsum = extend(R.plus, R.times.at(y, x), R.times.at(z, x));
                bool ok = R.axiom_mode == AxiomMode::StrongDistributive
                              ? (ldist == lsum && rdist == rsum)
                              : (ldist.subset_of(lsum) && rdist.subset_of(rsum));
                if (!ok) {
                    out.witness = {x, y, z};
                    out.detail = "x*(y+z) = " + to_string(ldist) + " vs x*y+x*z = " + to_string(lsum) +
                                 "; (y+z)*x = " + to_string(rdist) + " vs y*x+z*x = " + to_string(rsum);
                    return false;
                }
            }
    return true;
}

}  // namespace detail

// Full axiom battery. Structural problems throw; axiom failures are reported
// with the first failing tuple in lexicographic scan order.
inline ValidationReport validate(const Hyperring& R) {
    ValidationReport rep;
    {
        AxiomCheck c{Axiom::PlusAssociativity, false, {}, {}};
        c.pass = detail::plus_associative(R, c);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{Axiom::Reproducibility, false, {}, {}};
        c.pass = detail::reproducible(R, c);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{Axiom::TimesAssociativity, false, {}, {}};
        c.pass = detail::times_associative(R, c);
        rep.checks.push_back(std::move(c));
    }
    {
        AxiomCheck c{Axiom::Distributivity, false, {}, {}};
        c.pass = detail::distributive(R, c);
        rep.checks.push_back(std::move(c));
    }
    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace hyperring
