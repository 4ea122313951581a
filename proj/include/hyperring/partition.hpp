#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "hyperring/relation.hpp"

namespace hyperring {

// Union-find partition of [0, q).
class Partition {
public:
    Partition() = default;
    explicit Partition(int q) : parent_(static_cast<std::size_t>(q)), rank_(static_cast<std::size_t>(q), 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    static Partition from_relation(const Relation& rel) {
        Partition p(rel.size());
        for (int i = 0; i < rel.size(); ++i)
            for (int j = i + 1; j < rel.size(); ++j)
                if (rel.test(i, j)) p.merge(i, j);
        return p;
    }

    int size() const { return static_cast<int>(parent_.size()); }

    ElementId find(ElementId x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[parent_[static_cast<std::size_t>(x)]];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // Returns true when two classes were actually joined.
    bool merge(ElementId a, ElementId b) {
        ElementId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<std::size_t>(rb)] = ra;
        if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
            ++rank_[static_cast<std::size_t>(ra)];
        return true;
    }

    bool same(ElementId a, ElementId b) const { return find(a) == find(b); }

    int class_count() const {
        int n = 0;
        for (int i = 0; i < size(); ++i) n += find(i) == i;
        return n;
    }

    SubsetMask class_of(ElementId x) const {
        SubsetMask m = SubsetMask::empty_set(size());
        ElementId r = find(x);
        for (int i = 0; i < size(); ++i)
            if (find(i) == r) m.set(i);
        return m;
    }

    // Classes ordered by smallest member.
    std::vector<SubsetMask> classes() const {
        std::vector<SubsetMask> out;
        std::vector<bool> seen(static_cast<std::size_t>(size()), false);
        for (int i = 0; i < size(); ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            SubsetMask c = class_of(i);
            c.for_each([&](ElementId x) { seen[static_cast<std::size_t>(x)] = true; });
            out.push_back(c);
        }
        return out;
    }

    Relation to_relation() const {
        Relation rel(size());
        for (const SubsetMask& c : classes()) rel.add_block(c, c);
        return rel;
    }

    // Every class of *this contained in a class of coarser.
    bool refines(const Partition& coarser) const {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (same(i, j) && !coarser.same(i, j)) return false;
        return true;
    }

    bool operator==(const Partition& o) const {
        if (size() != o.size()) return false;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (same(i, j) != o.same(i, j)) return false;
        return true;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    mutable std::vector<ElementId> parent_;
    std::vector<int> rank_;
};

}  // namespace hyperring
