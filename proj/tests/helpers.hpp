#pragma once

#include <string>
#include <vector>

#include "hyperring/catalog.hpp"
#include "hyperring/partition.hpp"

namespace testutil {

using namespace hyperring;

inline Partition partition_of(int q, const std::vector<std::vector<ElementId>>& classes) {
    Partition p(q);
    for (const auto& c : classes)
        for (std::size_t i = 1; i < c.size(); ++i) p.merge(c[0], c[i]);
    return p;
}

inline SubsetMask mask_of(int q, std::initializer_list<ElementId> xs) {
    SubsetMask m = SubsetMask::empty_set(q);
    for (ElementId x : xs) m.set(x);
    return m;
}

// Carrier elements small enough for the exhaustive suites.
inline std::vector<CatalogEntry> small_catalog(int max_q = 4) {
    std::vector<CatalogEntry> out;
    for (auto& entry : standard_catalog())
        if (entry.structure.q <= max_q) out.push_back(entry);
    return out;
}

// q=2 hyperring with xor addition and constant-zero multiplication.
inline Hyperring zero_mul_ring2() {
    std::vector<SubsetMask> plus{
        SubsetMask::single(0, 2), SubsetMask::single(1, 2),
        SubsetMask::single(1, 2), SubsetMask::single(0, 2)};
    std::vector<SubsetMask> times(4, SubsetMask::single(0, 2));
    return Hyperring(HyperOp(2, plus), HyperOp(2, times));
}

}  // namespace testutil
