#pragma once

#include <cstdint>
#include <vector>

#include "brt/perm_group.hpp"

namespace brt {

struct SubgroupSearchLimits {
    std::uint64_t max_order = 2000;    // bound on |G|
    std::size_t max_subgroups = 100000;  // bound on discovered conjugacy classes
};

// All subgroups of G up to conjugacy, one embedding per class, in a
// deterministic order (by subgroup order, then by the class's canonical
// element-set fingerprint). Seeds with the cyclic subgroups and repeatedly
// extends known class representatives by group elements, deduplicating
// classes by their lexicographically least conjugate element set.
std::vector<SubgroupEmbedding> enumerate_subgroups(const PermGroup& g,
                                                   const SubgroupSearchLimits& limits = {});

}  // namespace brt
