#pragma once

#include <string>
#include <vector>

#include "brt/perm_group.hpp"

namespace brt {

// Named constructions in their standard permutation representations.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);
// Dihedral group of order `order` (order = 2n, acting on the n-gon).
PermGroup dihedral_group(int order);
// A and B acting on disjoint point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
// The order-72 group F3^2 x| C8 on the 9 points of the affine plane over F3:
// point (x, y) has label 1 + x + 3y; generated by the two translations and a
// linear map of order 8.
PermGroup g72();

// Group-spec mini-language:
//   S<n> | A<n> | C<n> | D<2n> | G72 | prod(<spec>,<spec>)
//   | gens:<cycles>(;<cycles>)*
// Cycle notation is 1-based: "(1,2,3)(4,5)". Throws spec_parse_error with
// the offending position on malformed input.
PermGroup parse_group_spec(const std::string& text);

// Parses a "gens:" spec as a subgroup of `ambient`: permutations are padded
// to the ambient degree and must pass its membership test.
SubgroupEmbedding parse_subgroup_spec(const PermGroup& ambient, const std::string& text);

}  // namespace brt
