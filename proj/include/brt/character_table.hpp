#pragma once

#include <cstdint>
#include <vector>

#include "brt/cyclotomic.hpp"
#include "brt/perm_group.hpp"

namespace brt {

// An exact class function: one value per conjugacy class, in the group's
// canonical class order.
struct ClassFunction {
    PermGroup group;
    std::vector<Cyclotomic> values;
};

// The exact ordinary character table. Rows are sorted by degree, then by
// descending coefficient-lex on the value vectors, so the trivial character
// comes first.
struct CharacterTable {
    PermGroup group;
    std::vector<ClassFunction> irreducibles;
    std::vector<std::uint64_t> degrees;

    int class_count() const { return static_cast<int>(irreducibles.size()); }
};

// Computes Irr(G) exactly (Dixon-Schneider: split the common eigenspaces of
// the class-multiplication matrices modulo a prime q = 1 mod exp(G),
// q > 2*sqrt(|G|), then lift eigenvalue multiplicities to cyclotomics).
CharacterTable character_table(const PermGroup& g,
                               std::uint64_t cap = kDefaultEnumerationCap);

// (1/|G|) sum over classes |K| a(K) conj(b(K)); both on the same group.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);

// Values pulled back through the class fusion of the embedding.
ClassFunction restrict_class_function(const SubgroupEmbedding& emb, const ClassFunction& f,
                                      std::uint64_t cap = kDefaultEnumerationCap);

// Coefficients of f in Z[Irr(H)]; every inner product must be a rational
// integer and the combination must reproduce f exactly.
std::vector<Integer> decompose(const ClassFunction& f, const CharacterTable& table);

}  // namespace brt
