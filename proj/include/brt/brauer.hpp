#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brt/character_table.hpp"
#include "brt/int_matrix.hpp"

namespace brt {

// The p-regular side of a group: the classes whose element order is prime
// to p. Their count r equals the number of irreducible Brauer characters,
// and the lattice of generalized Brauer characters is realized as the
// integer span of the ordinary irreducibles restricted to these classes
// (the decomposition map is onto, so no Brauer character is ever computed
// explicitly).
struct BrauerContext {
    PermGroup group;
    std::uint64_t prime = 0;
    std::vector<int> p_regular;  // class indices, canonical order

    int r() const { return static_cast<int>(p_regular.size()); }
};

BrauerContext p_regular_classes(const PermGroup& g, std::uint64_t p,
                                std::uint64_t cap = kDefaultEnumerationCap);

// Right-hand side of the restriction criterion: every p-regular class of G
// meets H (equivalently, every p-regular element lies in a conjugate of H).
// Decided purely by class fusion.
bool coverage_criterion(const SubgroupEmbedding& emb, std::uint64_t p,
                        std::uint64_t cap = kDefaultEnumerationCap);

// Rows Irr(G), columns the p-regular classes of H; entry = value of the
// irreducible at the fused ambient class.
std::vector<std::vector<Cyclotomic>> restriction_matrix(const CharacterTable& tg,
                                                        const SubgroupEmbedding& emb,
                                                        std::uint64_t p,
                                                        std::uint64_t cap = kDefaultEnumerationCap);

// Rank over the cyclotomics of an exact matrix (Gaussian elimination with
// exact field division; pivots chosen first-nonzero in canonical order).
int cyclotomic_rank(std::vector<std::vector<Cyclotomic>> m);

// Left-hand side of the criterion: restriction on generalized Brauer
// characters is injective iff the restriction matrix has full rank r_G.
bool is_injective_restriction(const CharacterTable& tg, const SubgroupEmbedding& emb,
                              std::uint64_t p, std::uint64_t cap = kDefaultEnumerationCap);

// Both sides computed independently; true when they agree (they must).
bool verify_theorem_a(const CharacterTable& tg, const SubgroupEmbedding& emb, std::uint64_t p,
                      std::uint64_t cap = kDefaultEnumerationCap);

// Whether fusion restricts to a bijection between the p-regular classes of
// H and of G (K -> K meets H, each intersection a single H-class).
bool class_meet_bijection(const SubgroupEmbedding& emb, std::uint64_t p,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Saturated kernel of restriction-to-p-regular on Z[Irr(H)]: integer vectors
// a with sum a_i psi_i vanishing on every p-regular class. Rank is
// |Irr(H)| - r_H.
LatticeBasis decomposition_kernel(const CharacterTable& th, std::uint64_t p,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// Index of the image of restriction inside the rank-r_H lattice of
// generalized Brauer characters of H; nullopt when the image has lower rank
// (infinite index). 1 together with full rank and r_G = r_H means the
// restriction map is an isomorphism.
std::optional<Integer> image_index(const CharacterTable& tg, const CharacterTable& th,
                                   const SubgroupEmbedding& emb, std::uint64_t p,
                                   std::uint64_t cap = kDefaultEnumerationCap);

bool is_isomorphism(const CharacterTable& tg, const CharacterTable& th,
                    const SubgroupEmbedding& emb, std::uint64_t p,
                    std::uint64_t cap = kDefaultEnumerationCap);

// Everything the analysis produces for one (G, H, p) triple.
struct RestrictionReport {
    Integer group_order;
    Integer subgroup_order;
    std::uint64_t prime = 0;
    int r_g = 0;
    int r_h = 0;
    bool coverage = false;
    bool injective = false;
    bool theorem_a_consistent = false;
    bool class_meet_bijection = false;
    std::optional<Integer> image_index;  // nullopt = infinite
    bool isomorphism = false;

    bool operator==(const RestrictionReport&) const = default;
};

// Runs the full analysis. The two sides of the injectivity criterion use
// disjoint code paths (fusion vs. exact rank); their agreement is asserted.
RestrictionReport analyze(const CharacterTable& tg, const CharacterTable& th,
                          const SubgroupEmbedding& emb, std::uint64_t p,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Convenience overload computing both tables.
RestrictionReport analyze(const SubgroupEmbedding& emb, std::uint64_t p,
                          std::uint64_t cap = kDefaultEnumerationCap);

bool is_prime(std::uint64_t p);

}  // namespace brt
