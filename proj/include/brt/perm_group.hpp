#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "brt/permutation.hpp"

namespace brt {

// Default bound on exhaustive element enumeration (conjugacy classes,
// exponent, fusion all require it).
inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

struct ConjugacyClass {
    Permutation representative;  // lexicographically least member
    std::uint64_t size = 0;
    std::uint64_t element_order = 0;
};

namespace detail {
struct GroupData;
}

// A finite permutation group given by generators. Cheap to copy; all state
// is shared, immutable after construction, and computed on demand (the
// stabilizer chain once, the element/class lists once). Two PermGroup
// handles compare as the same group iff they share state.
class PermGroup {
public:
    PermGroup();  // trivial group on one point
    PermGroup(int degree, std::vector<Permutation> generators);

    int degree() const;
    const std::vector<Permutation>& generators() const;

    // |G| via the stabilizer chain.
    const mpz_class& order() const;
    // |G| as a machine word; throws cap_exceeded beyond 2^64.
    std::uint64_t order_u64() const;

    bool contains(const Permutation& g) const;

    // All elements, sorted lexicographically by image list.
    // Throws cap_exceeded if |G| > cap.
    const std::vector<Permutation>& elements(std::uint64_t cap = kDefaultEnumerationCap) const;

    // Conjugacy classes in canonical order: by (element order, class size,
    // lexicographically least representative).
    const std::vector<ConjugacyClass>& classes(std::uint64_t cap = kDefaultEnumerationCap) const;

    // Index into classes() of the class containing g; g must be a member.
    int class_index_of(const Permutation& g, std::uint64_t cap = kDefaultEnumerationCap) const;

    // lcm of the element orders.
    std::uint64_t exponent(std::uint64_t cap = kDefaultEnumerationCap) const;

    bool same_group(const PermGroup& other) const { return data_ == other.data_; }

private:
    std::shared_ptr<detail::GroupData> data_;
};

// H <= G with H's generators checked against G's membership test.
struct SubgroupEmbedding {
    PermGroup ambient;
    PermGroup subgroup;
};

// Builds the embedding <gens> <= G. Generators of smaller degree are padded
// with fixed points; each must pass G's membership test.
SubgroupEmbedding subgroup(const PermGroup& g, const std::vector<Permutation>& gens);

// fusion[k] = index of the G-class containing the k-th H-class.
std::vector<int> class_fusion(const SubgroupEmbedding& emb,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace brt
