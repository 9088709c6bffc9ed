#include "brt/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace brt {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BrauerContext p_regular_classes(const PermGroup& g, std::uint64_t p, std::uint64_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    BrauerContext ctx{g, p, {}};
    const auto& classes = g.classes(cap);
    for (int i = 0; i < static_cast<int>(classes.size()); ++i)
        if (classes[i].element_order % p != 0) ctx.p_regular.push_back(i);
    return ctx;
}

bool coverage_criterion(const SubgroupEmbedding& emb, std::uint64_t p, std::uint64_t cap) {
    const BrauerContext gctx = p_regular_classes(emb.ambient, p, cap);
    const std::vector<int> fusion = class_fusion(emb, cap);
    std::set<int> hit;
    for (const int target : fusion) hit.insert(target);
    // Fused images of p-regular H-classes are automatically p-regular, so
    // testing containment of every p-regular G-class suffices.
    return std::all_of(gctx.p_regular.begin(), gctx.p_regular.end(),
                       [&](int k) { return hit.contains(k); });
}

std::vector<std::vector<Cyclotomic>> restriction_matrix(const CharacterTable& tg,
                                                        const SubgroupEmbedding& emb,
                                                        std::uint64_t p, std::uint64_t cap) {
    if (!tg.group.same_group(emb.ambient))
        throw std::invalid_argument("table does not belong to the ambient group");
    const BrauerContext hctx = p_regular_classes(emb.subgroup, p, cap);
    const std::vector<int> fusion = class_fusion(emb, cap);
    std::vector<std::vector<Cyclotomic>> m;
    m.reserve(tg.irreducibles.size());
    for (const ClassFunction& chi : tg.irreducibles) {
        std::vector<Cyclotomic> row;
        row.reserve(hctx.p_regular.size());
        for (const int hk : hctx.p_regular) row.push_back(chi.values[fusion[hk]]);
        m.push_back(std::move(row));
    }
    return m;
}

int cyclotomic_rank(std::vector<std::vector<Cyclotomic>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const Cyclotomic inv = m[rank][c].inverse();
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Cyclotomic factor = m[i][c] * inv;
            for (int j = c; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool is_injective_restriction(const CharacterTable& tg, const SubgroupEmbedding& emb,
                              std::uint64_t p, std::uint64_t cap) {
    const BrauerContext gctx = p_regular_classes(emb.ambient, p, cap);
    return cyclotomic_rank(restriction_matrix(tg, emb, p, cap)) == gctx.r();
}

bool verify_theorem_a(const CharacterTable& tg, const SubgroupEmbedding& emb, std::uint64_t p,
                      std::uint64_t cap) {
    return coverage_criterion(emb, p, cap) == is_injective_restriction(tg, emb, p, cap);
}

bool class_meet_bijection(const SubgroupEmbedding& emb, std::uint64_t p, std::uint64_t cap) {
    const BrauerContext gctx = p_regular_classes(emb.ambient, p, cap);
    const BrauerContext hctx = p_regular_classes(emb.subgroup, p, cap);
    const std::vector<int> fusion = class_fusion(emb, cap);
    std::set<int> images;
    for (const int hk : hctx.p_regular)
        if (!images.insert(fusion[hk]).second) return false;  // K meets H in two H-classes
    return static_cast<int>(images.size()) == gctx.r();
}

LatticeBasis decomposition_kernel(const CharacterTable& th, std::uint64_t p, std::uint64_t cap) {
    const BrauerContext ctx = p_regular_classes(th.group, p, cap);
    const int n = th.class_count();
    // Expand the n x r_H cyclotomic matrix of values into rational columns
    // (one block per class, coordinates in the power basis at the lcm
    // conductor of the column), scale each column integral, and take the
    // integer kernel of the transpose: vectors a with sum a_i psi_i = 0 on
    // every p-regular class.
    std::vector<std::vector<Rational>> columns;  // each of length n
    for (const int k : ctx.p_regular) {
        std::uint64_t conductor = 1;
        for (int i = 0; i < n; ++i)
            conductor = std::lcm(conductor, th.irreducibles[i].values[k].conductor());
        const std::size_t width = euler_phi(conductor);
        std::vector<std::vector<Rational>> block(width, std::vector<Rational>(n, Rational(0)));
        for (int i = 0; i < n; ++i) {
            const Cyclotomic lifted = th.irreducibles[i].values[k].lifted(conductor);
            for (std::size_t c = 0; c < width; ++c) block[c][i] = lifted.coefficients()[c];
        }
        for (auto& col : block) columns.push_back(std::move(col));
    }
    IntMatrix constraints(static_cast<int>(columns.size()), n);
    for (std::size_t c = 0; c < columns.size(); ++c) {
        Integer denom = 1;
        for (const Rational& x : columns[c]) denom = lcm(denom, Integer(x.get_den()));
        for (int i = 0; i < n; ++i) {
            const Rational scaled = columns[c][i] * Rational(denom);
            constraints.at(static_cast<int>(c), i) = scaled.get_num();
        }
    }
    return integer_kernel(constraints);
}

std::optional<Integer> image_index(const CharacterTable& tg, const CharacterTable& th,
                                   const SubgroupEmbedding& emb, std::uint64_t p,
                                   std::uint64_t cap) {
    if (!th.group.same_group(emb.subgroup))
        throw std::invalid_argument("table does not belong to the subgroup");
    // Z[IBr(H)] = Z^|Irr(H)| / kernel-of-restriction-to-p-regular. The image
    // of restriction is spanned by the ordinary restrictions of Irr(G) in
    // Irr(H)-coordinates; its index in the quotient is the index of
    // [restrictions | kernel] in Z^|Irr(H)|.
    const int n_h = th.class_count();
    IntMatrix restrictions(n_h, static_cast<int>(tg.irreducibles.size()));
    for (std::size_t i = 0; i < tg.irreducibles.size(); ++i) {
        const ClassFunction res = restrict_class_function(emb, tg.irreducibles[i], cap);
        const std::vector<Integer> coords = decompose(res, th);
        for (int j = 0; j < n_h; ++j) restrictions.at(j, static_cast<int>(i)) = coords[j];
    }
    const LatticeBasis kernel = decomposition_kernel(th, p, cap);
    return lattice_index(hconcat(restrictions, kernel.basis));
}

bool is_isomorphism(const CharacterTable& tg, const CharacterTable& th,
                    const SubgroupEmbedding& emb, std::uint64_t p, std::uint64_t cap) {
    const BrauerContext gctx = p_regular_classes(emb.ambient, p, cap);
    const BrauerContext hctx = p_regular_classes(emb.subgroup, p, cap);
    if (gctx.r() != hctx.r()) return false;
    if (!is_injective_restriction(tg, emb, p, cap)) return false;
    const std::optional<Integer> index = image_index(tg, th, emb, p, cap);
    return index.has_value() && *index == 1;
}

RestrictionReport analyze(const CharacterTable& tg, const CharacterTable& th,
                          const SubgroupEmbedding& emb, std::uint64_t p, std::uint64_t cap) {
    RestrictionReport report;
    report.group_order = emb.ambient.order();
    report.subgroup_order = emb.subgroup.order();
    report.prime = p;
    report.r_g = p_regular_classes(emb.ambient, p, cap).r();
    report.r_h = p_regular_classes(emb.subgroup, p, cap).r();
    report.coverage = coverage_criterion(emb, p, cap);
    report.injective = is_injective_restriction(tg, emb, p, cap);
    report.theorem_a_consistent = (report.coverage == report.injective);
    if (!report.theorem_a_consistent)
        throw std::logic_error("restriction criterion mismatch: fusion and rank disagree");
    report.class_meet_bijection = brt::class_meet_bijection(emb, p, cap);
    report.image_index = image_index(tg, th, emb, p, cap);
    report.isomorphism = report.injective && report.r_g == report.r_h &&
                         report.image_index.has_value() && *report.image_index == 1;
    if (report.isomorphism && !report.class_meet_bijection)
        throw std::logic_error("isomorphism without class bijection");
    return report;
}

RestrictionReport analyze(const SubgroupEmbedding& emb, std::uint64_t p, std::uint64_t cap) {
    const CharacterTable tg = character_table(emb.ambient, cap);
    const CharacterTable th = character_table(emb.subgroup, cap);
    return analyze(tg, th, emb, p, cap);
}

}  // namespace brt
