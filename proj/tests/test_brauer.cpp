#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <doctest.h>

#include "brt/brauer.hpp"
#include "brt/catalog.hpp"
#include "brt/subgroups.hpp"

using namespace brt;
using C = Cyclotomic;

namespace {

SubgroupEmbedding d10_in_a5(const PermGroup& a5) {
    return subgroup(a5, {parse_cycles("(1,2,3,4,5)"), parse_cycles("(2,5)(3,4)")});
}
SubgroupEmbedding s3_in_a5(const PermGroup& a5) {
    return subgroup(a5, {parse_cycles("(1,2,3)"), parse_cycles("(1,2)(4,5)")});
}
SubgroupEmbedding c5_in_a5(const PermGroup& a5) {
    return subgroup(a5, {parse_cycles("(1,2,3,4,5)")});
}
SubgroupEmbedding a4_in_a5(const PermGroup& a5) {
    return subgroup(a5, {parse_cycles("(1,2,3)"), parse_cycles("(2,3,4)")});
}

// --- independent image-index oracle -------------------------------------
//
// Realizes both lattices concretely as integer row spans of value vectors
// on the p-regular classes of H (coordinates in cyclotomic power bases),
// writes the restricted characters in an HNF basis of the Brauer-character
// value lattice, and reads the index off the coordinate matrix. No inner
// products, no decomposition kernel, no quotient construction.

std::vector<std::vector<Rational>> expand_rows(const std::vector<std::vector<C>>& rows_a,
                                               const std::vector<std::vector<C>>& rows_b,
                                               bool pick_b) {
    const auto& rows = pick_b ? rows_b : rows_a;
    const std::size_t width = rows_a[0].size();
    std::vector<std::uint64_t> conductor(width, 1);
    for (const auto* group : {&rows_a, &rows_b})
        for (const auto& row : *group)
            for (std::size_t j = 0; j < width; ++j)
                conductor[j] = std::lcm(conductor[j], row[j].conductor());
    std::vector<std::vector<Rational>> out;
    for (const auto& row : rows) {
        std::vector<Rational> flat;
        for (std::size_t j = 0; j < width; ++j) {
            const C lifted = row[j].lifted(conductor[j]);
            for (const Rational& c : lifted.coefficients()) flat.push_back(c);
        }
        out.push_back(std::move(flat));
    }
    return out;
}

// Solves basis * x = v exactly over Q; returns nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& basis,
                                                    const std::vector<Rational>& v) {
    const int rows = basis.rows(), cols = basis.cols();
    std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = Rational(basis.at(i, j));
        aug[i][cols] = v[i];
    }
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (aug[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(aug[r], aug[p]);
        const Rational inv = 1 / aug[r][c];
        for (int j = c; j <= cols; ++j) aug[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            const Rational f = aug[i][c];
            for (int j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int k = 0; k < r; ++k) x[pivot_col[k]] = aug[k][cols];
    return x;
}

std::optional<Integer> image_index_oracle(const CharacterTable& tg, const CharacterTable& th,
                                          const SubgroupEmbedding& emb, std::uint64_t p) {
    const BrauerContext hctx = p_regular_classes(emb.subgroup, p);
    const std::vector<int> fusion = class_fusion(emb);

    std::vector<std::vector<C>> h_rows, g_rows;
    for (const ClassFunction& psi : th.irreducibles) {
        std::vector<C> row;
        for (const int hk : hctx.p_regular) row.push_back(psi.values[hk]);
        h_rows.push_back(std::move(row));
    }
    for (const ClassFunction& chi : tg.irreducibles) {
        std::vector<C> row;
        for (const int hk : hctx.p_regular) row.push_back(chi.values[fusion[hk]]);
        g_rows.push_back(std::move(row));
    }

    const auto h_flat = expand_rows(h_rows, g_rows, false);
    const auto g_flat = expand_rows(h_rows, g_rows, true);
    const int dim = static_cast<int>(h_flat[0].size());

    // Character values are algebraic integers: power-basis coordinates are
    // integers already.
    IntMatrix h_mat(dim, static_cast<int>(h_flat.size()));
    for (std::size_t i = 0; i < h_flat.size(); ++i)
        for (int j = 0; j < dim; ++j) {
            REQUIRE(is_integer(h_flat[i][j]));
            h_mat.at(j, static_cast<int>(i)) = h_flat[i][j].get_num();
        }
    const IntMatrix h_basis = hnf(h_mat);
    REQUIRE(h_basis.cols() == hctx.r());  // full Brauer-character rank

    // Coordinates of each restricted character in that basis.
    IntMatrix coords(hctx.r(), static_cast<int>(g_flat.size()));
    for (std::size_t i = 0; i < g_flat.size(); ++i) {
        const auto solution = solve_rational(h_basis, g_flat[i]);
        REQUIRE(solution.has_value());  // restrictions lie in the lattice
        for (int k = 0; k < hctx.r(); ++k) {
            REQUIRE(is_integer((*solution)[k]));
            coords.at(k, static_cast<int>(i)) = (*solution)[k].get_num();
        }
    }
    const IntMatrix reduced = hnf(coords);
    if (reduced.cols() < hctx.r()) return std::nullopt;
    Integer index = 1;
    for (int j = 0; j < reduced.cols(); ++j) index *= reduced.at(j, j);
    return index;
}

std::vector<std::uint64_t> auto_primes(const PermGroup& g) {
    std::vector<std::uint64_t> primes;
    std::uint64_t rest = g.order_u64();
    for (std::uint64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    if (rest > 1) primes.push_back(rest);
    for (std::uint64_t p = 2;; ++p)
        if (is_prime(p) && g.order_u64() % p != 0) {
            primes.push_back(p);
            break;
        }
    std::sort(primes.begin(), primes.end());
    return primes;
}

}  // namespace

TEST_CASE("p-regular contexts") {
    const PermGroup a5 = parse_group_spec("A5");
    const BrauerContext at3 = p_regular_classes(a5, 3);
    REQUIRE(at3.r() == 4);
    std::vector<std::uint64_t> orders;
    for (const int k : at3.p_regular) orders.push_back(a5.classes()[k].element_order);
    CHECK(orders == std::vector<std::uint64_t>{1, 2, 5, 5});

    CHECK(p_regular_classes(a5, 5).r() == 3);
    CHECK(p_regular_classes(a5, 7).r() == 5);  // p coprime: all classes

    // exhaustive oracle: count classes with no element of order divisible by p
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        std::set<int> reg;
        for (const Permutation& x : a5.elements())
            if (x.order() % p != 0) reg.insert(a5.class_index_of(x));
        CHECK(static_cast<int>(reg.size()) == p_regular_classes(a5, p).r());
    }

    CHECK_THROWS_AS(p_regular_classes(a5, 4), std::invalid_argument);
    CHECK_THROWS_AS(p_regular_classes(a5, 1), std::invalid_argument);
}

TEST_CASE("coverage criterion against the exhaustive union of conjugates") {
    const PermGroup a5 = parse_group_spec("A5");
    const auto exhaustive = [&](const SubgroupEmbedding& emb, std::uint64_t p) {
        // every p-regular element of G lies in some conjugate of H?
        std::set<Permutation> in_conjugates;
        for (const Permutation& x : a5.elements())
            for (const Permutation& h : emb.subgroup.elements())
                in_conjugates.insert(h.conjugated_by(x));
        for (const Permutation& y : a5.elements())
            if (y.order() % p != 0 && !in_conjugates.contains(y)) return false;
        return true;
    };
    const SubgroupEmbedding d10 = d10_in_a5(a5), s3 = s3_in_a5(a5), c5 = c5_in_a5(a5);
    CHECK(coverage_criterion(d10, 3));
    CHECK(coverage_criterion(s3, 5));
    CHECK_FALSE(coverage_criterion(c5, 3));
    for (const std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        CHECK(coverage_criterion(d10, p) == exhaustive(d10, p));
        CHECK(coverage_criterion(s3, p) == exhaustive(s3, p));
        CHECK(coverage_criterion(c5, p) == exhaustive(c5, p));
    }
}

TEST_CASE("restriction matrix shapes and degenerate cases") {
    const CharacterTable tg = character_table(parse_group_spec("A5"));
    const PermGroup& a5 = tg.group;

    SUBCASE("H = G with coprime p gives the whole table") {
        const SubgroupEmbedding self = subgroup(a5, a5.generators());
        const auto m = restriction_matrix(tg, self, 7);
        REQUIRE(m.size() == 5);
        REQUIRE(m[0].size() == 5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) CHECK(m[i][j] == tg.irreducibles[i].values[j]);
    }

    SUBCASE("trivial subgroup gives the column of degrees") {
        const SubgroupEmbedding triv = subgroup(a5, {Permutation(5)});
        const auto m = restriction_matrix(tg, triv, 3);
        REQUIRE(m[0].size() == 1);
        for (int i = 0; i < 5; ++i)
            CHECK(m[i][0] == C(Rational(static_cast<unsigned long>(tg.degrees[i]))));
    }

    SUBCASE("A5 to D10 at p=3 is 5x4 with golden-ratio entries") {
        const auto m = restriction_matrix(tg, d10_in_a5(a5), 3);
        REQUIRE(m.size() == 5);
        REQUIRE(m[0].size() == 4);
        bool has_irrational = false;
        for (const auto& row : m)
            for (const C& v : row) has_irrational = has_irrational || !v.is_rational();
        CHECK(has_irrational);
    }
}

TEST_CASE("rank law: the G-side restricted table always has rank r_G") {
    for (const char* spec : {"S3", "A4", "D10", "A5", "G72"}) {
        const PermGroup g = parse_group_spec(spec);
        const CharacterTable tg = character_table(g);
        const SubgroupEmbedding self = subgroup(g, g.generators());
        for (const std::uint64_t p : auto_primes(g)) {
            const BrauerContext ctx = p_regular_classes(g, p);
            CHECK(cyclotomic_rank(restriction_matrix(tg, self, p)) == ctx.r());
        }
    }
}

TEST_CASE("injectivity fixed cases") {
    const CharacterTable tg = character_table(parse_group_spec("A5"));
    const PermGroup& a5 = tg.group;
    CHECK(is_injective_restriction(tg, d10_in_a5(a5), 3));
    CHECK_FALSE(is_injective_restriction(tg, c5_in_a5(a5), 3));
    CHECK(is_injective_restriction(tg, subgroup(a5, a5.generators()), 3));
}

TEST_CASE("the equivalence holds across the small sweep corpus") {
    for (const char* spec : {"S3", "A4", "D10"}) {
        const PermGroup g = parse_group_spec(spec);
        const CharacterTable tg = character_table(g);
        for (const SubgroupEmbedding& emb : enumerate_subgroups(g)) {
            for (const std::uint64_t p : auto_primes(g)) {
                CAPTURE(spec);
                CAPTURE(emb.subgroup.order_u64());
                CAPTURE(p);
                CHECK(verify_theorem_a(tg, emb, p));
            }
        }
    }
}

TEST_CASE("class meet bijection") {
    const PermGroup a5 = parse_group_spec("A5");
    CHECK(class_meet_bijection(d10_in_a5(a5), 3));
    CHECK(class_meet_bijection(subgroup(a5, a5.generators()), 3));
    // A5's order-3 class meets A4 in two A4-classes
    CHECK_FALSE(class_meet_bijection(a4_in_a5(a5), 5));
}

TEST_CASE("decomposition kernels") {
    const CharacterTable th_a5 = character_table(parse_group_spec("A5"));
    const CharacterTable th_s3 = character_table(parse_group_spec("S3"));

    // p coprime to |H|: restriction to p-regular loses nothing
    CHECK(decomposition_kernel(th_s3, 5).rank() == 0);
    CHECK(decomposition_kernel(th_a5, 7).rank() == 0);
    // |Irr| - r ranks
    CHECK(decomposition_kernel(th_a5, 3).rank() == 1);   // 5 - 4
    CHECK(decomposition_kernel(th_s3, 2).rank() == 1);   // 3 - 2
    CHECK(decomposition_kernel(th_a5, 2).rank() == 1);   // 5 - 4
    CHECK(decomposition_kernel(th_a5, 5).rank() == 2);   // 5 - 3

    // kernel vectors annihilate every p-regular value, exactly
    for (const std::uint64_t p : {2ull, 3ull, 5ull}) {
        const LatticeBasis k = decomposition_kernel(th_a5, p);
        const BrauerContext ctx = p_regular_classes(th_a5.group, p);
        for (int j = 0; j < k.basis.cols(); ++j)
            for (const int cls : ctx.p_regular) {
                C acc;
                for (int i = 0; i < k.basis.rows(); ++i)
                    acc += C(Rational(k.basis.at(i, j))) * th_a5.irreducibles[i].values[cls];
                CHECK(acc.is_zero());
            }
    }
}

TEST_CASE("image index agrees with the brute-force lattice oracle") {
    const CharacterTable ta5 = character_table(parse_group_spec("A5"));
    const PermGroup& a5 = ta5.group;

    const auto check_pair = [](const CharacterTable& tg, const SubgroupEmbedding& emb,
                               std::uint64_t p) {
        const CharacterTable th = character_table(emb.subgroup);
        const auto pipeline = image_index(tg, th, emb, p);
        const auto oracle = image_index_oracle(tg, th, emb, p);
        CHECK(pipeline.has_value() == oracle.has_value());
        if (pipeline && oracle) CHECK(*pipeline == *oracle);
        return pipeline;
    };

    SUBCASE("the closing counterexample: index frozen at 2") {
        const auto idx = check_pair(ta5, d10_in_a5(a5), 3);
        REQUIRE(idx.has_value());
        CHECK(*idx == 2);  // regression value from the oracle
    }

    SUBCASE("identity restriction has index 1") {
        const auto idx = check_pair(ta5, subgroup(a5, a5.generators()), 3);
        REQUIRE(idx.has_value());
        CHECK(*idx == 1);
    }

    SUBCASE("rank-deficient restriction has no finite index") {
        const CharacterTable th = character_table(c5_in_a5(a5).subgroup);
        CHECK_FALSE(image_index(ta5, th, c5_in_a5(a5), 3).has_value());
        CHECK_FALSE(image_index_oracle(ta5, th, c5_in_a5(a5), 3).has_value());
    }

    SUBCASE("cross-check over every subgroup of S4 and A5") {
        for (const char* spec : {"S4", "A5"}) {
            const PermGroup g = parse_group_spec(spec);
            const CharacterTable tg = character_table(g);
            for (const SubgroupEmbedding& emb : enumerate_subgroups(g))
                for (const std::uint64_t p : auto_primes(g)) check_pair(tg, emb, p);
        }
    }

    SUBCASE("G72 solvable example") {
        const PermGroup g = g72();
        const CharacterTable tg = character_table(g);
        const SubgroupEmbedding s3 =
            subgroup(g, {parse_cycles("(1,2,3)(4,5,6)(7,8,9)"), parse_cycles("(2,3)(4,7)(5,9)(6,8)")});
        check_pair(tg, s3, 2);
    }
}

TEST_CASE("image index is independent of row order") {
    const CharacterTable tg = character_table(parse_group_spec("A5"));
    const PermGroup& a5 = tg.group;
    const SubgroupEmbedding emb = d10_in_a5(a5);
    const CharacterTable th = character_table(emb.subgroup);
    const auto reference = image_index(tg, th, emb, 3);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        CharacterTable tg2 = tg;
        CharacterTable th2 = th;
        std::shuffle(tg2.irreducibles.begin(), tg2.irreducibles.end(), rng);
        std::shuffle(th2.irreducibles.begin(), th2.irreducibles.end(), rng);
        const auto shuffled = image_index(tg2, th2, emb, 3);
        REQUIRE(shuffled.has_value() == reference.has_value());
        CHECK(*shuffled == *reference);
    }
}

TEST_CASE("isomorphism classification") {
    const CharacterTable ta5 = character_table(parse_group_spec("A5"));
    const PermGroup& a5 = ta5.group;
    CHECK_FALSE(is_isomorphism(ta5, character_table(d10_in_a5(a5).subgroup), d10_in_a5(a5), 3));
    CHECK_FALSE(is_isomorphism(ta5, character_table(c5_in_a5(a5).subgroup), c5_in_a5(a5), 3));
    const SubgroupEmbedding self = subgroup(a5, a5.generators());
    CHECK(is_isomorphism(ta5, ta5, self, 3));
}

TEST_CASE("full reports for the worked examples") {
    const PermGroup a5 = parse_group_spec("A5");

    SUBCASE("A5 / D10 / p=3") {
        const RestrictionReport r = analyze(d10_in_a5(a5), 3);
        CHECK(r.group_order == 60);
        CHECK(r.subgroup_order == 10);
        CHECK(r.r_g == 4);
        CHECK(r.r_h == 4);
        CHECK(r.coverage);
        CHECK(r.injective);
        CHECK(r.theorem_a_consistent);
        CHECK(r.class_meet_bijection);
        REQUIRE(r.image_index.has_value());
        CHECK(*r.image_index == 2);
        CHECK_FALSE(r.isomorphism);
    }

    SUBCASE("A5 / S3 / p=5") {
        const RestrictionReport r = analyze(s3_in_a5(a5), 5);
        CHECK(r.injective);
        CHECK(r.r_g == 3);
        CHECK(r.r_h == 3);
        CHECK_FALSE(r.isomorphism);
    }

    SUBCASE("G72 / S3 / p=2") {
        const PermGroup g = g72();
        const SubgroupEmbedding s3 =
            subgroup(g, {parse_cycles("(1,2,3)(4,5,6)(7,8,9)"), parse_cycles("(2,3)(4,7)(5,9)(6,8)")});
        const RestrictionReport r = analyze(s3, 2);
        CHECK(r.subgroup_order == 6);
        CHECK(r.coverage);
        CHECK(r.injective);
        CHECK(r.r_g == 2);
        CHECK(r.r_h == 2);
    }

    SUBCASE("identity case is an isomorphism") {
        const PermGroup c6 = parse_group_spec("C6");
        const RestrictionReport r = analyze(subgroup(c6, c6.generators()), 5);
        CHECK(r.isomorphism);
        REQUIRE(r.image_index.has_value());
        CHECK(*r.image_index == 1);
    }

    SUBCASE("trivial subgroup: both sides false") {
        const RestrictionReport r = analyze(subgroup(a5, {Permutation(5)}), 3);
        CHECK_FALSE(r.coverage);
        CHECK_FALSE(r.injective);
        CHECK(r.theorem_a_consistent);
    }

    SUBCASE("p larger than the group order") {
        const PermGroup s3 = parse_group_spec("S3");
        const RestrictionReport r = analyze(subgroup(s3, s3.generators()), 101);
        CHECK(r.isomorphism);
        CHECK(r.r_g == 3);
    }
}

TEST_CASE("sweep-wide structural properties") {
    for (const char* spec : {"S3", "A4", "D10"}) {
        const PermGroup g = parse_group_spec(spec);
        const CharacterTable tg = character_table(g);
        for (const SubgroupEmbedding& emb : enumerate_subgroups(g)) {
            const CharacterTable th = character_table(emb.subgroup);
            for (const std::uint64_t p : auto_primes(g)) {
                const RestrictionReport r = analyze(tg, th, emb, p);
                CHECK(r.theorem_a_consistent);
                // injection cannot raise rank
                if (r.injective) CHECK(r.r_g <= r.r_h);
                // one direction of the class-bijection equivalence
                if (r.isomorphism) CHECK(r.class_meet_bijection);
                // ordinary character specialization: coprime p, injective
                // only for the whole group
                if (g.order_u64() % p != 0 && r.injective)
                    CHECK(r.subgroup_order == r.group_order);
            }
        }
    }
}
