#include "brt/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {
namespace {

// ---- arithmetic mod a word-sized prime ----

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    std::uint64_t acc = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) acc = mul_mod(acc, base, q);
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

// Least generator of F_q*.
std::uint64_t primitive_root(std::uint64_t q) {
    const std::vector<std::uint64_t> factors = prime_factors(q - 1);
    for (std::uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (std::uint64_t f : factors)
            if (pow_mod(g, (q - 1) / f, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

// ---- small dense matrices over F_q ----

struct FqMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint64_t> a;

    FqMatrix() = default;
    FqMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    std::uint64_t& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
    std::uint64_t at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

FqMatrix fq_mul(const FqMatrix& x, const FqMatrix& y, std::uint64_t q) {
    FqMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const std::uint64_t c = x.at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = (out.at(i, j) + mul_mod(c, y.at(k, j), q)) % q;
        }
    return out;
}

// Columns of `basis` span an M-invariant subspace; returns A with
// M*basis = basis*A.
FqMatrix action_on_subspace(const FqMatrix& m, const FqMatrix& basis, std::uint64_t q) {
    const FqMatrix image = fq_mul(m, basis, q);
    // Solve basis * A = image column by column via Gaussian elimination.
    FqMatrix work = basis;
    FqMatrix rhs = image;
    std::vector<int> pivot_row(work.cols, -1);
    int r = 0;
    for (int c = 0; c < work.cols; ++c) {
        int p = -1;
        for (int i = r; i < work.rows; ++i)
            if (work.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::logic_error("subspace basis is singular");
        for (int j = 0; j < work.cols; ++j) std::swap(work.at(p, j), work.at(r, j));
        for (int j = 0; j < rhs.cols; ++j) std::swap(rhs.at(p, j), rhs.at(r, j));
        const std::uint64_t inv = inv_mod(work.at(r, c), q);
        for (int j = 0; j < work.cols; ++j) work.at(r, j) = mul_mod(work.at(r, j), inv, q);
        for (int j = 0; j < rhs.cols; ++j) rhs.at(r, j) = mul_mod(rhs.at(r, j), inv, q);
        for (int i = 0; i < work.rows; ++i) {
            if (i == r || work.at(i, c) == 0) continue;
            const std::uint64_t f = work.at(i, c);
            for (int j = 0; j < work.cols; ++j)
                work.at(i, j) = (work.at(i, j) + q - mul_mod(f, work.at(r, j), q)) % q;
            for (int j = 0; j < rhs.cols; ++j)
                rhs.at(i, j) = (rhs.at(i, j) + q - mul_mod(f, rhs.at(r, j), q)) % q;
        }
        pivot_row[c] = r;
        ++r;
    }
    FqMatrix out(work.cols, work.cols);
    for (int c = 0; c < work.cols; ++c)
        for (int j = 0; j < work.cols; ++j) out.at(c, j) = rhs.at(pivot_row[c], j);
    return out;
}

// Characteristic polynomial of a square matrix over F_q via Hessenberg
// reduction; coefficients constant-term first, monic.
std::vector<std::uint64_t> char_poly(FqMatrix m, std::uint64_t q) {
    const int n = m.rows;
    // Hessenberg form.
    for (int c = 0; c + 2 < n; ++c) {
        int p = -1;
        for (int i = c + 1; i < n; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != c + 1) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c + 1, j));
            for (int i = 0; i < n; ++i) std::swap(m.at(i, p), m.at(i, c + 1));
        }
        const std::uint64_t inv = inv_mod(m.at(c + 1, c), q);
        for (int i = c + 2; i < n; ++i) {
            if (m.at(i, c) == 0) continue;
            const std::uint64_t f = mul_mod(m.at(i, c), inv, q);
            for (int j = 0; j < n; ++j) m.at(i, j) = (m.at(i, j) + q - mul_mod(f, m.at(c + 1, j), q)) % q;
            for (int j = 0; j < n; ++j) m.at(j, c + 1) = (m.at(j, c + 1) + mul_mod(f, m.at(j, i), q)) % q;
        }
    }
    // p_k = char poly of leading k x k block (recurrence over Hessenberg).
    std::vector<std::vector<std::uint64_t>> p(n + 1);
    p[0] = {1};
    for (int k = 1; k <= n; ++k) {
        // p_k = (x - m[k-1][k-1]) p_{k-1} - sum_{i} (prod of subdiag) m[i][k-1] p_i
        std::vector<std::uint64_t> cur(k + 1, 0);
        for (int i = 0; i < k; ++i) cur[i + 1] = p[k - 1][i];
        const std::uint64_t d = m.at(k - 1, k - 1);
        for (int i = 0; i < k; ++i)
            cur[i] = (cur[i] + q - mul_mod(d, p[k - 1][i], q)) % q;
        std::uint64_t prod = 1;
        for (int i = k - 2; i >= 0; --i) {
            prod = mul_mod(prod, m.at(i + 1, i), q);
            const std::uint64_t coeff = mul_mod(prod, m.at(i, k - 1), q);
            if (coeff != 0)
                for (std::size_t j = 0; j < p[i].size(); ++j)
                    cur[j] = (cur[j] + q - mul_mod(coeff, p[i][j], q)) % q;
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

std::uint64_t poly_eval(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t q) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mul_mod(acc, x, q) + poly[i]) % q;
    return acc;
}

// Basis (as columns) of ker(m - lambda) over F_q.
FqMatrix eigenspace(const FqMatrix& m, std::uint64_t lambda, std::uint64_t q) {
    const int n = m.rows;
    FqMatrix w = m;
    for (int i = 0; i < n; ++i) w.at(i, i) = (w.at(i, i) + q - lambda) % q;
    // Row reduce.
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (w.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(r, j));
        const std::uint64_t inv = inv_mod(w.at(r, c), q);
        for (int j = 0; j < n; ++j) w.at(r, j) = mul_mod(w.at(r, j), inv, q);
        for (int i = 0; i < n; ++i) {
            if (i == r || w.at(i, c) == 0) continue;
            const std::uint64_t f = w.at(i, c);
            for (int j = 0; j < n; ++j) w.at(i, j) = (w.at(i, j) + q - mul_mod(f, w.at(r, j), q)) % q;
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    FqMatrix basis(n, n - r);
    int out_col = 0;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        basis.at(c, out_col) = 1;
        for (int k = 0; k < r; ++k)
            basis.at(pivot_col[k], out_col) = (q - w.at(k, c)) % q;
        ++out_col;
    }
    return basis;
}

struct ClassInfo {
    std::vector<std::vector<int>> power_class;  // [i][s] = class of rep_i^s, s in [0, order_i)
    std::vector<int> inverse_class;
};

// Thrown to advance to the next modulus.
struct retry_modulus {};

}  // namespace

CharacterTable character_table(const PermGroup& g, std::uint64_t cap) {
    const std::vector<ConjugacyClass>& classes = g.classes(cap);
    const int r = static_cast<int>(classes.size());
    const std::uint64_t order = g.order_u64();
    const std::uint64_t exponent = g.exponent(cap);

    // Power maps: class of rep^s for every class and exponent.
    ClassInfo info;
    info.power_class.resize(r);
    info.inverse_class.resize(r);
    for (int i = 0; i < r; ++i) {
        const std::uint64_t m = classes[i].element_order;
        Permutation p(g.degree());
        info.power_class[i].reserve(m);
        for (std::uint64_t s = 0; s < m; ++s) {
            info.power_class[i].push_back(g.class_index_of(p, cap));
            p = p * classes[i].representative;
        }
        info.inverse_class[i] = info.power_class[i][(m - 1) % m];
    }

    // Class multiplication coefficients for one class i:
    // M_i[j][k] = #{x in C_i : x^-1 rep_k in C_j}; the column vectors
    // (|K| chi(K) / chi(1))_K are its common eigenvectors.
    const std::vector<Permutation>& elements = g.elements(cap);
    std::vector<std::vector<int>> class_members(r);
    for (std::size_t idx = 0; idx < elements.size(); ++idx)
        class_members[g.class_index_of(elements[idx], cap)].push_back(static_cast<int>(idx));

    const auto class_matrix = [&](int i) {
        FqMatrix m(r, r);
        for (int k = 0; k < r; ++k)
            for (const int xi : class_members[i]) {
                const Permutation y = elements[xi].inverse() * classes[k].representative;
                const int j = g.class_index_of(y, cap);
                ++m.at(j, k);
            }
        return m;
    };

    // Deterministic modulus sequence: primes q = 1 (mod exp), q > 2 sqrt(|G|).
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t q = exponent + 1; moduli.size() < 24; q += exponent)
        if (is_prime_u64(q) && static_cast<unsigned __int128>(q) * q > 4u * order) moduli.push_back(q);

    for (const std::uint64_t q : moduli) {
        try {
            const std::uint64_t z = pow_mod(primitive_root(q), (q - 1) / exponent, q);

            std::vector<FqMatrix> blocks;
            {
                FqMatrix all(r, r);
                for (int i = 0; i < r; ++i) all.at(i, i) = 1;
                blocks.push_back(std::move(all));
            }
            for (int i = 1; i < r; ++i) {
                bool split_needed = false;
                for (const FqMatrix& b : blocks)
                    if (b.cols > 1) split_needed = true;
                if (!split_needed) break;
                FqMatrix raw = class_matrix(i);
                for (auto& v : raw.a) v %= q;
                std::vector<FqMatrix> next;
                for (FqMatrix& b : blocks) {
                    if (b.cols == 1) {
                        next.push_back(std::move(b));
                        continue;
                    }
                    const FqMatrix action = action_on_subspace(raw, b, q);
                    const std::vector<std::uint64_t> poly = char_poly(action, q);
                    int found = 0;
                    for (std::uint64_t lambda = 0; lambda < q && found < action.rows; ++lambda) {
                        if (poly_eval(poly, lambda, q) != 0) continue;
                        const FqMatrix sub = eigenspace(action, lambda, q);
                        if (sub.cols == 0) continue;
                        next.push_back(fq_mul(b, sub, q));
                        found += sub.cols;
                    }
                    if (found != action.rows) throw retry_modulus{};
                }
                blocks = std::move(next);
            }
            for (const FqMatrix& b : blocks)
                if (b.cols != 1) throw retry_modulus{};

            // Normalize each eigenvector so the identity-class entry is 1;
            // these are the central character values omega(K) mod q.
            std::vector<std::vector<std::uint64_t>> omega;
            for (const FqMatrix& b : blocks) {
                std::vector<std::uint64_t> w(r);
                if (b.at(0, 0) == 0) throw retry_modulus{};
                const std::uint64_t scale = inv_mod(b.at(0, 0), q);
                for (int i = 0; i < r; ++i) w[i] = mul_mod(b.at(i, 0), scale, q);
                omega.push_back(std::move(w));
            }

            // Degrees from the orthogonality relation
            // sum_K omega(K) omega(K^-1) / |K| = |G| / chi(1)^2.
            std::vector<std::uint64_t> degrees(r);
            std::uint64_t degree_square_sum = 0;
            for (int t = 0; t < r; ++t) {
                std::uint64_t s = 0;
                for (int i = 0; i < r; ++i) {
                    const std::uint64_t term = mul_mod(omega[t][i], omega[t][info.inverse_class[i]], q);
                    s = (s + mul_mod(term, inv_mod(classes[i].size % q, q), q)) % q;
                }
                const std::uint64_t target = mul_mod(order % q, inv_mod(s, q), q);
                std::uint64_t d = 0;
                for (std::uint64_t c = 1; c * c <= order; ++c)
                    if (mul_mod(c, c, q) == target) {
                        d = c;
                        break;
                    }
                if (d == 0) throw retry_modulus{};
                degrees[t] = d;
                degree_square_sum += d * d;
            }
            if (degree_square_sum != order) throw retry_modulus{};

            // chi(K) = chi(1) omega(K) / |K| mod q, then lift each value by
            // decomposing it into root-of-unity multiplicities.
            std::vector<ClassFunction> rows;
            rows.reserve(r);
            for (int t = 0; t < r; ++t) {
                std::vector<std::uint64_t> chi_mod(r);
                for (int i = 0; i < r; ++i)
                    chi_mod[i] =
                        mul_mod(mul_mod(degrees[t] % q, omega[t][i], q), inv_mod(classes[i].size % q, q), q);
                ClassFunction f{g, {}};
                f.values.reserve(r);
                for (int i = 0; i < r; ++i) {
                    const std::uint64_t m = classes[i].element_order;
                    const std::uint64_t zm_inv = pow_mod(z, exponent - exponent / m, q);  // zeta_m^-1
                    Cyclotomic value;
                    const std::uint64_t m_inv = inv_mod(m % q, q);
                    for (std::uint64_t l = 0; l < m; ++l) {
                        // multiplicity of zeta_m^l among the eigenvalues of a
                        // representing matrix at rep_i
                        std::uint64_t mu = 0;
                        for (std::uint64_t s = 0; s < m; ++s) {
                            const std::uint64_t term = chi_mod[info.power_class[i][s]];
                            mu = (mu + mul_mod(term, pow_mod(zm_inv, l * s % m, q), q)) % q;
                        }
                        mu = mul_mod(mu, m_inv, q);
                        if (mu == 0) continue;
                        if (mu > degrees[t]) throw retry_modulus{};
                        value += Cyclotomic(Rational(static_cast<unsigned long>(mu))) *
                                 Cyclotomic::root_of_unity(m, static_cast<std::int64_t>(l));
                    }
                    f.values.push_back(std::move(value));
                }
                if (!(f.values[0] == Cyclotomic(Rational(static_cast<unsigned long>(degrees[t])))))
                    throw retry_modulus{};
                rows.push_back(std::move(f));
            }

            // Canonical row order: by degree, then descending coefficient-lex
            // (the trivial character sorts first).
            std::vector<int> idx(r);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
                for (int i = 0; i < r; ++i) {
                    const int c = Cyclotomic::compare(rows[a].values[i], rows[b].values[i]);
                    if (c != 0) return c > 0;
                }
                return false;
            });
            CharacterTable table{g, {}, {}};
            for (int i : idx) {
                table.irreducibles.push_back(std::move(rows[i]));
                table.degrees.push_back(degrees[i]);
            }

            // Exact first-orthogonality audit; any failure means the modular
            // data lied and the next modulus is tried.
            for (int a = 0; a < r; ++a)
                for (int b = a; b < r; ++b) {
                    const Cyclotomic ip = inner_product(table.irreducibles[a], table.irreducibles[b]);
                    if (!(ip == Cyclotomic(Rational(a == b ? 1 : 0)))) throw retry_modulus{};
                }
            return table;
        } catch (const retry_modulus&) {
            continue;
        }
    }
    throw std::logic_error("character table: eigenspace splitting failed for every modulus");
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (!a.group.same_group(b.group))
        throw std::invalid_argument("inner product requires class functions on the same group");
    const auto& classes = a.group.classes();
    Cyclotomic sum;
    for (std::size_t i = 0; i < classes.size(); ++i)
        sum += Cyclotomic(Rational(static_cast<unsigned long>(classes[i].size))) * a.values[i] *
               b.values[i].conjugate();
    Rational inv_order(1, a.group.order());
    return sum * Cyclotomic(inv_order);
}

ClassFunction restrict_class_function(const SubgroupEmbedding& emb, const ClassFunction& f,
                                      std::uint64_t cap) {
    if (!emb.ambient.same_group(f.group))
        throw std::invalid_argument("class function is not defined on the ambient group");
    const std::vector<int> fusion = class_fusion(emb, cap);
    ClassFunction out{emb.subgroup, {}};
    out.values.reserve(fusion.size());
    for (const int gi : fusion) out.values.push_back(f.values[gi]);
    return out;
}

std::vector<Integer> decompose(const ClassFunction& f, const CharacterTable& table) {
    std::vector<Integer> coeffs;
    coeffs.reserve(table.irreducibles.size());
    for (const ClassFunction& psi : table.irreducibles) {
        const Cyclotomic ip = inner_product(f, psi);
        if (!ip.is_rational() || !is_integer(ip.rational_value()))
            throw std::logic_error("decompose: non-integer coefficient, not a generalized character");
        coeffs.push_back(ip.rational_value().get_num());
    }
    // Reconstruct and compare value by value.
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        Cyclotomic acc;
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            acc += Cyclotomic(Rational(coeffs[j])) * table.irreducibles[j].values[i];
        if (!(acc == f.values[i]))
            throw std::logic_error("decompose: reconstruction mismatch");
    }
    return coeffs;
}

}  // namespace brt
