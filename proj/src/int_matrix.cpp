#include "brt/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace brt {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& c = at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += c * rhs.at(k, j);
        }
    return out;
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::add_col(int dst, int src, const Integer& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

void IntMatrix::add_row(int dst, int src, const Integer& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::negate_col(int j) {
    for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += at(i, j).get_str();
        }
        out += "]\n";
    }
    return out;
}

IntMatrix hnf(const IntMatrix& m) {
    IntMatrix w = m;
    int next = 0;  // next pivot column position
    for (int r = 0; r < w.rows() && next < w.cols(); ++r) {
        // Euclid the entries of row r (columns >= next) into one column.
        while (true) {
            int best = -1;
            for (int j = next; j < w.cols(); ++j)
                if (w.at(r, j) != 0 &&
                    (best < 0 || abs(w.at(r, j)) < abs(w.at(r, best))))
                    best = j;
            if (best < 0) break;
            w.swap_cols(next, best);
            bool cleared = true;
            for (int j = next + 1; j < w.cols(); ++j) {
                if (w.at(r, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, next).get_mpz_t());
                w.add_col(j, next, -q);
                if (w.at(r, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (w.at(r, next) == 0) continue;  // no pivot in this row
        if (w.at(r, next) < 0) w.negate_col(next);
        // Reduce the entries left of the pivot into [0, pivot).
        for (int j = 0; j < next; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, next).get_mpz_t());
            w.add_col(j, next, -q);
        }
        ++next;
    }
    IntMatrix out(w.rows(), next);
    for (int i = 0; i < w.rows(); ++i)
        for (int j = 0; j < next; ++j) out.at(i, j) = w.at(i, j);
    return out;
}

SmithDecomposition snf(const IntMatrix& m) {
    SmithDecomposition d{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& s = d.s;
    const int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        // Find the smallest nonzero entry in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < s.rows(); ++i)
            for (int j = t; j < s.cols(); ++j)
                if (s.at(i, j) != 0 &&
                    (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;  // all zero
        s.swap_rows(t, pi);
        d.u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        d.v.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear column t below the pivot, then row t right of it,
            // re-picking a smaller pivot whenever a remainder appears.
            for (int i = t + 1; i < s.rows(); ++i) {
                if (s.at(i, t) == 0) continue;
                Integer q = s.at(i, t) / s.at(t, t);
                s.add_row(i, t, -q);
                d.u.add_row(i, t, -q);
                if (s.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    d.u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (int j = t + 1; j < s.cols(); ++j) {
                if (s.at(t, j) == 0) continue;
                Integer q = s.at(t, j) / s.at(t, t);
                s.add_col(j, t, -q);
                d.v.add_col(j, t, -q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    d.v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility: fold any non-multiple into column t and redo.
            for (int i = t + 1; i < s.rows() && !dirty; ++i)
                for (int j = t + 1; j < s.cols() && !dirty; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row(t, i, 1);
                        d.u.add_row(t, i, 1);
                        dirty = true;
                    }
        }
        if (s.at(t, t) < 0) {
            s.negate_row(t);
            d.u.negate_row(t);
        }
    }
    return d;
}

int rank(const IntMatrix& m) {
    // Fraction-free Gaussian elimination on a working copy.
    IntMatrix w = m;
    int r = 0;
    Integer prev = 1;
    for (int j = 0; j < w.cols() && r < w.rows(); ++j) {
        int pivot = -1;
        for (int i = r; i < w.rows(); ++i)
            if (w.at(i, j) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        w.swap_rows(r, pivot);
        for (int i = r + 1; i < w.rows(); ++i) {
            for (int k = j + 1; k < w.cols(); ++k)
                w.at(i, k) = (w.at(r, j) * w.at(i, k) - w.at(i, j) * w.at(r, k)) / prev;
            w.at(i, j) = 0;
        }
        prev = w.at(r, j);
        ++r;
    }
    return r;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            w.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Integer(-w.at(n - 1, n - 1));
}

LatticeBasis integer_kernel(const IntMatrix& m) {
    // With u*m*v = s diagonal, the kernel is spanned by the columns of v
    // past the rank; v unimodular makes that basis saturated.
    const SmithDecomposition d = snf(m);
    int rk = 0;
    const int n = std::min(d.s.rows(), d.s.cols());
    for (int i = 0; i < n; ++i)
        if (d.s.at(i, i) != 0) ++rk;
    IntMatrix kernel(m.cols(), m.cols() - rk);
    for (int i = 0; i < m.cols(); ++i)
        for (int j = rk; j < m.cols(); ++j) kernel.at(i, j - rk) = d.v.at(i, j);
    return LatticeBasis{m.cols(), hnf(kernel)};
}

std::optional<Integer> lattice_index(const IntMatrix& generators) {
    const SmithDecomposition d = snf(generators);
    Integer index = 1;
    for (int i = 0; i < generators.rows(); ++i) {
        if (i >= d.s.cols() || d.s.at(i, i) == 0) return std::nullopt;
        index *= d.s.at(i, i);
    }
    return index;
}

bool lattice_contains(const IntMatrix& basis, const std::vector<Integer>& v) {
    if (static_cast<int>(v.size()) != basis.rows())
        throw std::invalid_argument("vector length does not match lattice ambient rank");
    std::vector<Integer> w = v;
    int col = 0;
    for (int r = 0; r < basis.rows(); ++r) {
        if (col < basis.cols() && basis.at(r, col) != 0) {
            // pivot row of column `col` (pivots are topmost nonzero entries)
            const Integer& p = basis.at(r, col);
            if (w[r] % p != 0) return false;
            const Integer c = w[r] / p;
            if (c != 0)
                for (int i = r; i < basis.rows(); ++i) w[i] -= c * basis.at(i, col);
            ++col;
        } else if (w[r] != 0) {
            return false;
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix saturate(const IntMatrix& basis) {
    // Saturation = u^-1 * (Z e_1 + ... + Z e_r) for u*basis*v = s of rank r.
    const SmithDecomposition d = snf(basis);
    int rk = 0;
    const int n = std::min(d.s.rows(), d.s.cols());
    for (int i = 0; i < n; ++i)
        if (d.s.at(i, i) != 0) ++rk;
    // Solve u * x = e_i by unimodularity: x = u^-1 e_i; obtain u^-1 via snf
    // of u itself would be circular -- instead invert with integer Gaussian
    // elimination, exact because |det u| = 1.
    const int r = d.u.rows();
    IntMatrix aug = d.u;
    IntMatrix inv = IntMatrix::identity(r);
    for (int c = 0; c < r; ++c) {
        while (true) {
            int best = -1;
            for (int i = c; i < r; ++i)
                if (aug.at(i, c) != 0 && (best < 0 || abs(aug.at(i, c)) < abs(aug.at(best, c))))
                    best = i;
            aug.swap_rows(c, best);
            inv.swap_rows(c, best);
            bool done = true;
            for (int i = c + 1; i < r; ++i) {
                if (aug.at(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), aug.at(i, c).get_mpz_t(), aug.at(c, c).get_mpz_t());
                aug.add_row(i, c, -q);
                inv.add_row(i, c, -q);
                if (aug.at(i, c) != 0) done = false;
            }
            if (done) break;
        }
    }
    // Back-substitute (diagonal is +-1).
    for (int c = r - 1; c >= 0; --c) {
        if (aug.at(c, c) < 0) {
            aug.negate_row(c);
            inv.negate_row(c);
        }
        for (int i = 0; i < c; ++i) {
            const Integer q = aug.at(i, c);
            aug.add_row(i, c, -q);
            inv.add_row(i, c, -q);
        }
    }
    IntMatrix out(r, rk);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < rk; ++j) out.at(i, j) = inv.at(i, j);
    return hnf(out);
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

}  // namespace brt
