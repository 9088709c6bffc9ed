#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brt/rational.hpp"

namespace brt {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    void swap_cols(int a, int b);
    void swap_rows(int a, int b);
    // col[dst] += c * col[src] and the row analogue.
    void add_col(int dst, int src, const Integer& c);
    void add_row(int dst, int src, const Integer& c);
    void negate_col(int j);
    void negate_row(int i);

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// A full-rank sublattice basis of Z^ambient_rank; columns of `basis` are the
// basis vectors, kept in column Hermite normal form.
struct LatticeBasis {
    int ambient_rank = 0;
    IntMatrix basis;  // ambient_rank x rank

    int rank() const { return basis.cols(); }
};

// Column-style Hermite normal form of the column lattice of m: pivots
// positive and top-most per column, pivot rows strictly increasing, entries
// left of each pivot reduced into [0, pivot). Zero columns are dropped, so
// the result's columns are a canonical basis of the lattice.
IntMatrix hnf(const IntMatrix& m);

struct SmithDecomposition {
    IntMatrix s;  // diagonal, d_1 | d_2 | ..., all >= 0
    IntMatrix u;  // unimodular, rows
    IntMatrix v;  // unimodular, cols; u*m*v = s
};

SmithDecomposition snf(const IntMatrix& m);

// Rank over the rationals (fraction-free elimination).
int rank(const IntMatrix& m);

// Exact determinant of a square matrix (Bareiss).
Integer determinant(const IntMatrix& m);

// Saturated basis of {x in Z^cols : m*x = 0}, canonicalized by hnf.
LatticeBasis integer_kernel(const IntMatrix& m);

// [Z^n : column lattice] when the columns span rationally (n = m.rows());
// std::nullopt when the span is a proper subspace.
std::optional<Integer> lattice_index(const IntMatrix& generators);

// Membership of v in the column lattice of a column-HNF basis.
bool lattice_contains(const IntMatrix& hnf_basis, const std::vector<Integer>& v);

// Smallest lattice containing the columns of `basis` whose quotient in Z^n
// is torsion-free (the intersection of the rational span with Z^n).
IntMatrix saturate(const IntMatrix& basis);

// Columns of a followed by columns of b (row counts must match).
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

}  // namespace brt
