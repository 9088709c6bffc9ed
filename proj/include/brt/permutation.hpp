#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace brt {

// Maximum number of points a permutation may act on.
inline constexpr int kMaxDegree = 10000;

// A bijection of {0, ..., degree-1}. Points are 0-based internally and
// 1-based in cycle notation (parsing and printing).
class Permutation {
public:
    Permutation() = default;

    // Identity on `degree` points.
    explicit Permutation(int degree);

    // images[i] is the image of point i. Must be a bijection.
    explicit Permutation(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int point) const { return images_[point]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    // Composition: (a * b)(x) = a(b(x)), i.e. b acts first.
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    Permutation power(std::int64_t k) const;

    // g * this * g^-1.
    Permutation conjugated_by(const Permutation& g) const;

    // Least k >= 1 with this^k = identity (lcm of cycle lengths).
    std::uint64_t order() const;

    // Same mapping on a larger point set; added points are fixed.
    Permutation extended(int degree) const;

    // Disjoint cycle notation on 1-based points, "()" for the identity.
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// Parses disjoint-cycle notation such as "(1,2,3)(4,5)" or "()" on 1-based
// points. The result acts on max(min_degree, largest point mentioned) points.
// Throws spec_parse_error on malformed input or repeated points; positions
// reported are offsets into `text` shifted by `position_offset`.
Permutation parse_cycles(const std::string& text, int min_degree = 0,
                         std::size_t position_offset = 0);

}  // namespace brt
