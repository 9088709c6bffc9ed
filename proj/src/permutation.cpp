#include "brt/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {

Permutation::Permutation(int degree) : images_(degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw std::invalid_argument("permutation degree out of range");
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.size() > static_cast<std::size_t>(kMaxDegree))
        throw std::invalid_argument("permutation degree out of range");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("image list is not a bijection");
        seen[v] = true;
    }
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw std::invalid_argument("degree mismatch in permutation product");
    std::vector<int> result(images_.size());
    for (int i = 0; i < degree(); ++i) result[i] = images_[rhs.images_[i]];
    Permutation p;
    p.images_ = std::move(result);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> result(images_.size());
    for (int i = 0; i < degree(); ++i) result[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(result);
    return p;
}

Permutation Permutation::power(std::int64_t k) const {
    const Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t n = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Permutation acc(degree());
    Permutation sq = base;
    while (n > 0) {
        if (n & 1) acc = acc * sq;
        sq = sq * sq;
        n >>= 1;
    }
    return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g * (*this) * g.inverse();
}

std::uint64_t Permutation::order() const {
    std::uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start]) continue;
        std::uint64_t len = 0;
        for (int p = start; !seen[p]; p = images_[p]) {
            seen[p] = true;
            ++len;
        }
        const std::uint64_t g = std::gcd(result, len);
        if (result / g > std::numeric_limits<std::uint64_t>::max() / len)
            throw std::overflow_error("element order exceeds 64 bits");
        result = result / g * len;
    }
    return result;
}

Permutation Permutation::extended(int new_degree) const {
    if (new_degree < degree())
        throw std::invalid_argument("cannot shrink a permutation");
    std::vector<int> result(images_);
    result.resize(new_degree);
    std::iota(result.begin() + degree(), result.end(), degree());
    Permutation p;
    p.images_ = std::move(result);
    return p;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < degree(); ++start) {
        if (seen[start] || images_[start] == start) {
            seen[start] = true;
            continue;
        }
        out += '(';
        for (int p = start; !seen[p]; p = images_[p]) {
            seen[p] = true;
            if (p != start) out += ',';
            out += std::to_string(p + 1);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation parse_cycles(const std::string& text, int min_degree, std::size_t position_offset) {
    std::size_t i = 0;
    const auto fail = [&](const std::string& msg) -> void {
        throw spec_parse_error(msg, position_offset + i);
    };
    const auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    std::vector<std::vector<int>> cycles;
    std::vector<bool> used;
    int max_point = 0;

    skip_ws();
    if (i >= text.size()) fail("expected cycle notation");
    while (i < text.size()) {
        if (text[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!cycle.empty()) {
                if (text[i] != ',') fail("expected ',' or ')'");
                ++i;
                skip_ws();
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected point number");
            long point = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                point = point * 10 + (text[i] - '0');
                if (point > kMaxDegree) fail("point exceeds degree cap");
                ++i;
            }
            if (point < 1) fail("points are 1-based");
            if (static_cast<std::size_t>(point) > used.size()) used.resize(point, false);
            if (used[point - 1]) fail("point repeated across cycles");
            used[point - 1] = true;
            cycle.push_back(static_cast<int>(point - 1));
            max_point = std::max(max_point, static_cast<int>(point));
            skip_ws();
        }
        if (i >= text.size()) fail("unterminated cycle");
        ++i;  // ')'
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        skip_ws();
    }

    const int degree = std::max(min_degree, max_point);
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (const auto& cycle : cycles)
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    return Permutation(std::move(images));
}

}  // namespace brt
