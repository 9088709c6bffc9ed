#include "brt/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {
namespace {

Permutation cycle(int degree, const std::vector<int>& points_1based) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    for (std::size_t k = 0; k < points_1based.size(); ++k)
        images[points_1based[k] - 1] = points_1based[(k + 1) % points_1based.size()] - 1;
    return Permutation(std::move(images));
}

std::vector<int> run(int from, int to) {  // inclusive
    std::vector<int> v;
    for (int i = from; i <= to; ++i) v.push_back(i);
    return v;
}

}  // namespace

PermGroup symmetric_group(int n) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("symmetric: n out of range");
    if (n == 1) return PermGroup(1, {});
    std::vector<Permutation> gens{cycle(n, {1, 2})};
    if (n > 2) gens.push_back(cycle(n, run(1, n)));
    return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(int n) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("alternating: n out of range");
    if (n <= 2) return PermGroup(n, {});
    std::vector<Permutation> gens{cycle(n, {1, 2, 3})};
    if (n >= 4) gens.push_back(n % 2 == 1 ? cycle(n, run(1, n)) : cycle(n, run(2, n)));
    return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(int n) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("cyclic: n out of range");
    if (n == 1) return PermGroup(1, {});
    return PermGroup(n, {cycle(n, run(1, n))});
}

PermGroup dihedral_group(int order) {
    if (order < 2 || order % 2 != 0 || order / 2 > kMaxDegree)
        throw std::invalid_argument("dihedral: order must be even and within the degree cap");
    const int n = order / 2;
    if (n == 1) return cyclic_group(2);
    if (n == 2) return PermGroup(4, {cycle(4, {1, 2}), cycle(4, {3, 4})});
    std::vector<int> reflection(n);
    reflection[0] = 0;
    for (int i = 1; i < n; ++i) reflection[i] = n - i;  // 1 fixed, i <-> n+2-i
    return PermGroup(n, {cycle(n, run(1, n)), Permutation(std::move(reflection))});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const int degree = a.degree() + b.degree();
    if (degree > kMaxDegree) throw cap_exceeded("direct product exceeds the degree cap");
    std::vector<Permutation> gens;
    for (const Permutation& g : a.generators()) gens.push_back(g.extended(degree));
    for (const Permutation& g : b.generators()) {
        std::vector<int> images(degree);
        for (int i = 0; i < a.degree(); ++i) images[i] = i;
        for (int i = 0; i < b.degree(); ++i) images[a.degree() + i] = a.degree() + g(i);
        gens.push_back(Permutation(std::move(images)));
    }
    return PermGroup(degree, std::move(gens));
}

PermGroup g72() {
    const auto label = [](int x, int y) { return x + 3 * y; };  // 0-based point
    std::vector<int> t1(9), t2(9), a(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) {
            t1[label(x, y)] = label((x + 1) % 3, y);
            t2[label(x, y)] = label(x, (y + 1) % 3);
            a[label(x, y)] = label(y, (x + y) % 3);
        }
    return PermGroup(9, {Permutation(std::move(t1)), Permutation(std::move(t2)),
                         Permutation(std::move(a))});
}

namespace {

// Recursive-descent parser for the group-spec grammar.
class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    PermGroup parse() {
        PermGroup g = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters after group spec");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw spec_parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(const std::string& literal) {
        if (text_.compare(pos_, literal.size(), literal) == 0) {
            pos_ += literal.size();
            return true;
        }
        return false;
    }

    int parse_int() {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxDegree) fail("parameter exceeds the degree cap");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    PermGroup parse_spec() {
        skip_ws();
        if (pos_ >= text_.size()) fail("empty group spec");
        if (consume("prod(")) {
            PermGroup a = parse_spec();
            skip_ws();
            if (!consume(",")) fail("expected ',' in prod(...)");
            PermGroup b = parse_spec();
            skip_ws();
            if (!consume(")")) fail("expected ')' in prod(...)");
            return direct_product(a, b);
        }
        if (consume("gens:")) return parse_generators();
        if (consume("G72")) return g72();
        const char kind = text_[pos_];
        if (kind == 'S' || kind == 'A' || kind == 'C' || kind == 'D') {
            ++pos_;
            const std::size_t param_pos = pos_;
            const int n = parse_int();
            try {
                switch (kind) {
                    case 'S': return symmetric_group(n);
                    case 'A': return alternating_group(n);
                    case 'C': return cyclic_group(n);
                    default: return dihedral_group(n);
                }
            } catch (const std::invalid_argument& e) {
                throw spec_parse_error(e.what(), param_pos);
            }
        }
        fail("unknown group spec");
    }

    // One permutation: a maximal run of "(...)" cycle groups.
    Permutation parse_one_perm() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' in generator list");
        while (true) {
            const std::size_t close = text_.find(')', pos_);
            if (close == std::string::npos) fail("unterminated cycle");
            pos_ = close + 1;
            std::size_t look = pos_;
            while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look])))
                ++look;
            if (look >= text_.size() || text_[look] != '(') break;
            pos_ = look;
        }
        return parse_cycles(text_.substr(start, pos_ - start), 0, start);
    }

    PermGroup parse_generators() {
        std::vector<Permutation> gens;
        int degree = 1;
        while (true) {
            gens.push_back(parse_one_perm());
            degree = std::max(degree, gens.back().degree());
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ';') {
                ++pos_;
                continue;
            }
            break;
        }
        for (Permutation& g : gens) g = g.extended(degree);
        return PermGroup(degree, std::move(gens));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

PermGroup parse_group_spec(const std::string& text) { return SpecParser(text).parse(); }

SubgroupEmbedding parse_subgroup_spec(const PermGroup& ambient, const std::string& text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (text.compare(pos, 5, "gens:") != 0)
        throw spec_parse_error("subgroup specs must use the gens: form", pos);
    const PermGroup raw = parse_group_spec(text);
    if (raw.degree() > ambient.degree())
        throw spec_parse_error("subgroup moves points outside the ambient domain", pos);
    return subgroup(ambient, raw.generators());
}

}  // namespace brt
