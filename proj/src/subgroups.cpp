#include "brt/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brt/errors.hpp"

namespace brt {
namespace {

// Element-index arithmetic over a fixed enumeration of G.
struct MulTable {
    int n = 0;
    int identity = -1;
    std::vector<int> mul;  // n*n, row-major
    std::vector<int> inv;

    int product(int a, int b) const { return mul[a * static_cast<std::size_t>(n) + b]; }
    int conjugate(int x, int g) const { return product(product(g, x), inv[g]); }
};

MulTable build_table(const std::vector<Permutation>& elements) {
    MulTable t;
    t.n = static_cast<int>(elements.size());
    std::map<Permutation, int> index;
    for (int i = 0; i < t.n; ++i) index.emplace(elements[i], i);
    t.mul.resize(static_cast<std::size_t>(t.n) * t.n);
    t.inv.resize(t.n);
    for (int a = 0; a < t.n; ++a) {
        for (int b = 0; b < t.n; ++b)
            t.mul[a * static_cast<std::size_t>(t.n) + b] = index.at(elements[a] * elements[b]);
        t.inv[a] = index.at(elements[a].inverse());
        if (elements[a].is_identity()) t.identity = a;
    }
    return t;
}

using ElementSet = std::vector<int>;  // sorted element indices

ElementSet closure(const MulTable& t, const std::vector<int>& gens) {
    std::vector<char> in(t.n, 0);
    ElementSet out{t.identity};
    in[t.identity] = 1;
    for (std::size_t head = 0; head < out.size(); ++head)
        for (int s : gens) {
            const int y = t.product(out[head], s);
            if (!in[y]) {
                in[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Small generating set for a subgroup given as a sorted element set,
// grown greedily in index order. Deterministic.
std::vector<int> greedy_generators(const MulTable& t, const ElementSet& s) {
    std::vector<int> gens;
    ElementSet current{t.identity};
    for (int candidate : s) {
        if (std::binary_search(current.begin(), current.end(), candidate)) continue;
        gens.push_back(candidate);
        current = closure(t, gens);
        if (current.size() == s.size()) break;
    }
    return gens;
}

// Lexicographically least conjugate of the (sorted) element set.
ElementSet canonical_fingerprint(const MulTable& t, const ElementSet& s) {
    ElementSet best = s;
    ElementSet buf(s.size());
    for (int g = 0; g < t.n; ++g) {
        for (std::size_t i = 0; i < s.size(); ++i) buf[i] = t.conjugate(s[i], g);
        std::sort(buf.begin(), buf.end());
        if (buf < best) best = buf;
    }
    return best;
}

}  // namespace

std::vector<SubgroupEmbedding> enumerate_subgroups(const PermGroup& g,
                                                   const SubgroupSearchLimits& limits) {
    if (g.order() > static_cast<unsigned long>(limits.max_order))
        throw cap_exceeded("subgroup enumeration: group order " + g.order().get_str() +
                           " exceeds cap " + std::to_string(limits.max_order));
    const std::vector<Permutation>& elements = g.elements(limits.max_order);
    const MulTable t = build_table(elements);

    std::map<ElementSet, std::vector<int>> discovered;  // canonical set -> greedy gens
    std::set<ElementSet> raw_seen;                      // skip repeat canonicalizations
    std::vector<ElementSet> worklist;
    const auto record = [&](const ElementSet& s) {
        if (!raw_seen.insert(s).second) return;
        ElementSet canon = canonical_fingerprint(t, s);
        if (discovered.contains(canon)) return;
        if (discovered.size() + 1 > limits.max_subgroups)
            throw cap_exceeded("subgroup enumeration exceeded max_subgroups");
        discovered.emplace(canon, greedy_generators(t, canon));
        worklist.push_back(std::move(canon));
    };

    // Cyclic seeds, then extend each known class representative by every
    // element of G; every subgroup arises this way up to conjugacy.
    for (int x = 0; x < t.n; ++x) record(closure(t, {x}));
    for (std::size_t head = 0; head < worklist.size(); ++head) {
        const ElementSet base = worklist[head];
        if (base.size() == elements.size()) continue;
        const std::vector<int> base_gens = discovered.at(base);
        for (int x = 0; x < t.n; ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<int> gens = base_gens;
            gens.push_back(x);
            record(closure(t, gens));
        }
    }

    std::vector<ElementSet> classes;
    classes.reserve(discovered.size());
    for (const auto& [s, unused] : discovered) classes.push_back(s);
    std::sort(classes.begin(), classes.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    std::vector<SubgroupEmbedding> result;
    result.reserve(classes.size());
    for (const ElementSet& s : classes) {
        std::vector<Permutation> gens;
        for (int i : discovered.at(s)) gens.push_back(elements[i]);
        result.push_back(subgroup(g, gens));
    }
    return result;
}

}  // namespace brt
