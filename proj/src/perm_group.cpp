#include "brt/perm_group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {
namespace detail {

// One level of a stabilizer chain: the orbit of base_point under the level's
// generators, with a transversal element u_p mapping base_point to p.
struct ChainLevel {
    int base_point = -1;
    std::vector<Permutation> generators;
    std::vector<int> orbit;                   // in discovery order
    std::vector<Permutation> transversal;     // indexed by point; degree 0 = absent
    std::vector<bool> in_orbit;

    void rebuild_orbit(int degree) {
        orbit.clear();
        transversal.assign(degree, Permutation());
        in_orbit.assign(degree, false);
        orbit.push_back(base_point);
        in_orbit[base_point] = true;
        transversal[base_point] = Permutation(degree);
        for (std::size_t head = 0; head < orbit.size(); ++head) {
            const int p = orbit[head];
            for (const Permutation& s : generators) {
                const int q = s(p);
                if (!in_orbit[q]) {
                    in_orbit[q] = true;
                    orbit.push_back(q);
                    transversal[q] = s * transversal[p];
                }
            }
        }
    }
};

class StabilizerChain {
public:
    StabilizerChain(int degree, const std::vector<Permutation>& generators) : degree_(degree) {
        for (const Permutation& g : generators) extend(0, g);
    }

    mpz_class order() const {
        mpz_class n = 1;
        for (const ChainLevel& level : levels_) n *= static_cast<unsigned long>(level.orbit.size());
        return n;
    }

    bool contains(const Permutation& g) const { return contains_from(0, g); }

private:
    bool contains_from(std::size_t l, Permutation g) const {
        for (; l < levels_.size(); ++l) {
            const ChainLevel& level = levels_[l];
            const int image = g(level.base_point);
            if (!level.in_orbit[image]) return false;
            g = level.transversal[image].inverse() * g;
        }
        return g.is_identity();
    }

    // Schreier-Sims: ensure g lies in the group represented from level l on,
    // enlarging the chain as needed. Level l's generators all fix the base
    // points of levels 0..l-1.
    void extend(std::size_t l, const Permutation& g) {
        if (g.is_identity() || contains_from(l, g)) return;
        if (l == levels_.size()) {
            ChainLevel level;
            for (int p = 0; p < degree_; ++p)
                if (g(p) != p) {
                    level.base_point = p;
                    break;
                }
            levels_.push_back(std::move(level));
        }
        levels_[l].generators.push_back(g);
        levels_[l].rebuild_orbit(degree_);
        // Every Schreier generator fixes this level's base point; push each
        // one level down. levels_ may grow (and relocate) inside extend, so
        // index instead of holding references.
        for (std::size_t head = 0; head < levels_[l].orbit.size(); ++head) {
            for (std::size_t si = 0; si < levels_[l].generators.size(); ++si) {
                const int p = levels_[l].orbit[head];
                const Permutation s = levels_[l].generators[si];
                const Permutation schreier =
                    levels_[l].transversal[s(p)].inverse() * (s * levels_[l].transversal[p]);
                extend(l + 1, schreier);
            }
        }
    }

    int degree_;
    std::vector<ChainLevel> levels_;
};

struct ClassData {
    std::vector<Permutation> elements;           // sorted lexicographically
    std::vector<ConjugacyClass> classes;         // canonical order
    std::vector<int> class_of;                   // parallel to elements
    std::vector<std::vector<int>> class_members; // element indices per class
    std::uint64_t exponent = 1;

    int element_index(const Permutation& g) const {
        const auto it = std::lower_bound(elements.begin(), elements.end(), g);
        if (it == elements.end() || !(*it == g))
            throw std::invalid_argument("element does not belong to the group");
        return static_cast<int>(it - elements.begin());
    }
};

struct GroupData {
    int degree = 1;
    std::vector<Permutation> generators;

    std::once_flag chain_once;
    std::unique_ptr<StabilizerChain> chain;
    mpz_class order;

    std::once_flag class_once;
    std::unique_ptr<ClassData> class_data;

    const StabilizerChain& get_chain() {
        std::call_once(chain_once, [&] {
            chain = std::make_unique<StabilizerChain>(degree, generators);
            order = chain->order();
        });
        return *chain;
    }

    const ClassData& get_classes(std::uint64_t cap) {
        // The cap gates only the initial computation; a failed attempt leaves
        // the once-flag unset, so a later call with a wider cap retries.
        std::call_once(class_once, [&] {
            get_chain();
            if (order > static_cast<unsigned long>(cap))
                throw cap_exceeded("group order " + order.get_str() +
                                   " exceeds enumeration cap " + std::to_string(cap));
            class_data = std::make_unique<ClassData>(compute());
        });
        return *class_data;
    }

private:
    ClassData compute() const {
        ClassData data;
        // Breadth-first closure of the generators.
        std::map<Permutation, int> index_of;
        std::vector<Permutation> frontier{Permutation(degree)};
        index_of.emplace(frontier.front(), 0);
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const Permutation& x : frontier) {
                for (const Permutation& s : generators) {
                    Permutation y = s * x;
                    if (index_of.emplace(y, 0).second) next.push_back(std::move(y));
                }
            }
            frontier = std::move(next);
        }
        data.elements.reserve(index_of.size());
        for (const auto& [perm, unused] : index_of) data.elements.push_back(perm);
        int idx = 0;
        for (const Permutation& p : data.elements) index_of[p] = idx++;

        // Conjugacy classes as orbits of conjugation by the generators.
        const int n = static_cast<int>(data.elements.size());
        std::vector<int> class_raw(n, -1);
        std::vector<ConjugacyClass> classes;
        std::vector<std::vector<int>> members;
        for (int i = 0; i < n; ++i) {
            if (class_raw[i] >= 0) continue;
            const int c = static_cast<int>(classes.size());
            std::vector<int> orbit{i};
            class_raw[i] = c;
            for (std::size_t head = 0; head < orbit.size(); ++head) {
                for (const Permutation& s : generators) {
                    const Permutation y = data.elements[orbit[head]].conjugated_by(s);
                    const int j = index_of.at(y);
                    if (class_raw[j] < 0) {
                        class_raw[j] = c;
                        orbit.push_back(j);
                    }
                }
            }
            std::sort(orbit.begin(), orbit.end());
            ConjugacyClass cls;
            cls.representative = data.elements[orbit.front()];  // least index = lex least
            cls.size = orbit.size();
            cls.element_order = cls.representative.order();
            classes.push_back(std::move(cls));
            members.push_back(std::move(orbit));
        }

        // Canonical class order.
        std::vector<int> perm_idx(classes.size());
        std::iota(perm_idx.begin(), perm_idx.end(), 0);
        std::sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) {
            const auto key = [&](int k) {
                return std::tie(classes[k].element_order, classes[k].size,
                                classes[k].representative);
            };
            return key(a) < key(b);
        });
        std::vector<int> new_of_old(classes.size());
        for (std::size_t k = 0; k < perm_idx.size(); ++k) new_of_old[perm_idx[k]] = static_cast<int>(k);

        data.classes.reserve(classes.size());
        data.class_members.reserve(classes.size());
        for (const int old : perm_idx) {
            data.classes.push_back(classes[old]);
            data.class_members.push_back(members[old]);
        }
        data.class_of.resize(n);
        for (int i = 0; i < n; ++i) data.class_of[i] = new_of_old[class_raw[i]];

        data.exponent = 1;
        for (const ConjugacyClass& c : data.classes)
            data.exponent = std::lcm(data.exponent, c.element_order);
        return data;
    }
};

}  // namespace detail

PermGroup::PermGroup() : PermGroup(1, {}) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : data_(std::make_shared<detail::GroupData>()) {
    if (degree < 1 || degree > kMaxDegree)
        throw std::invalid_argument("group degree out of range");
    for (Permutation& g : generators) {
        if (g.degree() > degree) throw std::invalid_argument("generator degree exceeds group degree");
        if (g.degree() < degree) g = g.extended(degree);
    }
    std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
    data_->degree = degree;
    data_->generators = std::move(generators);
}

int PermGroup::degree() const { return data_->degree; }

const std::vector<Permutation>& PermGroup::generators() const { return data_->generators; }

const mpz_class& PermGroup::order() const {
    data_->get_chain();
    return data_->order;
}

std::uint64_t PermGroup::order_u64() const {
    const mpz_class& n = order();
    if (!n.fits_ulong_p()) throw cap_exceeded("group order exceeds 64 bits");
    return n.get_ui();
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() > degree()) return false;
    const Permutation padded = g.degree() < degree() ? g.extended(degree()) : g;
    return data_->get_chain().contains(padded);
}

const std::vector<Permutation>& PermGroup::elements(std::uint64_t cap) const {
    return data_->get_classes(cap).elements;
}

const std::vector<ConjugacyClass>& PermGroup::classes(std::uint64_t cap) const {
    return data_->get_classes(cap).classes;
}

int PermGroup::class_index_of(const Permutation& g, std::uint64_t cap) const {
    const detail::ClassData& data = data_->get_classes(cap);
    const Permutation padded = g.degree() < degree() ? g.extended(degree()) : g;
    return data.class_of[data.element_index(padded)];
}

std::uint64_t PermGroup::exponent(std::uint64_t cap) const {
    return data_->get_classes(cap).exponent;
}

SubgroupEmbedding subgroup(const PermGroup& g, const std::vector<Permutation>& gens) {
    std::vector<Permutation> padded;
    padded.reserve(gens.size());
    for (const Permutation& x : gens) {
        if (x.degree() > g.degree())
            throw std::invalid_argument("subgroup generator degree exceeds ambient degree");
        Permutation y = x.degree() < g.degree() ? x.extended(g.degree()) : x;
        if (!g.contains(y))
            throw std::invalid_argument("subgroup generator fails ambient membership: " +
                                        y.cycle_string());
        padded.push_back(std::move(y));
    }
    return SubgroupEmbedding{g, PermGroup(g.degree(), std::move(padded))};
}

std::vector<int> class_fusion(const SubgroupEmbedding& emb, std::uint64_t cap) {
    const auto& h_classes = emb.subgroup.classes(cap);
    std::vector<int> fusion;
    fusion.reserve(h_classes.size());
    for (const ConjugacyClass& c : h_classes)
        fusion.push_back(emb.ambient.class_index_of(c.representative, cap));
    return fusion;
}

}  // namespace brt
