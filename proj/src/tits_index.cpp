#include "l2bs/tits_index.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "tits_index";

using Permutation = std::vector<int>;

void extend_automorphisms(const CartanMatrix& a, Permutation& partial, std::vector<bool>& used,
                          std::vector<Permutation>& out) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(partial.size());
    if (k == n) {
        out.push_back(partial);
        return;
    }
    for (int target = 0; target < n; ++target) {
        if (used[target]) continue;
        bool ok = a[k][k] == a[target][target];
        for (int j = 0; ok && j < k; ++j) {
            ok = a[k][j] == a[target][partial[j]] && a[j][k] == a[partial[j]][target];
        }
        if (!ok) continue;
        used[target] = true;
        partial.push_back(target);
        extend_automorphisms(a, partial, used, out);
        partial.pop_back();
        used[target] = false;
    }
}

Permutation compose(const Permutation& f, const Permutation& g) {
    Permutation h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

std::set<Permutation> generated_group(const std::vector<Permutation>& gens, std::size_t n) {
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    std::set<Permutation> group{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = compose(g, x);
                if (group.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return group;
}

std::vector<std::vector<int>> orbit_partition(const std::set<Permutation>& group, std::size_t n) {
    std::vector<int> owner(n, -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (owner[i] >= 0) continue;
        std::set<int> orbit;
        for (const auto& g : group) orbit.insert(g[i]);
        for (int j : orbit) owner[j] = static_cast<int>(orbits.size());
        orbits.emplace_back(orbit.begin(), orbit.end());
    }
    return orbits;
}

void normalise(std::vector<std::vector<int>>& orbits) {
    for (auto& o : orbits) std::sort(o.begin(), o.end());
    std::sort(orbits.begin(), orbits.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

}  // namespace

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
    std::vector<Permutation> out;
    Permutation partial;
    std::vector<bool> used(rs.rank(), false);
    extend_automorphisms(rs.cartan(), partial, used, out);
    return out;
}

TitsIndex TitsIndex::make(RootSystem base, std::vector<std::vector<int>> orbits,
                          const std::vector<std::vector<int>>& distinguished, std::string label) {
    const int n = base.rank();
    std::vector<int> seen(n, 0);
    for (const auto& o : orbits) {
        if (o.empty()) throw InvalidInput(kModule, "empty orbit");
        for (int i : o) {
            if (i < 0 || i >= n) throw InvalidInput(kModule, "orbit member " + std::to_string(i + 1) + " out of range");
            ++seen[i];
        }
    }
    for (int i = 0; i < n; ++i) {
        if (seen[i] != 1) {
            throw InvalidInput(kModule, "orbits do not partition the simple roots (root " + std::to_string(i + 1) +
                                            " appears " + std::to_string(seen[i]) + " times)");
        }
    }
    normalise(orbits);

    // The partition must be the orbit partition of a subgroup of the diagram automorphisms.
    auto autos = diagram_automorphisms(base);
    bool induced = false;
    const std::size_t subsets = std::size_t{1} << autos.size();
    for (std::size_t mask = 0; mask < subsets && !induced; ++mask) {
        std::vector<Permutation> gens;
        for (std::size_t b = 0; b < autos.size(); ++b)
            if (mask >> b & 1) gens.push_back(autos[b]);
        auto parts = orbit_partition(generated_group(gens, n), n);
        normalise(parts);
        induced = parts == orbits;
    }
    if (!induced) throw InvalidInput(kModule, "orbit partition is not induced by a diagram automorphism");

    TitsIndex index(std::move(base));
    index.orbits_ = std::move(orbits);
    index.label_ = std::move(label);
    for (auto d : distinguished) {
        std::sort(d.begin(), d.end());
        auto it = std::find(index.orbits_.begin(), index.orbits_.end(), d);
        if (it == index.orbits_.end()) throw InvalidInput(kModule, "distinguished set is not one of the orbits");
        auto pos = static_cast<std::size_t>(it - index.orbits_.begin());
        if (std::find(index.distinguished_.begin(), index.distinguished_.end(), pos) != index.distinguished_.end())
            throw InvalidInput(kModule, "orbit listed twice as distinguished");
        index.distinguished_.push_back(pos);
    }
    std::sort(index.distinguished_.begin(), index.distinguished_.end());
    return index;
}

TitsIndex TitsIndex::split(RootSystem base, std::string label) {
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < base.rank(); ++i) orbits.push_back({i});
    auto distinguished = orbits;
    return make(std::move(base), std::move(orbits), distinguished, std::move(label));
}

std::vector<std::vector<int>> TitsIndex::distinguished_orbits() const {
    std::vector<std::vector<int>> out;
    for (auto d : distinguished_) out.push_back(orbits_[d]);
    return out;
}

std::vector<int> TitsIndex::anisotropic_nodes() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < orbits_.size(); ++k) {
        if (std::find(distinguished_.begin(), distinguished_.end(), k) != distinguished_.end()) continue;
        out.insert(out.end(), orbits_[k].begin(), orbits_[k].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

RestrictedRootSystem RestrictedRootSystem::from_roots(int q_rank, std::vector<RestrictedRoot> roots) {
    if (q_rank < 0) throw InvalidInput(kModule, "negative q-rank");
    std::map<RootVector, int> merged;
    for (auto& r : roots) {
        if (static_cast<int>(r.coeffs.size()) != q_rank) throw InvalidInput(kModule, "restricted root of wrong length");
        if (r.multiplicity < 1) throw InvalidInput(kModule, "restricted root multiplicity must be positive");
        bool positive = false;
        for (int c : r.coeffs) {
            if (c < 0) throw InvalidInput(kModule, "restricted root with a negative coefficient");
            positive = positive || c > 0;
        }
        if (!positive) throw InvalidInput(kModule, "zero restricted root");
        merged[r.coeffs] += r.multiplicity;
    }
    for (int i = 0; i < q_rank; ++i) {
        RootVector e(q_rank, 0);
        e[i] = 1;
        if (!merged.count(e)) throw InvalidInput(kModule, "simple restricted root " + std::to_string(i + 1) + " missing");
    }
    RestrictedRootSystem rrs;
    rrs.q_rank_ = q_rank;
    for (auto& [coeffs, mult] : merged) rrs.positive_.push_back({coeffs, mult});
    std::stable_sort(rrs.positive_.begin(), rrs.positive_.end(), [](const auto& x, const auto& y) {
        return root_height(x.coeffs) < root_height(y.coeffs);
    });
    return rrs;
}

int RestrictedRootSystem::total_multiplicity() const {
    int s = 0;
    for (const auto& r : positive_) s += r.multiplicity;
    return s;
}

int RestrictedRootSystem::multiplicity_of(const RootVector& coeffs) const {
    for (const auto& r : positive_)
        if (r.coeffs == coeffs) return r.multiplicity;
    return 0;
}

CartanMatrix RestrictedRootSystem::cartan() const {
    std::set<RootVector> reduced;
    for (const auto& r : positive_) reduced.insert(r.coeffs);
    for (const auto& r : positive_) {
        bool even = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c % 2 == 0; });
        if (!even) continue;
        RootVector half(r.coeffs.size());
        for (std::size_t i = 0; i < half.size(); ++i) half[i] = r.coeffs[i] / 2;
        if (reduced.count(half)) reduced.erase(r.coeffs);
    }
    const int l = q_rank_;
    CartanMatrix a(l, std::vector<int>(l, 0));
    for (int j = 0; j < l; ++j) {
        a[j][j] = 2;
        for (int i = 0; i < l; ++i) {
            if (i == j) continue;
            RootVector v(l, 0);
            v[j] = 1;
            int k = 0;
            while (true) {
                v[i] += 1;
                if (!reduced.count(v)) break;
                ++k;
            }
            a[j][i] = -k;
        }
    }
    return a;
}

std::string RestrictedRootSystem::type_label() const {
    if (q_rank_ == 0) return {};
    std::vector<int> all(q_rank_);
    for (int i = 0; i < q_rank_; ++i) all[i] = i;
    auto comps = decompose_diagram(cartan(), all);
    std::string label;
    for (const auto& comp : comps) {
        bool nonreduced = false;
        for (const auto& r : positive_) {
            bool inside = true;
            for (int i = 0; i < q_rank_; ++i)
                if (r.coeffs[i] != 0 && !std::binary_search(comp.nodes.begin(), comp.nodes.end(), i)) inside = false;
            if (!inside) continue;
            RootVector dbl(r.coeffs);
            for (int& c : dbl) c *= 2;
            if (multiplicity_of(dbl) > 0) nonreduced = true;
        }
        if (!label.empty()) label += "x";
        label += nonreduced ? "BC" + std::to_string(comp.nodes.size()) : comp.type;
    }
    return label;
}

RestrictedRootSystem restrict_index(const TitsIndex& index) {
    const auto dist = index.distinguished_orbits();
    const int l = static_cast<int>(dist.size());
    std::vector<RestrictedRoot> roots;
    for (const auto& root : index.base().positive_roots()) {
        RootVector image(l, 0);
        bool nonzero = false;
        for (int k = 0; k < l; ++k) {
            for (int i : dist[k]) image[k] += root[i];
            nonzero = nonzero || image[k] != 0;
        }
        if (nonzero) roots.push_back({image, 1});
    }
    auto rrs = RestrictedRootSystem::from_roots(l, std::move(roots));
    rrs.set_simple_orbits(dist);
    return rrs;
}

std::vector<DynkinComponent> anisotropic_kernel(const TitsIndex& index) {
    return decompose_diagram(index.base().cartan(), index.anisotropic_nodes());
}

}  // namespace l2bs
