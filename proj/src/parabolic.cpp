#include "l2bs/parabolic.hpp"

#include <algorithm>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "parabolic";

bool supported_on(const RootVector& v, const std::vector<int>& subset) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0 && !std::binary_search(subset.begin(), subset.end(), static_cast<int>(i))) return false;
    return true;
}

std::vector<int> normalised_subset(std::vector<int> subset, int l) {
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw InvalidInput(kModule, "repeated simple root in subset");
    for (int i : subset)
        if (i < 0 || i >= l) throw InvalidInput(kModule, "subset index " + std::to_string(i + 1) + " out of range");
    return subset;
}

}  // namespace

std::string StandardParabolic::describe() const {
    std::string s = "P{";
    for (std::size_t k = 0; k < subset.size(); ++k) s += (k ? "," : "") + std::to_string(subset[k] + 1);
    return s + "}";
}

RestrictedRootSystem levi_restricted_system(const RestrictedRootSystem& rrs, const std::vector<int>& subset) {
    auto sub = normalised_subset(subset, rrs.q_rank());
    std::vector<RestrictedRoot> roots;
    for (const auto& r : rrs.positive()) {
        if (!supported_on(r.coeffs, sub)) continue;
        RootVector local;
        for (int i : sub) local.push_back(r.coeffs[i]);
        roots.push_back({local, r.multiplicity});
    }
    auto levi = RestrictedRootSystem::from_roots(static_cast<int>(sub.size()), std::move(roots));
    if (!rrs.simple_orbits().empty()) {
        std::vector<std::vector<int>> orbits;
        for (int i : sub) orbits.push_back(rrs.simple_orbits()[i]);
        levi.set_simple_orbits(std::move(orbits));
    }
    return levi;
}

StandardParabolic standard_parabolic(const RestrictedRootSystem& rrs, std::vector<int> subset) {
    StandardParabolic p;
    p.subset = normalised_subset(std::move(subset), rrs.q_rank());
    for (int i : p.subset) p.code |= std::uint64_t{1} << i;
    p.split_rank = rrs.q_rank() - static_cast<int>(p.subset.size());
    for (const auto& r : rrs.positive()) {
        if (supported_on(r.coeffs, p.subset)) continue;
        int level = 0;
        for (int i = 0; i < rrs.q_rank(); ++i)
            if (!std::binary_search(p.subset.begin(), p.subset.end(), i)) level += r.coeffs[i];
        p.sigma.push_back(r);
        p.levels.push_back(level);
        p.dim_n += r.multiplicity;
        p.growth_degree += r.multiplicity * level;
    }
    p.levi_system = levi_restricted_system(rrs, p.subset);
    return p;
}

std::vector<StandardParabolic> enumerate_parabolics(const RestrictedRootSystem& rrs) {
    const int l = rrs.q_rank();
    if (l > 20) throw Unsupported(kModule, "q-rank too large for full enumeration");
    std::vector<StandardParabolic> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << l); ++code) {
        std::vector<int> subset;
        for (int i = 0; i < l; ++i)
            if (code >> i & 1) subset.push_back(i);
        out.push_back(standard_parabolic(rrs, std::move(subset)));
    }
    return out;
}

int growth_degree(const StandardParabolic& p) {
    int d = 0;
    for (std::size_t k = 0; k < p.sigma.size(); ++k) d += p.sigma[k].multiplicity * p.levels[k];
    return d;
}

int levi_deficiency(const StandardParabolic& p) {
    if (!p.levi_annotation) throw PreconditionFailed(kModule, "annotation required: no Levi real form attached to " + p.describe());
    return p.levi_annotation->deficiency;
}

StandardParabolic relative_parabolic(const RestrictedRootSystem& rrs, const std::vector<int>& inner,
                                     const std::vector<int>& outer) {
    auto in = normalised_subset(inner, rrs.q_rank());
    auto out = normalised_subset(outer, rrs.q_rank());
    if (!std::includes(out.begin(), out.end(), in.begin(), in.end()))
        throw InvalidInput(kModule, "inner subset is not contained in the outer subset");
    std::vector<int> local;
    for (int i : in) local.push_back(static_cast<int>(std::lower_bound(out.begin(), out.end(), i) - out.begin()));
    return standard_parabolic(levi_restricted_system(rrs, out), local);
}

}  // namespace l2bs
