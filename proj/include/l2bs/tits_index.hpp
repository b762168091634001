#pragma once

#include <string>
#include <vector>

#include "l2bs/root_data.hpp"

namespace l2bs {

/// A rational form given combinatorially: Dynkin diagram, the partition of the simple
/// roots into orbits of the Galois *-action, and the circled (distinguished) orbits.
///
/// Only the combinatorics are modelled. `make` checks that the orbit partition is the
/// orbit partition of some group of diagram automorphisms; whether the index is
/// realizable over Q is the caller's responsibility.
class TitsIndex {
public:
    /// `orbits` and `distinguished` use 0-based simple-root indices. Each distinguished
    /// entry must coincide with one of the orbits.
    static TitsIndex make(RootSystem base,
                          std::vector<std::vector<int>> orbits,
                          const std::vector<std::vector<int>>& distinguished,
                          std::string label = {});

    /// Every simple root its own orbit and circled.
    static TitsIndex split(RootSystem base, std::string label = {});

    const RootSystem& base() const noexcept { return base_; }
    /// Each orbit sorted; orbits ordered by smallest member.
    const std::vector<std::vector<int>>& orbits() const noexcept { return orbits_; }
    /// Indices into orbits(), ascending.
    const std::vector<std::size_t>& distinguished() const noexcept { return distinguished_; }
    const std::string& label() const noexcept { return label_; }

    std::vector<std::vector<int>> distinguished_orbits() const;
    /// Simple roots in non-distinguished orbits, ascending.
    std::vector<int> anisotropic_nodes() const;

private:
    TitsIndex(RootSystem base) : base_(std::move(base)) {}

    RootSystem base_;
    std::vector<std::vector<int>> orbits_;
    std::vector<std::size_t> distinguished_;
    std::string label_;
};

struct RestrictedRoot {
    RootVector coeffs;  // over the simple restricted roots
    int multiplicity = 0;

    friend bool operator==(const RestrictedRoot&, const RestrictedRoot&) = default;
};

/// Positive restricted roots with multiplicities, in coordinates over the simple
/// restricted roots (one per distinguished orbit).
class RestrictedRootSystem {
public:
    RestrictedRootSystem() = default;

    /// Validates nonnegativity, nonzero vectors, positive multiplicities and that every
    /// simple restricted root occurs; sorts by height then lexicographically.
    static RestrictedRootSystem from_roots(int q_rank, std::vector<RestrictedRoot> roots);

    int q_rank() const noexcept { return q_rank_; }
    const std::vector<RestrictedRoot>& positive() const noexcept { return positive_; }

    int total_multiplicity() const;
    /// Multiplicity of a given coefficient vector, 0 if it is not a restricted root.
    int multiplicity_of(const RootVector& coeffs) const;

    /// Absolute simple roots lying over each simple restricted root (empty when built by hand).
    const std::vector<std::vector<int>>& simple_orbits() const noexcept { return simple_orbits_; }
    void set_simple_orbits(std::vector<std::vector<int>> orbits) { simple_orbits_ = std::move(orbits); }

    /// Cartan integers of the reduced part, computed from root strings. Entry [j][i] is
    /// <beta_j, beta_i^vee>.
    CartanMatrix cartan() const;

    /// Type label such as "A1", "BC1", "A2", "A1xA1"; empty for q-rank 0. Reporting only.
    std::string type_label() const;

private:
    int q_rank_ = 0;
    std::vector<RestrictedRoot> positive_;
    std::vector<std::vector<int>> simple_orbits_;
};

/// Sends sum c_i alpha_i to the vector of orbit sums over the distinguished orbits, drops
/// zero vectors and counts how many absolute roots land on each restricted root.
RestrictedRootSystem restrict_index(const TitsIndex& index);

/// Sub-diagram on the non-distinguished simple roots, split into typed components.
std::vector<DynkinComponent> anisotropic_kernel(const TitsIndex& index);

/// All permutations of the simple roots preserving the Cartan matrix.
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

}  // namespace l2bs
