#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace l2bs {

enum class CartanType { A, B, C, D, E, F, G };

CartanType parse_cartan_type(const std::string& text);
char to_char(CartanType type);

/// Coefficients of a root over an ordered basis of simple roots.
using RootVector = std::vector<int>;

/// Square integer matrix with entries a_ij = <alpha_i, alpha_j^vee>.
using CartanMatrix = std::vector<std::vector<int>>;

/// Edge of a Dynkin diagram, 0-based node indices, i < j.
struct DynkinEdge {
    int i = 0;
    int j = 0;
    int multiplicity = 1;

    friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

/// One connected component of a (sub)diagram together with its type, e.g. "A1", "B3", "E6".
struct DynkinComponent {
    std::string type;
    std::vector<int> nodes;  // 0-based, ascending

    friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

int root_height(const RootVector& root);

/// Split the diagram restricted to `nodes` into connected components and name each one.
/// Components come out ordered by their smallest node.
std::vector<DynkinComponent> decompose_diagram(const CartanMatrix& cartan, const std::vector<int>& nodes);

/// Name of a connected diagram given by its Cartan matrix (all nodes). Throws InvalidInput
/// when the matrix is not of finite type.
std::string classify_connected(const CartanMatrix& cartan);

/// Number of positive roots of the irreducible system of the given type and rank.
std::size_t classical_positive_root_count(CartanType type, int rank);

/// Irreducible reduced root system in simple-root coordinates, Bourbaki numbering.
/// Immutable after construction.
class RootSystem {
public:
    static RootSystem build(CartanType type, int rank);

    CartanType type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string name() const;

    /// Sorted by height, then lexicographically.
    const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }
    const std::vector<DynkinEdge>& adjacency() const noexcept { return edges_; }
    const CartanMatrix& cartan() const noexcept { return cartan_; }

    /// <beta, alpha_i^vee> for an arbitrary integer combination beta of simple roots.
    int pairing(const RootVector& beta, int i) const;

    /// True for positive and negative roots.
    bool is_root(const RootVector& beta) const;

    const RootVector& highest_root() const { return positive_.back(); }

private:
    RootSystem() = default;

    CartanType type_ = CartanType::A;
    int rank_ = 0;
    CartanMatrix cartan_;
    std::vector<RootVector> positive_;
    std::map<RootVector, std::size_t> index_;
    std::vector<DynkinEdge> edges_;
};

}  // namespace l2bs
