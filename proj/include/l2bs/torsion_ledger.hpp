#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l2bs/rational.hpp"
#include "l2bs/real_forms.hpp"

namespace l2bs {

enum class VerdictKind { NotAcyclic, Zero, HyperbolicOddProportional, OddOpen };

std::string to_string(VerdictKind kind);

/// coefficient * pi^(-pi_power) per unit hyperbolic covolume.
struct HyperbolicConstant {
    Rational coefficient;
    int pi_power = 0;

    std::string str() const;  // e.g. "-1/6 * pi^-1"
};

/// Known proportionality constants for SO(2n+1,1), n = 1, 2, 3.
std::optional<HyperbolicConstant> hyperbolic_constant(int n);

struct TorsionVerdict {
    VerdictKind kind = VerdictKind::OddOpen;
    int deficiency = 0;
    std::optional<int> witness_degree;         // NotAcyclic
    std::optional<int> hyperbolic_n;           // HyperbolicOddProportional: G = SO(2n+1,1) locally
    std::optional<HyperbolicConstant> constant;
    bool euler_char_zero = false;
    std::vector<std::string> citations;
    std::string note;
};

TorsionVerdict torsion_verdict(const RealFormData& g);

/// Symbolic linear expression in named unknowns, or a fully unknown value.
struct SymbolicValue {
    bool known = true;
    Rational constant;
    std::map<std::string, Rational> terms;

    static SymbolicValue zero() { return {}; }
    static SymbolicValue unknown();
    static SymbolicValue symbol(const std::string& name);
    static SymbolicValue of(Rational r);

    bool is_zero() const { return known && constant.is_zero() && terms.empty(); }
    std::string str() const;

    friend SymbolicValue operator+(const SymbolicValue& a, const SymbolicValue& b);
    friend SymbolicValue operator-(const SymbolicValue& a, const SymbolicValue& b);
    friend SymbolicValue operator*(const Rational& s, const SymbolicValue& a);
    friend bool operator==(const SymbolicValue&, const SymbolicValue&) = default;
};

enum class StratumRule { Leaf, Pushout, DisjointUnion, HalfBoundary };

struct Stratum {
    std::string name;
    StratumRule rule = StratumRule::Leaf;
    std::vector<std::string> inputs;  // Pushout: {X0, X1, X2}; HalfBoundary: {boundary}
    std::optional<SymbolicValue> value;  // leaves only
    int dimension = -1;                  // HalfBoundary needs an even dimension
    std::string citation;
};

struct Resolution {
    SymbolicValue value;
    std::vector<std::string> blame;  // leaves responsible for an unknown value
};

class StratumLedger {
public:
    void add_leaf(const std::string& name, SymbolicValue value, std::string citation = {});
    void set_leaf(const std::string& name, SymbolicValue value);
    /// rho(result) = rho(x1) + rho(x2) - rho(x0).
    void add_pushout(const std::string& result, const std::string& x0, const std::string& x1, const std::string& x2);
    void add_disjoint_union(const std::string& result, const std::vector<std::string>& parts);
    /// rho(result) = rho(boundary) / 2 for a manifold of even dimension.
    void add_half_boundary(const std::string& result, const std::string& boundary, int dimension);

    const std::vector<Stratum>& strata() const noexcept { return strata_; }

    /// Evaluates every stratum. With a shuffle seed the ready strata are processed in a
    /// pseudo-random topological order, which must not change the outcome.
    std::map<std::string, Resolution> propagate(std::optional<std::uint64_t> shuffle_seed = std::nullopt) const;

private:
    void add(Stratum s);
    std::vector<Stratum> strata_;
};

/// Boundary induction over layers of closed boundary components for Q-rank l >= 1.
/// Strata: "e(P_k)", "Y_k", "dY_k", "X_k", "boundary", and "X" (when dim_x is even).
StratumLedger boundary_induction_ledger(int q_rank, int dim_x);

struct CornerStratum {
    std::vector<int> subset;  // open coordinates, 1-based
    int dimension = 0;
    int contribution = 0;     // compactly supported Euler characteristic
};

std::vector<CornerStratum> corner_strata(int l);

/// Sum of the contributions, i.e. the compactly supported Euler characteristic of the corner.
int corner_euler_characteristic(const std::vector<CornerStratum>& strata);

}  // namespace l2bs
