#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "l2bs/ns_calculus.hpp"
#include "l2bs/parabolic.hpp"
#include "l2bs/rational.hpp"
#include "l2bs/real_forms.hpp"
#include "l2bs/tits_index.hpp"
#include "l2bs/torsion_ledger.hpp"

namespace l2bs {

struct DiagonalForm {
    std::vector<Rational> coeffs;

    static DiagonalForm make(std::vector<Rational> coeffs);
    /// "1,1,-3,-3" or "1/2,-3".
    static DiagonalForm parse(const std::string& text);

    /// Coefficients times the lcm of the denominators.
    std::vector<std::int64_t> integer_coeffs() const;
    Rational evaluate(const std::vector<std::int64_t>& x) const;
    std::string str() const;
};

struct Signature {
    int positive = 0;
    int negative = 0;
};

Signature signature(const DiagonalForm& f);

enum class IsotropyVerdict { Isotropic, NoZeroUpTo, CertifiedAnisotropic };

std::string to_string(IsotropyVerdict v);

struct IsotropyReport {
    IsotropyVerdict verdict = IsotropyVerdict::NoZeroUpTo;
    std::vector<std::int64_t> witness;  // Isotropic only
    int height = 0;                     // searched height (cross-check height when certified)
    std::string rule;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> steps;
};

/// Exhaustive search over integer vectors of sup-norm <= height. The witness has minimal
/// sup-norm, nonnegative entries, and is lexicographically least among those.
IsotropyReport isotropy_search(const DiagonalForm& f, int height);

/// Certificate that <1,1,-p,-p> has no nontrivial rational zero, for a prime p = 3 mod 4.
/// Throws InvalidInput otherwise; the message carries a search witness when one exists.
IsotropyReport certify_anisotropic_family(std::int64_t p, int cross_check_height = 30);

struct TitsCandidate {
    TitsIndex index;
    std::string kernel_type;  // e.g. "A1xA1"
    bool selected = false;
};

struct Example46Report {
    std::int64_t p = 0;
    std::string label;  // only p-dependent part
    DiagonalForm form;
    Signature sig;
    std::vector<std::int64_t> hyperbolic_witness;
    IsotropyReport complement;
    int q_rank = 0;
    RealFormData group;
    int q = 0;
    std::vector<TitsCandidate> candidates;
    RestrictedRootSystem restricted;
    std::string restricted_type;
    StandardParabolic minimal;
    BoundResult bound;
    TorsionVerdict torsion;
    std::vector<std::string> notes;
};

/// The two A3 indices compatible with a Q-rank one form of SO(3,3).
std::vector<TitsIndex> so33_rank_one_candidates();

Example46Report example46_pipeline(std::int64_t p, int search_height = 30);

}  // namespace l2bs
