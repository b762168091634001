#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "l2bs/parabolic.hpp"
#include "l2bs/rational.hpp"
#include "l2bs/real_forms.hpp"

namespace l2bs {

/// Value in [0, inf] together with the extra top element inf+ (spectral gap).
class NSValue {
public:
    enum class Kind { Finite, Infinity, InfinityPlus };

    NSValue() = default;  // 0
    NSValue(Rational r);  // NOLINT: finite values convert implicitly
    static NSValue infinity() { return NSValue(Kind::Infinity); }
    static NSValue infinity_plus() { return NSValue(Kind::InfinityPlus); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Only meaningful for finite values.
    const Rational& value() const noexcept { return value_; }

    NSValue half() const;
    std::string str() const;  // "3/2", "inf", "inf+"
    static NSValue parse(const std::string& text);

    friend NSValue operator+(const NSValue& a, const NSValue& b);
    friend bool operator==(const NSValue& a, const NSValue& b) noexcept;
    friend std::strong_ordering operator<=>(const NSValue& a, const NSValue& b) noexcept;

private:
    explicit NSValue(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    Rational value_;
};

NSValue min(const NSValue& a, const NSValue& b);

struct AlphaEntry {
    NSValue value;
    bool upper_bound = false;  // value is only an upper bound
    bool positive = false;     // known to be > 0 (bound records)
};

struct NSProfile {
    int n = 0;
    std::set<int> betti_nonzero;
    std::map<int, AlphaEntry> alpha;  // degrees >= 1; absent means inf+

    NSValue alpha_at(int p) const;
    bool betti(int p) const { return betti_nonzero.count(p) != 0; }
    bool exact() const;
};

NSProfile olbrich_profile(int n, int m);

/// Half the minimum of alpha_p and alpha_{p+1}.
NSValue tilde_alpha(const NSProfile& profile, int p);

/// Product formula in degree q >= 1; both profiles must be exact.
NSValue product_alpha(const NSProfile& a, const NSProfile& b, int q);

struct CertificateStep {
    std::string claim;
    std::string rule;
    std::string citation;
    std::vector<std::string> inputs;
};

struct Certificate {
    std::vector<CertificateStep> steps;
    std::vector<std::string> notes;

    void add(std::string claim, std::string rule, std::string citation, std::vector<std::string> inputs = {});
};

struct BoundResult {
    NSValue bound;
    int q = 0;
    int n = 0;       // dim X
    int dim_n = 0;   // dim N_P
    int dim_xp = 0;  // dim X_P
    int growth = 0;  // d(N_P)
    int levi_deficiency = 0;
    int levi_f_rank = 0;
    std::string branch;  // "betti" or "interval"
    Certificate certificate;
};

/// Interval membership used in the positive fundamental-rank branch; false when f <= 0.
bool interval_lemma_check(int dim_xp, int f, int n);

/// Upper bound on tilde-alpha_q of a Q-rank one lattice. Throws Unsupported, PreconditionFailed
/// or CertificateFailure (with a code) when the proof cannot be replayed on the data.
BoundResult theorem1_bound(const RealFormData& g, const RestrictedRootSystem& rrs, const StandardParabolic& p_min);

/// The same boundary-component estimate on alpha_q(e(P)) without the acyclicity requirement.
BoundResult boundary_component_bound(const RealFormData& g, const RestrictedRootSystem& rrs,
                                     const StandardParabolic& p_min);

}  // namespace l2bs
