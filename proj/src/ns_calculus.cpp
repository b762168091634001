#include "l2bs/ns_calculus.hpp"

#include <algorithm>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "ns_calculus";

int rank_of(NSValue::Kind k) {
    return k == NSValue::Kind::Finite ? 0 : k == NSValue::Kind::Infinity ? 1 : 2;
}

std::string num(int v) {
    return std::to_string(v);
}

}  // namespace

NSValue::NSValue(Rational r) : value_(r) {
    if (r.sign() < 0) throw InvalidInput(kModule, "Novikov-Shubin values are nonnegative");
}

NSValue NSValue::half() const {
    if (!is_finite()) return *this;
    return NSValue(value_ / Rational(2));
}

std::string NSValue::str() const {
    switch (kind_) {
        case Kind::Finite: return value_.str();
        case Kind::Infinity: return "inf";
        case Kind::InfinityPlus: return "inf+";
    }
    return "?";
}

NSValue NSValue::parse(const std::string& text) {
    if (text == "inf") return infinity();
    if (text == "inf+") return infinity_plus();
    try {
        return NSValue(Rational::parse(text));
    } catch (const std::invalid_argument& e) {
        throw InvalidInput(kModule, e.what());
    }
}

NSValue operator+(const NSValue& a, const NSValue& b) {
    if (a.is_finite() && b.is_finite()) return NSValue(a.value_ + b.value_);
    return rank_of(a.kind_) >= rank_of(b.kind_) ? NSValue(a.kind_) : NSValue(b.kind_);
}

bool operator==(const NSValue& a, const NSValue& b) noexcept {
    return a.kind_ == b.kind_ && (!a.is_finite() || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const NSValue& a, const NSValue& b) noexcept {
    if (a.kind_ != b.kind_) return rank_of(a.kind_) <=> rank_of(b.kind_);
    if (a.is_finite()) return a.value_ <=> b.value_;
    return std::strong_ordering::equal;
}

NSValue min(const NSValue& a, const NSValue& b) {
    return b < a ? b : a;
}

NSValue NSProfile::alpha_at(int p) const {
    auto it = alpha.find(p);
    return it == alpha.end() ? NSValue::infinity_plus() : it->second.value;
}

bool NSProfile::exact() const {
    return std::none_of(alpha.begin(), alpha.end(), [](const auto& kv) { return kv.second.upper_bound; });
}

NSProfile olbrich_profile(int n, int m) {
    if (n < 0 || m < 0) throw InvalidInput(kModule, "dimension and deficiency must be nonnegative");
    NSProfile prof;
    prof.n = n;
    if (m == 0) {
        if (n % 2 == 0) prof.betti_nonzero.insert(n / 2);
        return prof;
    }
    if ((n - m) % 2 != 0) throw InvalidInput(kModule, "dim X - deficiency must be even");
    for (int p = (n - m) / 2 + 1; p <= (n + m) / 2; ++p) prof.alpha[p] = {NSValue(Rational(m)), false, true};
    return prof;
}

NSValue tilde_alpha(const NSProfile& profile, int p) {
    if (p < 0) throw InvalidInput(kModule, "negative degree");
    return min(profile.alpha_at(p), profile.alpha_at(p + 1)).half();
}

NSValue product_alpha(const NSProfile& a, const NSProfile& b, int q) {
    if (!a.exact() || !b.exact()) throw PreconditionFailed(kModule, "exact profiles required for the product formula");
    if (q < 1) throw InvalidInput(kModule, "product formula needs degree q >= 1");
    NSValue best = NSValue::infinity_plus();
    for (int i = 0; i <= q - 1; ++i) best = min(best, a.alpha_at(i + 1) + b.alpha_at(q - i));
    for (int i = 1; i <= q - 1; ++i) best = min(best, a.alpha_at(i) + b.alpha_at(q - i));
    for (int i = 0; i <= q - 1; ++i)
        if (a.betti(i)) best = min(best, b.alpha_at(q - i));
    for (int i = 1; i <= q; ++i)
        if (b.betti(q - i)) best = min(best, a.alpha_at(i));
    return best;
}

void Certificate::add(std::string claim, std::string rule, std::string citation, std::vector<std::string> inputs) {
    steps.push_back({std::move(claim), std::move(rule), std::move(citation), std::move(inputs)});
}

bool interval_lemma_check(int dim_xp, int f, int n) {
    if (f <= 0 || dim_xp < 0 || n < dim_xp + 1) return false;
    const int dim_n = n - 1 - dim_xp;
    const int q = n / 2;
    const int v = n % 2 == 0 ? q - static_cast<int>(ceil_half(dim_n)) : q - static_cast<int>(floor_half(dim_n));
    // [ (dim_xp - f)/2 + 1, (dim_xp + f)/2 ] compared in doubled units
    return 2 * v >= dim_xp - f + 2 && 2 * v <= dim_xp + f;
}

namespace {

BoundResult replay(const RealFormData& g, const RestrictedRootSystem& rrs, const StandardParabolic& p_min,
                   bool whole_lattice) {
    if (rrs.q_rank() != 1)
        throw Unsupported(kModule, "bound requires Q-rank 1, got " + num(rrs.q_rank()));
    if (!p_min.is_minimal()) throw PreconditionFailed(kModule, p_min.describe() + " is not the minimal parabolic");
    levi_deficiency(p_min);  // throws when the annotation is missing
    const RealFormData& levi = *p_min.levi_annotation;

    BoundResult r;
    r.n = g.dim_x;
    r.q = middle_dimension(g);
    r.dim_n = p_min.dim_n;
    r.growth = growth_degree(p_min);
    r.levi_deficiency = levi.deficiency;
    r.levi_f_rank = levi.f_rank;
    auto& cert = r.certificate;

    if (g.noncompact_nonabelian() && ((g.dim_x - g.deficiency) % 2 != 0 || g.dim_x - g.deficiency <= 0))
        throw CertificateFailure(kModule, "parity",
                                 "dim X - deficiency = " + num(g.dim_x - g.deficiency) + " is not even and positive");

    if (whole_lattice) {
        if (g.deficiency == 0)
            throw PreconditionFailed(kModule, "not L2-acyclic, bound not applicable: " + g.name + " has deficiency 0");
        cert.add("b_p(X-bar) = 0 for all p since deficiency " + num(g.deficiency) + " > 0", "l2-acyclicity",
                 "betti-vanishing-positive-deficiency", {g.name});
        cert.add("tilde-alpha_" + num(r.q) + "(X-bar) <= alpha_" + num(r.q) + "(boundary)", "boundary-inequality",
                 "half-min-boundary-lemma", {"dim X = " + num(r.n), "q = " + num(r.q)});
    }
    cert.add("every proper rational parabolic is minimal, boundary components are closed and the boundary is their "
             "coproduct; alpha_q(boundary) = alpha_q(e(P_min))",
             "closed-boundary-reduction", "q-rank-one-boundary", {"q-rank = 1", p_min.describe()});

    if (r.dim_n < 1) throw CertificateFailure(kModule, "nilradical", "minimal parabolic has trivial unipotent radical");
    r.dim_xp = r.n - 1 - r.dim_n;
    if (r.dim_xp < 0)
        throw CertificateFailure(kModule, "dimension", "dim N_P = " + num(r.dim_n) + " exceeds dim X - 1 = " + num(r.n - 1));
    if (levi.dim_x != r.dim_xp)
        throw CertificateFailure(kModule, "dim_mismatch",
                                 "Levi annotation " + levi.name + " has dim X_P = " + num(levi.dim_x) +
                                     " but dim X - 1 - dim N_P = " + num(r.dim_xp));
    const int f = levi.f_rank;
    if (f < 0 || (r.dim_xp - f) % 2 != 0)
        throw CertificateFailure(kModule, "parity",
                                 "f-rank(X_P) = " + num(f) + " and dim X_P = " + num(r.dim_xp) + " differ in parity");
    cert.add("dim e(P) = dim X - 1 = " + num(r.n - 1) + " = dim N_P + dim X_P = " + num(r.dim_n) + " + " + num(r.dim_xp),
             "dimension-bookkeeping", "horospherical-decomposition",
             {"dim N_P = " + num(r.dim_n), "levi " + levi.name});
    cert.add("alpha_i(N_P) <= d(N_P) = " + num(r.growth) + " for i = 1.." + num(r.dim_n), "rumin-growth-bound",
             "nilpotent-growth-degree", {"d(N_P) = sum m_alpha level(alpha)"});

    const int q = r.q;
    if (f == 0) {
        r.branch = "betti";
        const int k = static_cast<int>(ceil_half(r.dim_n));
        const int j = q - k;
        if (k < 1 || k > q || k > r.dim_n)
            throw CertificateFailure(kModule, "index_range",
                                     "degree " + num(k) + " of N_P is outside the fourth set range 1.." + num(q));
        auto xp = olbrich_profile(r.dim_xp, 0);
        if (!xp.betti(j))
            throw CertificateFailure(kModule, "betti_witness",
                                     "b_" + num(j) + "(X_P) vanishes; X_P has dimension " + num(r.dim_xp) +
                                         " and nonzero Betti degree only at " + num(r.dim_xp / 2));
        cert.add("f-rank(X_P) = 0, so b_" + num(j) + "(X_P) > 0 with " + num(j) + " = q - ceil(dim N_P / 2) = dim X_P / 2",
                 "betti-witness", "olbrich-betti", {"dim X_P = " + num(r.dim_xp)});
        cert.add("alpha_" + num(k) + "(N_P) lies in the fourth set, hence alpha_q(e(P)) <= d(N_P) = " + num(r.growth),
                 "product-formula-fourth-set", "product-formula", {"k = " + num(k), "q - k = " + num(j)});
    } else {
        r.branch = "interval";
        const int k = r.n % 2 == 0 ? static_cast<int>(ceil_half(r.dim_n)) : static_cast<int>(floor_half(r.dim_n));
        const int j = q - k;
        if (!interval_lemma_check(r.dim_xp, f, r.n))
            throw CertificateFailure(kModule, "interval",
                                     "degree " + num(j) + " is outside [" + Rational(r.dim_xp - f + 2, 2).str() + ", " +
                                         Rational(r.dim_xp + f, 2).str() + "]");
        if (k < 1 || k > q - 1 || k > r.dim_n)
            throw CertificateFailure(kModule, "index_range",
                                     "degree " + num(k) + " of N_P is outside the second set range 1.." + num(q - 1));
        cert.add("q - " + std::string(r.n % 2 == 0 ? "ceil" : "floor") + "(dim N_P / 2) = " + num(j) + " lies in [" +
                     Rational(r.dim_xp - f + 2, 2).str() + ", " + Rational(r.dim_xp + f, 2).str() + "]",
                 "interval-lemma", "olbrich-window", {"dim X_P = " + num(r.dim_xp), "f-rank(X_P) = " + num(f)});
        cert.add("alpha_" + num(j) + "(X_P) <= f-rank(X_P) = " + num(f), "window-value", "olbrich-window",
                 {"euclidean part counted with f-rank = dim"});
        cert.add("alpha_" + num(k) + "(N_P) + alpha_" + num(j) + "(X_P) lies in the second set, hence alpha_q(e(P)) <= " +
                     num(f + r.growth),
                 "product-formula-second-set", "product-formula", {"k = " + num(k), "q - k = " + num(j)});
    }
    cert.notes.push_back("product formula applied under the limit property of N_P and X_P, which holds by the "
                         "explicit nilpotent and symmetric-space computations; not checked here");

    if (levi.deficiency != f)
        throw CertificateFailure(kModule, "levi_rank", "deficiency of " + levi.name + " differs from its f-rank");
    r.bound = NSValue(Rational(levi.deficiency + r.growth));
    if (whole_lattice) {
        cert.add("tilde-alpha_" + num(q) + "(Gamma) <= delta(M_P) + d(N_P) = " + num(levi.deficiency) + " + " +
                     num(r.growth) + " = " + r.bound.str(),
                 "bound", "q-rank-one-novikov-shubin-bound", {g.name});
        if (r.n % 2 == 0)
            cert.notes.push_back("dim X even: sharper alpha_" + num(q) + "(X-bar) <= 2 alpha_" + num(q) +
                                 "(boundary) <= " + num(2 * (levi.deficiency + r.growth)));
    } else {
        cert.add("alpha_" + num(q) + "(e(P)) <= f-rank(X_P) + d(N_P) = " + r.bound.str(), "bound",
                 "boundary-component-bound", {g.name});
    }
    return r;
}

}  // namespace

BoundResult theorem1_bound(const RealFormData& g, const RestrictedRootSystem& rrs, const StandardParabolic& p_min) {
    return replay(g, rrs, p_min, true);
}

BoundResult boundary_component_bound(const RealFormData& g, const RestrictedRootSystem& rrs,
                                     const StandardParabolic& p_min) {
    return replay(g, rrs, p_min, false);
}

}  // namespace l2bs
