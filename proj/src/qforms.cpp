#include "l2bs/qforms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "qforms";

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    __int128 r = 1, x = b % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// All vectors in [0,h]^k, as a flat list.
std::vector<std::vector<std::int64_t>> box(std::size_t k, std::int64_t h) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(k, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = k;
        while (i > 0 && v[i - 1] == h) v[--i] = 0;
        if (i == 0) return out;
        ++v[i - 1];
    }
}

}  // namespace

DiagonalForm DiagonalForm::make(std::vector<Rational> coeffs) {
    if (coeffs.empty()) throw InvalidInput(kModule, "a form needs at least one coefficient");
    for (const auto& c : coeffs)
        if (c.is_zero()) throw InvalidInput(kModule, "zero coefficient in diagonal form");
    return DiagonalForm{std::move(coeffs)};
}

DiagonalForm DiagonalForm::parse(const std::string& text) {
    std::vector<Rational> coeffs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            coeffs.push_back(Rational::parse(tok));
        } catch (const std::exception& e) {
            throw InvalidInput(kModule, e.what());
        }
    }
    return make(std::move(coeffs));
}

std::vector<std::int64_t> DiagonalForm::integer_coeffs() const {
    std::int64_t l = 1;
    for (const auto& c : coeffs) {
        l = std::lcm(l, c.den());
        if (l > (std::int64_t{1} << 40)) throw Unsupported(kModule, "denominators too large");
    }
    std::vector<std::int64_t> out;
    for (const auto& c : coeffs) out.push_back(c.num() * (l / c.den()));
    return out;
}

Rational DiagonalForm::evaluate(const std::vector<std::int64_t>& x) const {
    if (x.size() != coeffs.size()) throw InvalidInput(kModule, "vector length differs from form length");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) s += coeffs[i] * Rational(x[i]) * Rational(x[i]);
    return s;
}

std::string DiagonalForm::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? "," : "") + coeffs[i].str();
    return s + ">";
}

Signature signature(const DiagonalForm& f) {
    Signature s;
    for (const auto& c : f.coeffs) (c.sign() > 0 ? s.positive : s.negative)++;
    return s;
}

std::string to_string(IsotropyVerdict v) {
    switch (v) {
        case IsotropyVerdict::Isotropic: return "isotropic";
        case IsotropyVerdict::NoZeroUpTo: return "no-zero-up-to";
        case IsotropyVerdict::CertifiedAnisotropic: return "certified-anisotropic";
    }
    return "?";
}

IsotropyReport isotropy_search(const DiagonalForm& f, int height) {
    if (height < 1) throw InvalidInput(kModule, "height must be >= 1");
    const auto a = f.integer_coeffs();
    const std::size_t k = a.size();
    __int128 bound = 0;
    for (auto c : a) bound += static_cast<__int128>(c < 0 ? -c : c) * height * height;
    if (bound > std::numeric_limits<std::int64_t>::max() / 2) throw Unsupported(kModule, "search height too large for 64-bit sums");

    IsotropyReport rep;
    rep.height = height;
    rep.rule = "exhaustive-shell-search";
    rep.parameters["form"] = f.str();
    const std::size_t half = k / 2;
    auto value = [&](const std::vector<std::int64_t>& v, std::size_t offset) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += a[offset + i] * v[i] * v[i];
        return s;
    };

    for (std::int64_t h = 1; h <= height; ++h) {
        // Meet in the middle on the box [0,h]^k; keep solutions touching the shell.
        auto left = box(half, h);
        auto right = box(k - half, h);
        std::unordered_map<std::int64_t, std::vector<std::size_t>> by_value;
        for (std::size_t i = 0; i < left.size(); ++i) by_value[value(left[i], 0)].push_back(i);
        std::vector<std::int64_t> best;
        for (const auto& r : right) {
            auto it = by_value.find(-value(r, half));
            if (it == by_value.end()) continue;
            for (auto li : it->second) {
                std::vector<std::int64_t> x = left[li];
                x.insert(x.end(), r.begin(), r.end());
                if (*std::max_element(x.begin(), x.end()) != h) continue;
                if (best.empty() || x < best) best = x;
            }
        }
        if (!best.empty()) {
            rep.verdict = IsotropyVerdict::Isotropic;
            rep.witness = best;
            rep.height = static_cast<int>(h);
            rep.steps.push_back("Q" + join(best) + " = 0");
            return rep;
        }
    }
    rep.verdict = IsotropyVerdict::NoZeroUpTo;
    rep.steps.push_back("no nonzero integer vector of sup-norm <= " + std::to_string(height) + " is a zero");
    return rep;
}

IsotropyReport certify_anisotropic_family(std::int64_t p, int cross_check_height) {
    const auto form = DiagonalForm::make({1, 1, -p, -p});
    if (!is_prime(p)) throw InvalidInput(kModule, std::to_string(p) + " is not prime; descent certificate inapplicable");
    if (p % 4 != 3) {
        std::string msg = std::to_string(p) + " is not congruent to 3 mod 4; descent certificate inapplicable";
        auto search = isotropy_search(form, cross_check_height);
        if (search.verdict == IsotropyVerdict::Isotropic) msg += "; form is isotropic, witness " + join(search.witness);
        throw InvalidInput(kModule, msg);
    }
    IsotropyReport rep;
    rep.verdict = IsotropyVerdict::CertifiedAnisotropic;
    rep.rule = "sum-of-two-squares-descent";
    rep.parameters["form"] = form.str();
    rep.parameters["p"] = std::to_string(p);
    const std::int64_t euler = pow_mod(p - 1, (p - 1) / 2, p);
    if (euler != p - 1) throw CertificateFailure(kModule, "euler_criterion", "-1 is a square mod " + std::to_string(p));
    rep.parameters["euler_criterion"] = "(-1)^((p-1)/2) = -1 mod p";
    rep.steps = {
        "-1 is not a square mod " + std::to_string(p) + " (Euler criterion: (-1)^" + std::to_string((p - 1) / 2) +
            " = -1)",
        "so p | x^2 + y^2 forces p | x and p | y",
        "x1^2 + x2^2 = p(x3^2 + x4^2) gives p | x1, x2, then p^2 | p(x3^2 + x4^2), so p | x3, x4",
        "dividing by p yields a smaller solution; infinite descent leaves only zero",
    };
    auto search = isotropy_search(form, cross_check_height);
    if (search.verdict != IsotropyVerdict::NoZeroUpTo)
        throw CertificateFailure(kModule, "search_contradiction", "search found a zero " + join(search.witness));
    rep.height = cross_check_height;
    rep.steps.push_back("cross-check: exhaustive search finds no zero up to height " + std::to_string(cross_check_height));
    return rep;
}

std::vector<TitsIndex> so33_rank_one_candidates() {
    auto a3 = RootSystem::build(CartanType::A, 3);
    return {
        TitsIndex::make(a3, {{0}, {1}, {2}}, {{1}}, "inner, circled {a2}"),
        TitsIndex::make(a3, {{0, 2}, {1}}, {{0, 2}}, "outer, circled {a1,a3}"),
    };
}

Example46Report example46_pipeline(std::int64_t p, int search_height) {
    Example46Report rep;
    rep.p = p;
    rep.label = "G^p with p = " + std::to_string(p);
    rep.form = DiagonalForm::make({1, 1, 1, -1, -p, -p});
    rep.sig = signature(rep.form);

    // Hyperbolic plane <1,-1> on coordinates 3 and 4.
    rep.hyperbolic_witness = {0, 0, 1, 1, 0, 0};
    if (!rep.form.evaluate(rep.hyperbolic_witness).is_zero())
        throw CertificateFailure(kModule, "hyperbolic_plane", "witness is not isotropic");
    rep.complement = certify_anisotropic_family(p, search_height);
    rep.q_rank = 1;
    rep.notes.push_back("Q^p = <1,-1> + <1,1,-p,-p> with anisotropic complement, so the Witt index and the Q-rank are 1");

    rep.group = derive("SO", {rep.sig.positive, rep.sig.negative});
    rep.q = middle_dimension(rep.group);

    // The Levi contains a form of SO(2,2), whose diagram D2 = A1xA1 must be the anisotropic kernel.
    for (auto& idx : so33_rank_one_candidates()) {
        std::string kernel;
        for (const auto& comp : anisotropic_kernel(idx)) kernel += (kernel.empty() ? "" : "x") + comp.type;
        rep.candidates.push_back({idx, kernel, kernel == "A1xA1"});
    }
    const auto chosen = std::find_if(rep.candidates.begin(), rep.candidates.end(), [](const auto& c) { return c.selected; });
    if (chosen == rep.candidates.end() ||
        std::count_if(rep.candidates.begin(), rep.candidates.end(), [](const auto& c) { return c.selected; }) != 1)
        throw CertificateFailure(kModule, "index_selection", "no unique candidate with kernel A1xA1");

    rep.restricted = restrict_index(chosen->index);
    rep.restricted_type = rep.restricted.type_label();
    rep.minimal = standard_parabolic(rep.restricted, {});
    rep.minimal.levi_annotation = derive("SO", {2, 2});
    rep.notes.push_back("Levi annotation SO(2,2): the centralizer of the split torus contains SO(2,2), inner type gives trivial center");

    rep.bound = theorem1_bound(rep.group, rep.restricted, rep.minimal);
    rep.torsion = torsion_verdict(rep.group);
    if (rep.torsion.kind == VerdictKind::OddOpen)
        rep.torsion.note = "deficiency 1 but real rank 3: the rank-one hyperbolic result does not apply";
    return rep;
}

}  // namespace l2bs
