#include "l2bs/torsion_ledger.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "torsion_ledger";

// n with G locally isomorphic to SO(2n+1,1), if any.
std::optional<int> odd_hyperbolic_n(const RealFormData& g) {
    switch (g.family) {
        case Family::SO: {
            int a = g.params[0], b = g.params[1];
            if (b != 1) std::swap(a, b);
            if (b == 1 && a >= 3 && a % 2 == 1) return (a - 1) / 2;
            return std::nullopt;
        }
        case Family::Complex:  // SL(2,C) ~ SO(3,1)
            if (g.cartan_type == CartanType::A && g.params[0] == 1) return 1;
            return std::nullopt;
        case Family::SUStar:  // SU*(4) ~ SO(5,1)
            if (g.params[0] == 2) return 2;
            return std::nullopt;
        default: return std::nullopt;
    }
}

TorsionVerdict simple_verdict(const RealFormData& g) {
    TorsionVerdict v;
    v.deficiency = g.deficiency;
    v.euler_char_zero = g.deficiency > 0;
    if (g.deficiency == 0) {
        v.kind = VerdictKind::NotAcyclic;
        v.witness_degree = g.dim_x / 2;
        v.citations = {"betti-nonvanishing-zero-deficiency"};
        return v;
    }
    if (g.family == Family::Euclidean) {
        v.kind = VerdictKind::Zero;
        v.citations = {"aspherical-elementary-amenable"};
        v.note = "free abelian lattice: torus quotient has vanishing L2-torsion";
        return v;
    }
    if (g.deficiency % 2 == 0) {
        v.kind = VerdictKind::Zero;
        v.citations = {"even-deficiency-vanishing"};
        return v;
    }
    if (auto n = odd_hyperbolic_n(g)) {
        v.kind = VerdictKind::HyperbolicOddProportional;
        v.hyperbolic_n = *n;
        v.constant = hyperbolic_constant(*n);
        v.citations = {"hyperbolic-proportionality"};
        if (!v.constant) v.note = "proportional to covolume; constant not tabulated for n = " + std::to_string(*n);
        return v;
    }
    v.kind = VerdictKind::OddOpen;
    v.citations = {"odd-deficiency-open"};
    v.note = "odd deficiency outside rank one: no vanishing result available";
    return v;
}

}  // namespace

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NotAcyclic: return "NotAcyclic";
        case VerdictKind::Zero: return "Zero";
        case VerdictKind::HyperbolicOddProportional: return "HyperbolicOddProportional";
        case VerdictKind::OddOpen: return "OddOpen";
    }
    return "?";
}

std::string HyperbolicConstant::str() const {
    return coefficient.str() + " * pi^-" + std::to_string(pi_power);
}

std::optional<HyperbolicConstant> hyperbolic_constant(int n) {
    switch (n) {
        case 1: return HyperbolicConstant{Rational(-1, 6), 1};
        case 2: return HyperbolicConstant{Rational(31, 45), 2};
        case 3: return HyperbolicConstant{Rational(-221, 70), 3};
        default: return std::nullopt;
    }
}

TorsionVerdict torsion_verdict(const RealFormData& g) {
    if (g.family != Family::Product) return simple_verdict(g);

    std::vector<const RealFormData*> positive;
    for (const auto& f : g.factors)
        if (f.deficiency > 0) positive.push_back(&f);

    TorsionVerdict v;
    v.deficiency = g.deficiency;
    v.euler_char_zero = g.deficiency > 0;
    if (positive.empty()) {
        v.kind = VerdictKind::NotAcyclic;
        v.witness_degree = g.dim_x / 2;
        v.citations = {"betti-nonvanishing-zero-deficiency", "kunneth"};
        return v;
    }
    if (positive.size() >= 2) {
        v.kind = VerdictKind::Zero;
        v.citations = {"product-formula-euler-characteristic", "euler-characteristic-vanishing"};
        v.note = "split off " + positive.front()->name + ": its Euler characteristic vanishes and the rest is acyclic";
        return v;
    }
    auto inner = simple_verdict(*positive.front());
    v.kind = inner.kind;
    v.hyperbolic_n = inner.hyperbolic_n;
    v.constant = inner.constant;
    v.citations = inner.citations;
    v.citations.push_back("product-formula-euler-characteristic");
    v.note = "routed through " + positive.front()->name + "; multiplied by the Euler characteristic of the remaining factors";
    if (!inner.note.empty()) v.note += "; " + inner.note;
    return v;
}

SymbolicValue SymbolicValue::unknown() {
    SymbolicValue v;
    v.known = false;
    return v;
}

SymbolicValue SymbolicValue::symbol(const std::string& name) {
    SymbolicValue v;
    v.terms[name] = Rational(1);
    return v;
}

SymbolicValue SymbolicValue::of(Rational r) {
    SymbolicValue v;
    v.constant = r;
    return v;
}

std::string SymbolicValue::str() const {
    if (!known) return "unknown";
    std::string s;
    for (const auto& [name, c] : terms) {
        if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) s += "-";
        Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1)) s += a.str() + "*";
        s += name;
    }
    if (s.empty()) return constant.str();
    if (!constant.is_zero()) s += (constant.sign() < 0 ? " - " : " + ") + (constant.sign() < 0 ? -constant : constant).str();
    return s;
}

SymbolicValue operator+(const SymbolicValue& a, const SymbolicValue& b) {
    if (!a.known || !b.known) return SymbolicValue::unknown();
    SymbolicValue r = a;
    r.constant += b.constant;
    for (const auto& [name, c] : b.terms) {
        r.terms[name] += c;
        if (r.terms[name].is_zero()) r.terms.erase(name);
    }
    return r;
}

SymbolicValue operator*(const Rational& s, const SymbolicValue& a) {
    if (!a.known) return a;
    SymbolicValue r;
    if (s.is_zero()) return r;
    r.constant = s * a.constant;
    for (const auto& [name, c] : a.terms) r.terms[name] = s * c;
    return r;
}

SymbolicValue operator-(const SymbolicValue& a, const SymbolicValue& b) {
    return a + Rational(-1) * b;
}

void StratumLedger::add(Stratum s) {
    if (s.name.empty()) throw InvalidInput(kModule, "stratum without a name");
    for (const auto& t : strata_)
        if (t.name == s.name) throw InvalidInput(kModule, "stratum '" + s.name + "' is over-determined (defined twice)");
    strata_.push_back(std::move(s));
}

void StratumLedger::add_leaf(const std::string& name, SymbolicValue value, std::string citation) {
    add({name, StratumRule::Leaf, {}, std::move(value), -1, std::move(citation)});
}

void StratumLedger::set_leaf(const std::string& name, SymbolicValue value) {
    for (auto& s : strata_) {
        if (s.name != name) continue;
        if (s.rule != StratumRule::Leaf) throw InvalidInput(kModule, "stratum '" + name + "' is not a leaf");
        s.value = std::move(value);
        return;
    }
    throw InvalidInput(kModule, "undefined stratum '" + name + "'");
}

void StratumLedger::add_pushout(const std::string& result, const std::string& x0, const std::string& x1,
                                const std::string& x2) {
    if (x0.empty() || x1.empty() || x2.empty())
        throw InvalidInput(kModule, "pushout '" + result + "' is incomplete: three inputs required");
    add({result, StratumRule::Pushout, {x0, x1, x2}, std::nullopt, -1, "pushout-additivity"});
}

void StratumLedger::add_disjoint_union(const std::string& result, const std::vector<std::string>& parts) {
    if (parts.empty()) throw InvalidInput(kModule, "disjoint union '" + result + "' has no parts");
    add({result, StratumRule::DisjointUnion, parts, std::nullopt, -1, "disjoint-union-additivity"});
}

void StratumLedger::add_half_boundary(const std::string& result, const std::string& boundary, int dimension) {
    if (dimension < 0 || dimension % 2 != 0)
        throw InvalidInput(kModule, "half-boundary rule for '" + result + "' needs an even dimension");
    add({result, StratumRule::HalfBoundary, {boundary}, std::nullopt, dimension, "half-boundary-even-dimension"});
}

std::map<std::string, Resolution> StratumLedger::propagate(std::optional<std::uint64_t> shuffle_seed) const {
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < strata_.size(); ++k) index[strata_[k].name] = k;

    std::vector<int> pending(strata_.size(), 0);
    std::vector<std::vector<std::size_t>> users(strata_.size());
    for (std::size_t k = 0; k < strata_.size(); ++k) {
        const auto& s = strata_[k];
        if (s.rule == StratumRule::Leaf && !s.value)
            throw InvalidInput(kModule, "leaf stratum '" + s.name + "' has no assigned value");
        for (const auto& in : s.inputs) {
            auto it = index.find(in);
            if (it == index.end())
                throw InvalidInput(kModule, "stratum '" + s.name + "' refers to undefined stratum '" + in + "'");
            users[it->second].push_back(k);
            ++pending[k];
        }
    }

    std::vector<std::size_t> ready;
    for (std::size_t k = 0; k < strata_.size(); ++k)
        if (pending[k] == 0) ready.push_back(k);
    std::mt19937_64 rng(shuffle_seed.value_or(0));

    std::map<std::string, Resolution> out;
    std::size_t done = 0;
    while (!ready.empty()) {
        std::size_t pick = 0;
        if (shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
        const std::size_t k = ready[pick];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
        const auto& s = strata_[k];

        Resolution r;
        auto get = [&](const std::string& n) -> const Resolution& { return out.at(n); };
        switch (s.rule) {
            case StratumRule::Leaf:
                r.value = *s.value;
                if (!r.value.known) r.blame = {s.name};
                break;
            case StratumRule::Pushout:
                r.value = get(s.inputs[1]).value + get(s.inputs[2]).value - get(s.inputs[0]).value;
                break;
            case StratumRule::DisjointUnion:
                for (const auto& in : s.inputs) r.value = r.value + get(in).value;
                break;
            case StratumRule::HalfBoundary:
                r.value = Rational(1, 2) * get(s.inputs[0]).value;
                break;
        }
        if (s.rule != StratumRule::Leaf) {
            std::set<std::string> blame;
            for (const auto& in : s.inputs) blame.insert(get(in).blame.begin(), get(in).blame.end());
            r.blame.assign(blame.begin(), blame.end());
        }
        out[s.name] = std::move(r);
        ++done;
        for (auto u : users[k])
            if (--pending[u] == 0) ready.push_back(u);
    }
    if (done != strata_.size()) {
        for (std::size_t k = 0; k < strata_.size(); ++k)
            if (pending[k] > 0) throw InvalidInput(kModule, "cycle through stratum '" + strata_[k].name + "'");
    }
    return out;
}

StratumLedger boundary_induction_ledger(int q_rank, int dim_x) {
    if (q_rank < 1) throw InvalidInput(kModule, "boundary induction needs Q-rank >= 1");
    StratumLedger ledger;
    const auto k_name = [](const char* stem, int k) { return std::string(stem) + "_" + std::to_string(k); };
    for (int k = 1; k <= q_rank; ++k) {
        ledger.add_leaf("e(P_" + std::to_string(k) + ")", SymbolicValue::zero(), "closed-boundary-component-vanishing");
        ledger.add_disjoint_union(k_name("Y", k), {"e(P_" + std::to_string(k) + ")"});
        if (k < q_rank) ledger.add_leaf(k_name("dY", k), SymbolicValue::zero(), "boundary-of-acyclic-layer");
    }
    ledger.add_disjoint_union(k_name("X", q_rank), {k_name("Y", q_rank)});
    for (int k = q_rank - 1; k >= 1; --k)
        ledger.add_pushout(k_name("X", k), k_name("dY", k), k_name("Y", k), k_name("X", k + 1));
    ledger.add_disjoint_union("boundary", {"X_1"});
    if (dim_x >= 0 && dim_x % 2 == 0) ledger.add_half_boundary("X", "boundary", dim_x);
    return ledger;
}

std::vector<CornerStratum> corner_strata(int l) {
    if (l < 0) throw InvalidInput(kModule, "split rank must be nonnegative");
    if (l > 30) throw Unsupported(kModule, "split rank too large to enumerate");
    std::vector<CornerStratum> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << l); ++code) {
        CornerStratum s;
        for (int i = 0; i < l; ++i)
            if (code >> i & 1) s.subset.push_back(i + 1);
        s.dimension = static_cast<int>(s.subset.size());
        s.contribution = s.dimension % 2 == 0 ? 1 : -1;
        out.push_back(std::move(s));
    }
    return out;
}

int corner_euler_characteristic(const std::vector<CornerStratum>& strata) {
    int sum = 0;
    for (const auto& s : strata) sum += s.contribution;
    return sum;
}

}  // namespace l2bs
