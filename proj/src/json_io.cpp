#include "l2bs/json_io.hpp"

#include <fstream>
#include <sstream>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "json_io";

Json one_based(const std::vector<int>& v) {
    Json out = Json::array();
    for (int i : v) out.push_back(i + 1);
    return out;
}

Json rational(const Rational& r) {
    if (r.is_integer()) return r.num();
    return r.str();
}

}  // namespace

Json to_json(const RootSystem& rs) {
    Json edges = Json::array();
    for (const auto& e : rs.adjacency()) edges.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"multiplicity", e.multiplicity}});
    return {{"type", std::string(1, to_char(rs.type()))},
            {"rank", rs.rank()},
            {"name", rs.name()},
            {"positive_roots", rs.positive_roots()},
            {"highest_root", rs.highest_root()},
            {"adjacency", edges}};
}

Json to_json(const TitsIndex& index) {
    Json orbits = Json::array(), dist = Json::array();
    for (const auto& o : index.orbits()) orbits.push_back(one_based(o));
    for (const auto& o : index.distinguished_orbits()) dist.push_back(one_based(o));
    return {{"base", {{"type", std::string(1, to_char(index.base().type()))}, {"rank", index.base().rank()}}},
            {"orbits", orbits},
            {"distinguished", dist},
            {"label", index.label()}};
}

Json to_json(const RestrictedRootSystem& rrs) {
    Json roots = Json::array();
    for (const auto& r : rrs.positive()) roots.push_back({{"coeffs", r.coeffs}, {"multiplicity", r.multiplicity}});
    Json simple = Json::array();
    for (const auto& o : rrs.simple_orbits()) simple.push_back(one_based(o));
    return {{"q_rank", rrs.q_rank()},
            {"type", rrs.type_label()},
            {"positive", roots},
            {"total_multiplicity", rrs.total_multiplicity()},
            {"simple_orbits", simple}};
}

Json to_json(const RealFormData& g) {
    Json j = {{"name", g.name},
              {"family", to_string(g.family)},
              {"params", g.params},
              {"dim_x", g.dim_x},
              {"rank_c", g.rank_c},
              {"rank_k", g.rank_k},
              {"deficiency", g.deficiency},
              {"f_rank", g.f_rank}};
    if (g.family == Family::Product) {
        Json f = Json::array();
        for (const auto& x : g.factors) f.push_back(to_json(x));
        j["factors"] = f;
    }
    return j;
}

Json to_json(const StandardParabolic& p, const TitsIndex* index) {
    Json sigma = Json::array();
    for (std::size_t k = 0; k < p.sigma.size(); ++k)
        sigma.push_back({{"coeffs", p.sigma[k].coeffs}, {"multiplicity", p.sigma[k].multiplicity}, {"level", p.levels[k]}});
    Json j = {{"subset", one_based(p.subset)},
              {"code", p.code},
              {"split_rank", p.split_rank},
              {"dim_N", p.dim_n},
              {"d", p.growth_degree},
              {"sigma", sigma},
              {"levi_restricted_type", p.levi_system.type_label()}};
    if (index) {
        // absolute Levi diagram: anisotropic kernel plus the orbits lying over I
        std::vector<int> nodes = index->anisotropic_nodes();
        const auto dist = index->distinguished_orbits();
        for (int i : p.subset) nodes.insert(nodes.end(), dist[i].begin(), dist[i].end());
        Json comps = Json::array();
        for (const auto& c : decompose_diagram(index->base().cartan(), nodes))
            comps.push_back({{"type", c.type}, {"nodes", one_based(c.nodes)}});
        j["levi_components"] = comps;
    }
    if (p.levi_annotation) j["levi_annotation"] = to_json(*p.levi_annotation);
    return j;
}

Json to_json(const NSValue& v) {
    if (v.is_finite()) return rational(v.value());
    return v.str();
}

Json to_json(const NSProfile& profile) {
    Json alpha = Json::object();
    for (const auto& [p, e] : profile.alpha) {
        alpha[std::to_string(p)] = {{"value", to_json(e.value)}, {"upper_bound", e.upper_bound}, {"positive", e.positive}};
    }
    return {{"n", profile.n}, {"betti_nonzero", profile.betti_nonzero}, {"alpha", alpha}, {"default", "inf+"}};
}

Json to_json(const Certificate& cert) {
    Json steps = Json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"claim", s.claim}, {"rule", s.rule}, {"citation", s.citation}, {"inputs", s.inputs}});
    return steps;
}

Json to_json(const BoundResult& r) {
    return {{"bound", to_json(r.bound)},
            {"q", r.q},
            {"dim_x", r.n},
            {"dim_N", r.dim_n},
            {"dim_XP", r.dim_xp},
            {"d", r.growth},
            {"levi_deficiency", r.levi_deficiency},
            {"levi_f_rank", r.levi_f_rank},
            {"branch", r.branch},
            {"notes", r.certificate.notes}};
}

Json to_json(const TorsionVerdict& v) {
    Json j = {{"verdict", to_string(v.kind)},
              {"deficiency", v.deficiency},
              {"euler_char_zero", v.euler_char_zero},
              {"citations", v.citations}};
    if (v.witness_degree) j["witness_degree"] = *v.witness_degree;
    if (v.hyperbolic_n) j["hyperbolic_n"] = *v.hyperbolic_n;
    if (v.constant)
        j["constant"] = {{"coefficient", v.constant->coefficient.str()},
                         {"pi_power", -v.constant->pi_power},
                         {"text", v.constant->str()}};
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

Json to_json(const CornerStratum& s) {
    return {{"subset", s.subset}, {"dimension", s.dimension}, {"contribution", s.contribution}};
}

Json to_json(const IsotropyReport& r) {
    Json j = {{"verdict", to_string(r.verdict)}, {"height", r.height}, {"rule", r.rule}, {"parameters", r.parameters},
              {"steps", r.steps}};
    if (r.verdict == IsotropyVerdict::Isotropic) j["witness"] = r.witness;
    return j;
}

Json to_json(const Example46Report& r) {
    Json cands = Json::array();
    for (const auto& c : r.candidates)
        cands.push_back({{"index", to_json(c.index)}, {"anisotropic_kernel", c.kernel_type}, {"selected", c.selected}});
    Json invariant = {{"signature", {r.sig.positive, r.sig.negative}},
                      {"real_form", to_json(r.group)},
                      {"deficiency", r.group.deficiency},
                      {"dim_x", r.group.dim_x},
                      {"q", r.q},
                      {"q_rank", r.q_rank},
                      {"hyperbolic_witness", r.hyperbolic_witness},
                      {"tits_candidates", cands},
                      {"restricted", to_json(r.restricted)},
                      {"restricted_type", r.restricted_type},
                      {"multiplicity", r.restricted.positive().empty() ? 0 : r.restricted.positive().front().multiplicity},
                      {"dim_N", r.minimal.dim_n},
                      {"d_N", r.minimal.growth_degree},
                      {"levi_deficiency", r.bound.levi_deficiency},
                      {"bound", to_json(r.bound.bound)},
                      {"bound_detail", to_json(r.bound)},
                      {"torsion", to_json(r.torsion)},
                      {"notes", r.notes}};
    return {{"p", r.p},
            {"label", r.label},
            {"form", r.form.str()},
            {"complement_certificate", to_json(r.complement)},
            {"invariant", invariant}};
}

Json to_json(const DensityEstimate& e) {
    return {{"degree", e.degree},   {"cells", e.cells}, {"grid", e.grid},       {"density", e.density},
            {"betti", e.betti},     {"norm_bound", e.norm_bound}, {"samples", e.samples}, {"seed", e.seed},
            {"workers", e.workers}};
}

Json to_json(const NSEstimate& e) {
    if (e.infinity_plus_candidate)
        return {{"value", "inf+"}, {"infinity_plus_candidate", true}, {"window", {e.window_low, e.window_high}}};
    return {{"value", e.exponent},
            {"infinity_plus_candidate", false},
            {"band", {e.band_low, e.band_high}},
            {"window", {e.window_low, e.window_high}},
            {"points", e.points},
            {"half_window_slopes", {e.slope_low_half, e.slope_high_half}},
            {"limit_property_flag", e.limit_property_flag}};
}

Json to_json(const AbelianCWComplex& c) {
    Json diffs = Json::object();
    for (const auto& [p, terms] : c.differentials) {
        Json t = Json::array();
        for (const auto& term : terms) t.push_back({{"exp", term.exp}, {"mat", term.mat}});
        diffs[std::to_string(p)] = t;
    }
    return {{"deck_rank", c.deck_rank}, {"cells", c.cells}, {"differentials", diffs}};
}

TitsIndex tits_index_from_json(const Json& j) {
    try {
        const auto& base = j.at("base");
        auto rs = RootSystem::build(parse_cartan_type(base.at("type").get<std::string>()), base.at("rank").get<int>());
        auto shift = [](std::vector<std::vector<int>> v) {
            for (auto& o : v)
                for (int& i : o) --i;
            return v;
        };
        auto orbits = shift(j.at("orbits").get<std::vector<std::vector<int>>>());
        auto dist = shift(j.at("distinguished").get<std::vector<std::vector<int>>>());
        return TitsIndex::make(std::move(rs), std::move(orbits), dist, j.value("label", std::string{}));
    } catch (const Json::exception& e) {
        throw InvalidInput(kModule, std::string("malformed Tits index: ") + e.what());
    }
}

AbelianCWComplex complex_from_json(const Json& j) {
    try {
        AbelianCWComplex c;
        c.deck_rank = j.at("deck_rank").get<int>();
        c.cells = j.at("cells").get<std::vector<int>>();
        if (j.contains("differentials")) {
            for (const auto& [key, terms] : j.at("differentials").items()) {
                std::vector<SymbolTerm> list;
                for (const auto& t : terms)
                    list.push_back({t.at("exp").get<std::vector<int>>(), t.at("mat").get<std::vector<std::vector<int>>>()});
                c.differentials[std::stoi(key)] = std::move(list);
            }
        }
        c.validate();
        return c;
    } catch (const Json::exception& e) {
        throw InvalidInput(kModule, std::string("malformed complex: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw InvalidInput(kModule, "malformed complex: differential keys must be integers");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(kModule, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json_file(const std::string& path) {
    try {
        return Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw InvalidInput(kModule, "'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace l2bs
