#include "l2bs/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "l2bs/error.hpp"
#include "l2bs/json_io.hpp"

namespace l2bs {
namespace {

struct Outcome {
    Json results;
    std::optional<Json> certificate;
    Json provenance = Json::object();
    std::optional<std::uint64_t> seed;
};

struct Context {
    std::string command;
    std::string digest_input;
    std::function<Outcome()> action;
};

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

RealFormData form_from_positional(const std::vector<std::string>& words) {
    if (words.empty()) throw InvalidInput("cli", "real form expected, e.g. 'SO 3 3' or 'SL,2+euclidean,1'");
    if (words.size() == 1) return parse_real_form(words[0]);
    std::string text = words[0];
    for (std::size_t i = 1; i < words.size(); ++i) text += "," + words[i];
    return parse_real_form(text);
}

std::pair<TitsIndex, Json> load_index(const std::string& path, std::string& digest) {
    auto text = read_text_file(path);
    digest += text;
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("json_io", "'" + path + "' is not valid JSON: " + e.what());
    }
    return {tits_index_from_json(j), j};
}

AbelianCWComplex load_complex(const std::string& spec, std::string& digest) {
    if (spec == "builtin:circle") return circle_complex();
    if (spec == "builtin:z2") return square_tiling_complex();
    if (spec == "builtin:flat") return flat_complex();
    if (spec == "builtin:gapped") return gapped_complex();
    auto text = read_text_file(spec);
    digest += text;
    try {
        return complex_from_json(Json::parse(text));
    } catch (const Json::parse_error& e) {
        throw InvalidInput("json_io", "'" + spec + "' is not valid JSON: " + e.what());
    }
}

void error_json(std::ostream& err, const std::string& kind, const std::string& module, const std::string& message,
                const std::string& code = {}) {
    Json e = {{"kind", kind}, {"module", module}, {"message", message}};
    if (!code.empty()) e["code"] = code;
    err << Json{{"error", e}}.dump(2) << "\n";
}

// One "path  value" line per scalar leaf.
void render_table(const Json& j, const std::string& path, std::ostream& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_table(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) render_table(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out << path << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"L2-invariants calculator for lattices in semisimple Lie groups", "l2bs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    bool human = false;
    app.add_flag("--human", human, "print the report as a flat text table instead of JSON");
    Context ctx;
    ctx.digest_input = join_args(args);

    // group describe
    auto* group = app.add_subcommand("group", "real group data")->require_subcommand(1);
    std::vector<std::string> group_words;
    auto* describe = group->add_subcommand("describe", "dimension, ranks, deficiency and L2 profile of a real form");
    describe->add_option("form", group_words, "family and parameters, e.g. SO 3 3")->required();
    describe->callback([&] {
        ctx.command = "group describe";
        ctx.action = [&] {
            auto g = form_from_positional(group_words);
            Outcome o;
            o.results = {{"real_form", to_json(g)}, {"q", middle_dimension(g)}};
            o.provenance["real_form"] = "real_forms.derive";
            o.provenance["q"] = "real_forms.middle_dimension";
            try {
                o.results["olbrich_profile"] = to_json(olbrich_profile(g.dim_x, g.deficiency));
                o.provenance["olbrich_profile"] = "ns_calculus.olbrich_profile";
            } catch (const InvalidInput&) {
            }
            o.results["torsion"] = to_json(torsion_verdict(g));
            o.provenance["torsion"] = "torsion_ledger.torsion_verdict";
            return o;
        };
    });

    // parabolic list
    auto* parabolic = app.add_subcommand("parabolic", "standard rational parabolic subgroups")->require_subcommand(1);
    std::string parabolic_index;
    auto* plist = parabolic->add_subcommand("list", "enumerate standard parabolics of a Tits index");
    plist->add_option("--index", parabolic_index, "Tits index JSON file")->required();
    plist->callback([&] {
        ctx.command = "parabolic list";
        ctx.action = [&] {
            auto [index, raw] = load_index(parabolic_index, ctx.digest_input);
            auto rrs = restrict_index(index);
            Json table = Json::array();
            for (const auto& p : enumerate_parabolics(rrs)) table.push_back(to_json(p, &index));
            Json kernel = Json::array();
            for (const auto& c : anisotropic_kernel(index)) {
                Json nodes = Json::array();
                for (int i : c.nodes) nodes.push_back(i + 1);
                kernel.push_back({{"type", c.type}, {"nodes", nodes}});
            }
            Outcome o;
            o.results = {{"index", to_json(index)}, {"restricted", to_json(rrs)}, {"anisotropic_kernel", kernel},
                         {"parabolics", table}};
            o.provenance = {{"restricted", "tits_index.restrict"},
                            {"anisotropic_kernel", "tits_index.anisotropic_kernel"},
                            {"parabolics", "parabolic.enumerate_parabolics"}};
            return o;
        };
    });

    // ns bound
    auto* ns = app.add_subcommand("ns", "Novikov-Shubin bounds")->require_subcommand(1);
    std::string ns_index, ns_levi, ns_group;
    bool ns_boundary = false;
    auto* bound = ns->add_subcommand("bound", "upper bound on the middle-degree invariant for Q-rank one");
    bound->add_option("--index", ns_index, "Tits index JSON file")->required();
    bound->add_option("--levi", ns_levi, "real form of the Levi, e.g. SO,2,2 or compact (overrides levi in the index file)");
    bound->add_option("--group", ns_group, "real form of G (overrides real_form in the index file)");
    bound->add_flag("--boundary-component", ns_boundary, "only bound alpha_q of the boundary component");
    bound->callback([&] {
        ctx.command = "ns bound";
        ctx.action = [&] {
            auto [index, raw] = load_index(ns_index, ctx.digest_input);
            std::string gtext = ns_group.empty() ? raw.value("real_form", std::string{}) : ns_group;
            if (gtext.empty()) throw InvalidInput("cli", "real form of G missing: pass --group or set real_form in the index");
            auto g = parse_real_form(gtext);
            auto rrs = restrict_index(index);
            auto pmin = standard_parabolic(rrs, {});
            std::string ltext = ns_levi.empty() ? raw.value("levi", std::string{}) : ns_levi;
            if (!ltext.empty()) pmin.levi_annotation = parse_real_form(ltext);
            auto r = ns_boundary ? boundary_component_bound(g, rrs, pmin) : theorem1_bound(g, rrs, pmin);
            Outcome o;
            o.results = to_json(r);
            o.results["statement"] = ns_boundary ? "alpha_q(e(P)) <= bound" : "tilde-alpha_q(Gamma) <= bound";
            o.results["group"] = to_json(g);
            o.certificate = to_json(r.certificate);
            o.provenance = {{"bound", ns_boundary ? "ns_calculus.boundary_component_bound" : "ns_calculus.theorem1_bound"},
                            {"q", "real_forms.middle_dimension"},
                            {"d", "parabolic.growth_degree"},
                            {"levi_deficiency", "parabolic.levi_deficiency"}};
            return o;
        };
    });

    // torsion verdict
    auto* torsion = app.add_subcommand("torsion", "L2-torsion verdicts")->require_subcommand(1);
    std::vector<std::string> torsion_words;
    auto* verdict = torsion->add_subcommand("verdict", "vanishing / proportionality verdict for a real form");
    verdict->add_option("form", torsion_words, "family and parameters, e.g. SL 6")->required();
    verdict->callback([&] {
        ctx.command = "torsion verdict";
        ctx.action = [&] {
            auto g = form_from_positional(torsion_words);
            Outcome o;
            o.results = to_json(torsion_verdict(g));
            o.results["group"] = g.name;
            o.provenance = {{"verdict", "torsion_ledger.torsion_verdict"}, {"deficiency", "real_forms.derive"}};
            return o;
        };
    });

    // corner strata
    auto* corner = app.add_subcommand("corner", "corner combinatorics")->require_subcommand(1);
    int corner_l = 0;
    auto* strata = corner->add_subcommand("strata", "strata of the closed split torus");
    strata->add_option("--l", corner_l, "split rank")->required()->check(CLI::Range(0, 30));
    strata->callback([&] {
        ctx.command = "corner strata";
        ctx.action = [&] {
            auto s = corner_strata(corner_l);
            Json rows = Json::array();
            for (const auto& c : s) rows.push_back(to_json(c));
            Outcome o;
            o.results = {{"l", corner_l}, {"count", s.size()}, {"strata", rows},
                         {"sum", corner_euler_characteristic(s)}};
            o.provenance = {{"strata", "torsion_ledger.corner_strata"},
                            {"count", "torsion_ledger.corner_strata"},
                            {"sum", "torsion_ledger.corner_euler_characteristic"}};
            return o;
        };
    });

    // density estimate
    auto* density = app.add_subcommand("density", "spectral density estimation")->require_subcommand(1);
    std::string complex_spec, table_path;
    int degree = 0, workers = 1;
    std::uint64_t samples = 100000, seed = kDefaultSeed;
    GridSpec grid_spec;
    auto* estimate = density->add_subcommand("estimate", "estimate F_p, b_p and the low-energy exponent");
    estimate->add_option("--complex", complex_spec, "complex JSON file or builtin:{circle,z2,flat,gapped}")->required();
    estimate->add_option("--degree", degree, "degree p")->required();
    estimate->add_option("--samples", samples, "number of torus samples")->check(CLI::PositiveNumber);
    estimate->add_option("--seed", seed, "seed (default " + std::to_string(kDefaultSeed) + ")");
    estimate->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
    estimate->add_option("--grid-min", grid_spec.lambda_min, "smallest lambda");
    estimate->add_option("--grid-max", grid_spec.lambda_max, "largest lambda (default: operator-norm bound)");
    estimate->add_option("--grid-per-decade", grid_spec.points_per_decade, "grid points per decade");
    estimate->add_option("--table", table_path, "also write a gnuplot table (lambda F) to this path");
    estimate->callback([&] {
        ctx.command = "density estimate";
        ctx.action = [&] {
            auto c = load_complex(complex_spec, ctx.digest_input);
            auto grid = log_grid(grid_spec, operator_norm_bound(c, degree));
            auto e = estimate_density(c, degree, grid, samples, seed, workers);
            Outcome o;
            o.seed = seed;
            o.results = {{"estimate", to_json(e)}};
            o.provenance = {{"estimate", "spectral_density.estimate_density"}};
            try {
                o.results["novikov_shubin"] = to_json(estimate_ns(e));
                o.provenance["novikov_shubin"] = "spectral_density.estimate_ns";
            } catch (const PreconditionFailed& ex) {
                o.results["novikov_shubin"] = {{"error", ex.what()}};
            }
            if (!table_path.empty()) {
                std::ofstream t(table_path);
                if (!t) throw InvalidInput("cli", "cannot write '" + table_path + "'");
                t << "# lambda F\n";
                for (std::size_t j = 0; j < e.grid.size(); ++j) t << e.grid[j] << " " << e.density[j] << "\n";
            }
            return o;
        };
    });

    // qform isotropy / pipeline
    auto* qform = app.add_subcommand("qform", "diagonal quadratic forms")->require_subcommand(1);
    std::string coeffs;
    int height = 10;
    auto* iso = qform->add_subcommand("isotropy", "bounded search for a nontrivial zero");
    iso->add_option("--coeffs", coeffs, "comma separated rationals")->required();
    iso->add_option("--height", height, "sup-norm bound")->check(CLI::PositiveNumber);
    iso->callback([&] {
        ctx.command = "qform isotropy";
        ctx.action = [&] {
            auto f = DiagonalForm::parse(coeffs);
            auto sig = signature(f);
            Outcome o;
            o.results = to_json(isotropy_search(f, height));
            o.results["signature"] = {sig.positive, sig.negative};
            o.provenance = {{"verdict", "qforms.isotropy_search"}, {"signature", "qforms.signature"}};
            return o;
        };
    });
    std::int64_t prime = 3;
    int search_height = 30;
    auto* pipe = qform->add_subcommand("pipeline", "end-to-end bound for SO(Q^p), Q^p = <1,1,1,-1,-p,-p>");
    pipe->add_option("--p", prime, "prime congruent to 3 mod 4")->required();
    pipe->add_option("--search-height", search_height, "cross-check height for the anisotropy certificate")
        ->check(CLI::PositiveNumber);
    pipe->callback([&] {
        ctx.command = "qform pipeline";
        ctx.action = [&] {
            auto r = example46_pipeline(prime, search_height);
            Outcome o;
            o.results = to_json(r);
            o.certificate = to_json(r.bound.certificate);
            o.provenance = {{"signature", "qforms.signature"},
                            {"complement_certificate", "qforms.certify_anisotropic_family"},
                            {"restricted", "tits_index.restrict"},
                            {"d_N", "parabolic.growth_degree"},
                            {"bound", "ns_calculus.theorem1_bound"},
                            {"torsion", "torsion_ledger.torsion_verdict"}};
            return o;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        error_json(err, "usage", "cli", e.what());
        return 2;
    }
    if (!ctx.action) {
        error_json(err, "usage", "cli", "no command given");
        return 2;
    }
    try {
        Outcome o = ctx.action();
        Json report = {{"command", ctx.command},
                       {"argv", args},
                       {"inputs_digest", fnv1a_hex(ctx.digest_input)},
                       {"results", o.results},
                       {"certificate", o.certificate ? *o.certificate : Json(nullptr)},
                       {"tool_version", kToolVersion},
                       {"seed", o.seed ? Json(*o.seed) : Json(nullptr)},
                       {"provenance", o.provenance}};
        if (human)
            render_table(report, "", out);
        else
            out << report.dump(2) << "\n";
        return 0;
    } catch (const CertificateFailure& e) {
        error_json(err, e.kind(), e.module(), e.what(), e.code());
        return 3;
    } catch (const Error& e) {
        error_json(err, e.kind(), e.module(), e.what());
        return 3;
    } catch (const std::exception& e) {
        error_json(err, "internal", "cli", e.what());
        return 4;
    }
}

}  // namespace l2bs
