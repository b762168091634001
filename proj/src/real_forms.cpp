#include "l2bs/real_forms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "real_forms";

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

void need(bool ok, const std::string& what) {
    if (!ok) throw InvalidInput(kModule, what);
}

RealFormData finish(Family family, std::vector<int> params, std::string name, int dim_x, int rank_c, int rank_k) {
    RealFormData g;
    g.family = family;
    g.params = std::move(params);
    g.name = std::move(name);
    g.dim_x = dim_x;
    g.rank_c = rank_c;
    g.rank_k = rank_k;
    g.deficiency = rank_c - rank_k;
    g.f_rank = g.deficiency;
    return g;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t");
        auto e = cur.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string{} : cur.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::SL: return "SL";
        case Family::SO: return "SO";
        case Family::SU: return "SU";
        case Family::SpReal: return "Sp";
        case Family::SOStar: return "SO*";
        case Family::SUStar: return "SU*";
        case Family::SpPQ: return "Sp(p,q)";
        case Family::Complex: return "complex";
        case Family::Compact: return "compact";
        case Family::Euclidean: return "euclidean";
        case Family::Product: return "product";
    }
    return "?";
}

bool RealFormData::noncompact_nonabelian() const {
    if (family == Family::Product)
        return std::any_of(factors.begin(), factors.end(), [](const auto& f) { return f.noncompact_nonabelian(); });
    if (family == Family::Euclidean || dim_x == 0) return false;
    if (family == Family::SO && params[0] + params[1] <= 2) return false;  // SO(1,1)
    return true;
}

RealFormData derive_lie(Family family, CartanType type, int rank) {
    auto rs = RootSystem::build(type, rank);
    const int pos = static_cast<int>(rs.positive_roots().size());
    if (family == Family::Complex) {
        auto g = finish(family, {rank}, "complex(" + rs.name() + ")", rank + 2 * pos, 2 * rank, rank);
        g.cartan_type = type;
        return g;
    }
    if (family == Family::Compact) {
        auto g = finish(family, {rank}, "compact(" + rs.name() + ")", 0, rank, rank);
        g.cartan_type = type;
        return g;
    }
    throw InvalidInput(kModule, "family " + to_string(family) + " is not given by a Cartan type");
}

RealFormData derive(const std::string& family_text, const std::vector<int>& p) {
    const std::string f = lower(family_text);
    auto arity = [&](std::size_t k) {
        need(p.size() == k, family_text + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (f == "sl") {
        arity(1);
        const int n = p[0];
        need(n >= 2, "SL(n,R) needs n >= 2");
        return finish(Family::SL, p, "SL(" + std::to_string(n) + ",R)", n * (n + 1) / 2 - 1, n - 1, n / 2);
    }
    if (f == "so") {
        arity(2);
        const int a = p[0], b = p[1];
        need(a >= 0 && b >= 0 && a + b >= 2, "SO(p,q) needs p,q >= 0 and p+q >= 2");
        return finish(Family::SO, p, "SO(" + std::to_string(a) + "," + std::to_string(b) + ")", a * b, (a + b) / 2,
                      a / 2 + b / 2);
    }
    if (f == "su") {
        arity(2);
        const int a = p[0], b = p[1];
        need(a >= 0 && b >= 0 && a + b >= 2, "SU(p,q) needs p,q >= 0 and p+q >= 2");
        return finish(Family::SU, p, "SU(" + std::to_string(a) + "," + std::to_string(b) + ")", 2 * a * b, a + b - 1,
                      a + b - 1);
    }
    if (f == "sp" && p.size() == 1) {
        const int n = p[0];
        need(n >= 1, "Sp(n,R) needs n >= 1");
        return finish(Family::SpReal, p, "Sp(" + std::to_string(n) + ",R)", n * (n + 1), n, n);
    }
    if (f == "sp" || f == "sppq") {
        arity(2);
        const int a = p[0], b = p[1];
        need(a >= 0 && b >= 0 && a + b >= 1, "Sp(p,q) needs p,q >= 0 and p+q >= 1");
        return finish(Family::SpPQ, p, "Sp(" + std::to_string(a) + "," + std::to_string(b) + ")", 4 * a * b, a + b,
                      a + b);
    }
    if (f == "so*" || f == "sostar") {
        arity(1);
        const int n = p[0];
        need(n >= 2, "SO*(2n) needs n >= 2");
        return finish(Family::SOStar, p, "SO*(" + std::to_string(2 * n) + ")", n * (n - 1), n, n);
    }
    if (f == "su*" || f == "sustar") {
        arity(1);
        const int n = p[0];
        need(n >= 1, "SU*(2n) needs n >= 1");
        return finish(Family::SUStar, p, "SU*(" + std::to_string(2 * n) + ")", (n - 1) * (2 * n + 1), 2 * n - 1, n);
    }
    if (f == "euclidean" || f == "r") {
        arity(1);
        const int d = p[0];
        need(d >= 0, "euclidean(d) needs d >= 0");
        auto g = finish(Family::Euclidean, p, "euclidean(" + std::to_string(d) + ")", d, d, 0);
        g.f_rank = d;
        return g;
    }
    if (f == "compact" && p.empty()) return finish(Family::Compact, {}, "compact", 0, 0, 0);
    throw InvalidInput(kModule, "unknown real form family '" + family_text + "'");
}

RealFormData product(const std::vector<RealFormData>& factors) {
    need(!factors.empty(), "empty product");
    if (factors.size() == 1) return factors.front();
    RealFormData g;
    g.family = Family::Product;
    for (const auto& f : factors) {
        if (!g.name.empty()) g.name += " x ";
        g.name += f.name;
        g.dim_x += f.dim_x;
        g.rank_c += f.rank_c;
        g.rank_k += f.rank_k;
        g.deficiency += f.deficiency;
        g.f_rank += f.f_rank;
        if (f.family == Family::Product)
            g.factors.insert(g.factors.end(), f.factors.begin(), f.factors.end());
        else
            g.factors.push_back(f);
    }
    return g;
}

RealFormData parse_real_form(const std::string& text) {
    std::vector<RealFormData> factors;
    for (const auto& part : split(text, '+')) {
        auto tok = split(part, ',');
        need(!tok.empty() && !tok[0].empty(), "empty real form in '" + text + "'");
        const std::string f = lower(tok[0]);
        if ((f == "complex" || f == "compact") && tok.size() == 3) {
            int rank = 0;
            try {
                rank = std::stoi(tok[2]);
            } catch (const std::exception&) {
                throw InvalidInput(kModule, "bad rank in '" + part + "'");
            }
            factors.push_back(derive_lie(f == "complex" ? Family::Complex : Family::Compact, parse_cartan_type(tok[1]), rank));
            continue;
        }
        std::vector<int> params;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            try {
                std::size_t used = 0;
                params.push_back(std::stoi(tok[i], &used));
                if (used != tok[i].size()) throw std::invalid_argument(tok[i]);
            } catch (const std::exception&) {
                throw InvalidInput(kModule, "bad parameter '" + tok[i] + "' in '" + part + "'");
            }
        }
        factors.push_back(derive(tok[0], params));
    }
    return product(factors);
}

int middle_dimension(const RealFormData& g) {
    return g.dim_x / 2;
}

std::vector<RealFormData> catalog() {
    std::vector<RealFormData> out;
    for (int n = 2; n <= 10; ++n) out.push_back(derive("SL", {n}));
    for (int n = 1; n <= 5; ++n) {
        out.push_back(derive("SO", {2 * n, 1}));
        out.push_back(derive("SO", {2 * n + 1, 1}));
    }
    for (auto [a, b] : {std::pair{2, 2}, {3, 2}, {3, 3}, {4, 4}, {5, 3}, {5, 5}, {4, 3}}) out.push_back(derive("SO", {a, b}));
    for (auto [a, b] : {std::pair{1, 1}, {2, 1}, {3, 1}, {2, 2}, {3, 2}}) out.push_back(derive("SU", {a, b}));
    for (int n = 1; n <= 3; ++n) out.push_back(derive("Sp", {n}));
    for (int n = 3; n <= 4; ++n) out.push_back(derive("SO*", {n}));
    for (int n = 2; n <= 3; ++n) out.push_back(derive("SU*", {n}));
    out.push_back(derive("Sp", {1, 1}));
    out.push_back(derive("Sp", {2, 1}));
    out.push_back(derive_lie(Family::Complex, CartanType::A, 1));
    out.push_back(derive_lie(Family::Complex, CartanType::A, 2));
    out.push_back(derive_lie(Family::Complex, CartanType::B, 2));
    out.push_back(derive_lie(Family::Complex, CartanType::G, 2));
    return out;
}

}  // namespace l2bs
