#pragma once
// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's algorithms.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

// Doubled Gram matrix of the simple roots, Bourbaki numbering, 1-based edges.
inline std::vector<Vec> gram(char type, int n) {
    std::vector<Vec> g(n, Vec(n, 0));
    auto edge = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
    auto len = [&](int i, int v) { g[i - 1][i - 1] = v; };
    switch (type) {
        case 'A':
            for (int i = 1; i <= n; ++i) len(i, 2);
            for (int i = 1; i < n; ++i) edge(i, i + 1, -1);
            break;
        case 'B':
            for (int i = 1; i < n; ++i) len(i, 4);
            len(n, 2);
            for (int i = 1; i < n; ++i) edge(i, i + 1, -2);
            break;
        case 'C':
            for (int i = 1; i < n; ++i) len(i, 2);
            len(n, 4);
            for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, -1);
            if (n >= 2) edge(n - 1, n, -2);
            break;
        case 'D':
            for (int i = 1; i <= n; ++i) len(i, 2);
            for (int i = 1; i + 2 < n; ++i) edge(i, i + 1, -1);
            edge(n - 2, n - 1, -1);
            edge(n - 2, n, -1);
            break;
        case 'E':
            for (int i = 1; i <= n; ++i) len(i, 2);
            edge(1, 3, -1);
            edge(2, 4, -1);
            for (int i = 3; i < n; ++i) edge(i, i + 1, -1);
            break;
        case 'F':
            len(1, 4), len(2, 4), len(3, 2), len(4, 2);
            edge(1, 2, -2), edge(2, 3, -2), edge(3, 4, -1);
            break;
        case 'G':
            len(1, 2), len(2, 6);
            edge(1, 2, -3);
            break;
    }
    return g;
}

// Positive roots as the closure of the simple roots under simple reflections.
inline std::set<Vec> positive_roots(char type, int n) {
    const auto g = gram(type, n);
    auto form = [&](const Vec& a, int i) {
        int s = 0;
        for (int k = 0; k < n; ++k) s += a[k] * g[k][i];
        return s;
    };
    std::set<Vec> all;
    std::vector<Vec> todo;
    for (int i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        todo.push_back(e);
    }
    while (!todo.empty()) {
        Vec b = todo.back();
        todo.pop_back();
        if (!all.insert(b).second) continue;
        for (int i = 0; i < n; ++i) {
            Vec r = b;
            r[i] -= 2 * form(b, i) / g[i][i];
            todo.push_back(r);
        }
    }
    std::set<Vec> pos;
    for (const auto& r : all)
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.insert(r);
    return pos;
}

// Generators of the diagram automorphism group, as permutations of 0..n-1.
inline std::vector<Vec> automorphism_generators(char type, int n) {
    std::vector<Vec> gens;
    Vec id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    if (type == 'A' && n >= 2) {
        Vec f(n);
        for (int i = 0; i < n; ++i) f[i] = n - 1 - i;
        gens.push_back(f);
    }
    if (type == 'D' && n >= 4) {
        Vec s = id;
        std::swap(s[n - 2], s[n - 1]);
        gens.push_back(s);
        if (n == 4) gens.push_back({2, 1, 3, 0});  // 1 -> 3 -> 4 -> 1
    }
    if (type == 'E' && n == 6) gens.push_back({5, 1, 4, 3, 2, 0});
    return gens;
}

inline std::vector<Vec> orbits_of(int n, const std::vector<Vec>& gens) {
    Vec parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 0; i < n; ++i) parent[find(i)] = find(g[i]);
    std::map<int, Vec> by_root;
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::vector<Vec> out;
    for (auto& [r, o] : by_root) out.push_back(o);
    std::sort(out.begin(), out.end());
    return out;
}

// Per-root restriction: orbit sums over the distinguished orbits, zero vectors dropped.
inline std::map<Vec, int> restrict_brute(char type, int n, const std::vector<Vec>& distinguished) {
    std::map<Vec, int> out;
    for (const auto& r : positive_roots(type, n)) {
        Vec v;
        bool zero = true;
        for (const auto& o : distinguished) {
            int s = 0;
            for (int i : o) s += r[i];
            v.push_back(s);
            zero = zero && s == 0;
        }
        if (!zero) ++out[v];
    }
    return out;
}

// Number of positive roots supported on the given nodes.
inline int roots_supported_on(char type, int n, const Vec& nodes) {
    int count = 0;
    for (const auto& r : positive_roots(type, n)) {
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (r[i] != 0 && std::find(nodes.begin(), nodes.end(), i) == nodes.end()) ok = false;
        count += ok;
    }
    return count;
}

struct RandomIndex {
    char type;
    int rank;
    std::vector<Vec> orbits;
    std::vector<Vec> distinguished;
};

inline RandomIndex random_index(std::mt19937_64& rng) {
    static const std::vector<std::pair<char, int>> types = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'B', 6},
        {'C', 3}, {'C', 4}, {'C', 5}, {'C', 6}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'F', 4}, {'G', 2}};
    auto [t, n] = types[rng() % types.size()];
    std::vector<Vec> gens;
    for (const auto& g : automorphism_generators(t, n))
        if (rng() % 2) gens.push_back(g);
    RandomIndex idx{t, n, orbits_of(n, gens), {}};
    while (idx.distinguished.empty())
        for (const auto& o : idx.orbits)
            if (rng() % 2) idx.distinguished.push_back(o);
    return idx;
}

// Novikov-Shubin values as (tier, num, den) with tier 0 finite, 1 inf, 2 inf+.
struct NS {
    int tier = 0;
    long num = 0;
    long den = 1;
};

inline bool less(const NS& a, const NS& b) {
    if (a.tier != b.tier) return a.tier < b.tier;
    if (a.tier != 0) return false;
    return a.num * b.den < b.num * a.den;
}

inline bool same(const NS& a, const NS& b) {
    return !less(a, b) && !less(b, a);
}

inline NS add(const NS& a, const NS& b) {
    if (a.tier == 0 && b.tier == 0) return {0, a.num * b.den + b.num * a.den, a.den * b.den};
    return {std::max(a.tier, b.tier), 0, 1};
}

inline NS min(const NS& a, const NS& b) {
    return less(b, a) ? b : a;
}

struct Profile {
    std::set<int> betti;
    std::map<int, NS> alpha;  // absent: inf+
    NS at(int p) const {
        auto it = alpha.find(p);
        return it == alpha.end() ? NS{2, 0, 1} : it->second;
    }
};

// Minimum over the four sets of the product formula.
inline NS product(const Profile& a, const Profile& b, int q) {
    std::vector<NS> all;
    for (int i = 0; i <= q - 1; ++i) all.push_back(add(a.at(i + 1), b.at(q - i)));
    for (int i = 1; i <= q - 1; ++i) all.push_back(add(a.at(i), b.at(q - i)));
    for (int i = 0; i <= q - 1; ++i)
        if (a.betti.count(i)) all.push_back(b.at(q - i));
    for (int i = 1; i <= q; ++i)
        if (b.betti.count(q - i)) all.push_back(a.at(i));
    NS best{2, 0, 1};
    for (const auto& v : all) best = min(best, v);
    return best;
}

// Spectral density of the circle Laplacian 2 - 2 cos(theta).
inline double circle_density(double lambda) {
    if (lambda <= 0) return 0;
    if (lambda >= 4) return 1;
    return std::acos(1 - lambda / 2) / std::numbers::pi;
}

// Spectral density of the square-lattice Laplacian in degree 0, by quadrature over theta_2.
inline double z2_density(double lambda, int nodes = 4000) {
    double s = 0;
    for (int k = 0; k < nodes; ++k) {
        double t = std::numbers::pi * (k + 0.5) / nodes;
        s += circle_density(lambda - (2 - 2 * std::cos(t)));
    }
    return s / nodes;
}

}  // namespace oracle
