#include "l2bs/root_data.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "root_data";

bool valid_rank(CartanType type, int rank) {
    switch (type) {
        case CartanType::A: return rank >= 1;
        case CartanType::B: return rank >= 2;
        case CartanType::C: return rank >= 2;
        case CartanType::D: return rank >= 3;
        case CartanType::E: return rank >= 6 && rank <= 8;
        case CartanType::F: return rank == 4;
        case CartanType::G: return rank == 2;
    }
    return false;
}

// Gram matrix of the simple roots scaled so that every entry is an integer.
std::vector<std::vector<int>> gram_matrix(CartanType type, int n) {
    std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
    auto link = [&](int i, int j, int value) {
        g[i][j] = value;
        g[j][i] = value;
    };
    switch (type) {
        case CartanType::A:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case CartanType::B:  // alpha_n short
            for (int i = 0; i < n; ++i) g[i][i] = 4;
            g[n - 1][n - 1] = 2;
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
            break;
        case CartanType::C:  // alpha_n long
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            g[n - 1][n - 1] = 4;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            break;
        case CartanType::D:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case CartanType::E:
            for (int i = 0; i < n; ++i) g[i][i] = 2;
            link(0, 2, -1);
            link(1, 3, -1);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case CartanType::F:  // alpha_1, alpha_2 long
            g[0][0] = g[1][1] = 4;
            g[2][2] = g[3][3] = 2;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case CartanType::G:  // alpha_1 short
            g[0][0] = 2;
            g[1][1] = 6;
            link(0, 1, -3);
            break;
    }
    return g;
}

std::string type_name(char letter, int rank) {
    return std::string(1, letter) + std::to_string(rank);
}

}  // namespace

CartanType parse_cartan_type(const std::string& text) {
    if (text.size() == 1) {
        switch (text[0]) {
            case 'A': case 'a': return CartanType::A;
            case 'B': case 'b': return CartanType::B;
            case 'C': case 'c': return CartanType::C;
            case 'D': case 'd': return CartanType::D;
            case 'E': case 'e': return CartanType::E;
            case 'F': case 'f': return CartanType::F;
            case 'G': case 'g': return CartanType::G;
            default: break;
        }
    }
    throw InvalidInput(kModule, "unknown Cartan type '" + text + "'");
}

char to_char(CartanType type) {
    return "ABCDEFG"[static_cast<int>(type)];
}

int root_height(const RootVector& root) {
    return std::accumulate(root.begin(), root.end(), 0);
}

std::size_t classical_positive_root_count(CartanType type, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    switch (type) {
        case CartanType::A: return n * (n + 1) / 2;
        case CartanType::B:
        case CartanType::C: return n * n;
        case CartanType::D: return n * (n - 1);
        case CartanType::E: return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case CartanType::F: return 24;
        case CartanType::G: return 6;
    }
    return 0;
}

std::string classify_connected(const CartanMatrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw InvalidInput(kModule, "empty diagram");
    if (n == 1) return "A1";

    std::vector<std::vector<int>> nbrs(n);
    int edge_count = 0;
    int multiple_edges = 0;
    int max_mult = 1;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (a[i][j] == 0 && a[j][i] == 0) continue;
            if (a[i][j] == 0 || a[j][i] == 0) throw InvalidInput(kModule, "asymmetric zero pattern in Cartan matrix");
            nbrs[i].push_back(j);
            nbrs[j].push_back(i);
            ++edge_count;
            int mult = a[i][j] * a[j][i];
            if (mult > 1) ++multiple_edges;
            max_mult = std::max(max_mult, mult);
        }
    }
    if (edge_count != n - 1) throw InvalidInput(kModule, "diagram is not a tree");
    if (max_mult > 3 || multiple_edges > 1) throw InvalidInput(kModule, "diagram is not of finite type");

    if (max_mult == 3) {
        if (n != 2) throw InvalidInput(kModule, "triple bond outside G2");
        return "G2";
    }

    std::vector<int> branch;
    for (int i = 0; i < n; ++i) {
        if (nbrs[i].size() > 3) throw InvalidInput(kModule, "node of degree > 3");
        if (nbrs[i].size() == 3) branch.push_back(i);
    }

    if (max_mult == 2) {
        if (!branch.empty()) throw InvalidInput(kModule, "double bond with a branch node");
        if (n == 2) return "B2";
        // Walk the path from one end.
        int start = 0;
        while (nbrs[start].size() != 1) ++start;
        std::vector<int> path{start};
        int prev = -1;
        int cur = start;
        while (static_cast<int>(path.size()) < n) {
            int next = -1;
            for (int v : nbrs[cur]) {
                if (v != prev) {
                    next = v;
                    break;
                }
            }
            prev = cur;
            cur = next;
            path.push_back(cur);
        }
        int k = 0;
        while (a[path[k]][path[k + 1]] * a[path[k + 1]][path[k]] != 2) ++k;
        if (k != 0 && k != n - 2) {
            if (n == 4) return "F4";
            throw InvalidInput(kModule, "interior double bond outside F4");
        }
        int end = k == 0 ? path[0] : path[n - 1];
        int other = k == 0 ? path[1] : path[n - 2];
        bool end_long = std::abs(a[end][other]) > std::abs(a[other][end]);
        return type_name(end_long ? 'C' : 'B', n);
    }

    if (branch.empty()) return type_name('A', n);
    if (branch.size() > 1) throw InvalidInput(kModule, "more than one branch node");

    std::vector<int> arms;
    for (int first : nbrs[branch[0]]) {
        int len = 1;
        int prev = branch[0];
        int cur = first;
        while (nbrs[cur].size() == 2) {
            int next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return type_name('D', n);
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return type_name('E', n);
    throw InvalidInput(kModule, "branched diagram is not of finite type");
}

std::vector<DynkinComponent> decompose_diagram(const CartanMatrix& cartan, const std::vector<int>& nodes) {
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> seen(sorted.size(), false);
    std::vector<DynkinComponent> out;
    for (std::size_t s = 0; s < sorted.size(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> members;
        std::queue<std::size_t> todo;
        todo.push(s);
        seen[s] = true;
        while (!todo.empty()) {
            std::size_t u = todo.front();
            todo.pop();
            members.push_back(u);
            for (std::size_t v = 0; v < sorted.size(); ++v) {
                if (!seen[v] && cartan[sorted[u]][sorted[v]] != 0) {
                    seen[v] = true;
                    todo.push(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        CartanMatrix sub(members.size(), std::vector<int>(members.size()));
        DynkinComponent comp;
        for (std::size_t r = 0; r < members.size(); ++r) {
            comp.nodes.push_back(sorted[members[r]]);
            for (std::size_t c = 0; c < members.size(); ++c) sub[r][c] = cartan[sorted[members[r]]][sorted[members[c]]];
        }
        comp.type = classify_connected(sub);
        out.push_back(std::move(comp));
    }
    return out;
}

RootSystem RootSystem::build(CartanType type, int rank) {
    if (!valid_rank(type, rank)) {
        throw InvalidInput(kModule, std::string("invalid rank ") + std::to_string(rank) + " for type " + to_char(type));
    }
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;

    auto gram = gram_matrix(type, rank);
    rs.cartan_.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) rs.cartan_[i][j] = 2 * gram[i][j] / gram[j][j];

    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (rs.cartan_[i][j] != 0) rs.edges_.push_back({i, j, rs.cartan_[i][j] * rs.cartan_[j][i]});

    // Grow positive roots height by height using alpha-strings: beta + alpha_i is a root
    // iff p - <beta, alpha_i^vee> > 0 where p is the length of the downward string.
    std::vector<RootVector> layer;
    for (int i = 0; i < rank; ++i) {
        RootVector e(rank, 0);
        e[i] = 1;
        layer.push_back(e);
        rs.index_.emplace(e, 0);
    }
    while (!layer.empty()) {
        for (auto& r : layer) rs.positive_.push_back(r);
        std::vector<RootVector> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < rank; ++i) {
                int p = 0;
                RootVector down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!rs.index_.count(down)) break;
                    ++p;
                }
                if (p - rs.pairing(beta, i) > 0) {
                    RootVector up = beta;
                    up[i] += 1;
                    if (rs.index_.emplace(up, 0).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        layer = std::move(next);
    }
    for (std::size_t k = 0; k < rs.positive_.size(); ++k) rs.index_[rs.positive_[k]] = k;
    return rs;
}

std::string RootSystem::name() const {
    return type_name(to_char(type_), rank_);
}

int RootSystem::pairing(const RootVector& beta, int i) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += beta[j] * cartan_[j][i];
    return s;
}

bool RootSystem::is_root(const RootVector& beta) const {
    if (static_cast<int>(beta.size()) != rank_) return false;
    if (index_.count(beta)) return true;
    RootVector neg(beta.size());
    std::transform(beta.begin(), beta.end(), neg.begin(), [](int c) { return -c; });
    return index_.count(neg) != 0;
}

}  // namespace l2bs
