#include "l2bs/spectral_density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <Eigen/Eigenvalues>

#include "l2bs/error.hpp"

namespace l2bs {
namespace {

constexpr const char* kModule = "spectral_density";

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix zeros(int r, int c) {
    return IntMatrix(r, std::vector<int>(c, 0));
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Additive recurrence with the generalized golden ratio of dimension d.
std::vector<double> kronecker_steps(int d) {
    double phi = 2.0;
    for (int it = 0; it < 100; ++it) phi = std::pow(1.0 + phi, 1.0 / (d + 1));
    std::vector<double> a(d);
    for (int k = 0; k < d; ++k) a[k] = std::fmod(std::pow(1.0 / phi, k + 1), 1.0);
    return a;
}

double frobenius(const IntMatrix& m) {
    double s = 0;
    for (const auto& row : m)
        for (int v : row) s += static_cast<double>(v) * v;
    return std::sqrt(s);
}

double slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t lo, std::size_t hi, double* se) {
    const double k = static_cast<double>(hi - lo);
    double mx = 0, my = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= k;
    my /= k;
    double sxx = 0, sxy = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double b = sxy / sxx;
    if (se) {
        double ssr = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double r = y[i] - my - b * (x[i] - mx);
            ssr += r * r;
        }
        *se = k > 2 ? std::sqrt(ssr / (k - 2) / sxx) : 0.0;
    }
    return b;
}

}  // namespace

void AbelianCWComplex::validate() const {
    if (deck_rank < 0) throw InvalidInput(kModule, "negative deck rank");
    if (cells.empty()) throw InvalidInput(kModule, "complex without cells");
    for (int n : cells)
        if (n < 0) throw InvalidInput(kModule, "negative cell count");
    for (const auto& [p, terms] : differentials) {
        if (p < 1 || p > top_degree()) throw InvalidInput(kModule, "differential c_" + std::to_string(p) + " out of range");
        for (const auto& t : terms) {
            if (static_cast<int>(t.exp.size()) != deck_rank)
                throw InvalidInput(kModule, "exponent length differs from deck rank in c_" + std::to_string(p));
            if (static_cast<int>(t.mat.size()) != cells[p - 1])
                throw InvalidInput(kModule, "c_" + std::to_string(p) + " needs " + std::to_string(cells[p - 1]) + " rows");
            for (const auto& row : t.mat)
                if (static_cast<int>(row.size()) != cells[p])
                    throw InvalidInput(kModule, "c_" + std::to_string(p) + " needs " + std::to_string(cells[p]) + " columns");
        }
    }
    // c_p c_{p+1} = 0 as Laurent polynomials
    for (const auto& [p, lower] : differentials) {
        auto it = differentials.find(p + 1);
        if (it == differentials.end()) continue;
        std::map<std::vector<int>, IntMatrix> conv;
        for (const auto& a : lower)
            for (const auto& b : it->second) {
                std::vector<int> e(deck_rank);
                for (int k = 0; k < deck_rank; ++k) e[k] = a.exp[k] + b.exp[k];
                auto& acc = conv.try_emplace(e, zeros(cells[p - 1], cells[p + 1])).first->second;
                for (int r = 0; r < cells[p - 1]; ++r)
                    for (int c = 0; c < cells[p + 1]; ++c)
                        for (int m = 0; m < cells[p]; ++m) acc[r][c] += a.mat[r][m] * b.mat[m][c];
            }
        for (const auto& [e, m] : conv)
            for (const auto& row : m)
                for (int v : row)
                    if (v != 0)
                        throw InvalidInput(kModule, "c_" + std::to_string(p) + " c_" + std::to_string(p + 1) + " is not zero");
    }
}

AbelianCWComplex circle_complex() {
    AbelianCWComplex c;
    c.deck_rank = 1;
    c.cells = {1, 1};
    c.differentials[1] = {{{0}, {{1}}}, {{1}, {{-1}}}};
    return c;
}

AbelianCWComplex square_tiling_complex() {
    AbelianCWComplex c;
    c.deck_rank = 2;
    c.cells = {1, 2, 1};
    c.differentials[1] = {{{0, 0}, {{1, 1}}}, {{1, 0}, {{-1, 0}}}, {{0, 1}, {{0, -1}}}};
    c.differentials[2] = {{{0, 0}, {{-1}, {1}}}, {{0, 1}, {{1}, {0}}}, {{1, 0}, {{0}, {-1}}}};
    return c;
}

AbelianCWComplex flat_complex() {
    AbelianCWComplex c;
    c.deck_rank = 1;
    c.cells = {1, 1};
    return c;
}

AbelianCWComplex gapped_complex() {
    AbelianCWComplex c;
    c.deck_rank = 1;
    c.cells = {1, 1};
    c.differentials[1] = {{{0}, {{2}}}};
    return c;
}

Eigen::MatrixXcd differential_at(const AbelianCWComplex& c, int p, const std::vector<double>& theta) {
    const int rows = c.cells_in(p - 1), cols = c.cells_in(p);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    auto it = c.differentials.find(p);
    if (it == c.differentials.end()) return m;
    for (const auto& t : it->second) {
        double phase = 0;
        for (int k = 0; k < c.deck_rank; ++k) phase += t.exp[k] * theta[k];
        const std::complex<double> z = std::polar(1.0, phase);
        for (int r = 0; r < rows; ++r)
            for (int q = 0; q < cols; ++q)
                if (t.mat[r][q] != 0) m(r, q) += static_cast<double>(t.mat[r][q]) * z;
    }
    return m;
}

Eigen::MatrixXcd symbol_at(const AbelianCWComplex& c, int p, const std::vector<double>& theta) {
    if (static_cast<int>(theta.size()) != c.deck_rank) throw InvalidInput(kModule, "theta has the wrong dimension");
    const int n = c.cells_in(p);
    Eigen::MatrixXcd delta = Eigen::MatrixXcd::Zero(n, n);
    if (n == 0) return delta;
    Eigen::MatrixXcd up = differential_at(c, p + 1, theta);
    Eigen::MatrixXcd down = differential_at(c, p, theta);
    if (up.cols() > 0) delta += up * up.adjoint();
    if (down.rows() > 0) delta += down.adjoint() * down;
    return delta;
}

double operator_norm_bound(const AbelianCWComplex& c, int p) {
    auto sum = [&](int k) {
        double s = 0;
        auto it = c.differentials.find(k);
        if (it != c.differentials.end())
            for (const auto& t : it->second) s += frobenius(t.mat);
        return s;
    };
    const double a = sum(p + 1), b = sum(p);
    return a * a + b * b;
}

std::vector<double> log_grid(const GridSpec& spec, double norm_bound) {
    const double hi = spec.lambda_max > 0 ? spec.lambda_max : norm_bound;
    if (spec.lambda_min <= 0 || spec.points_per_decade < 1)
        throw InvalidInput(kModule, "grid needs lambda_min > 0 and points per decade >= 1");
    std::vector<double> grid;
    if (hi <= spec.lambda_min) return {spec.lambda_min};
    const double step = 1.0 / spec.points_per_decade;
    const double span = std::log10(hi / spec.lambda_min);
    const int count = static_cast<int>(std::floor(span / step + 1e-9));
    for (int k = 0; k <= count; ++k) grid.push_back(spec.lambda_min * std::pow(10.0, k * step));
    if (grid.back() < hi * (1 - 1e-12)) grid.push_back(hi);
    return grid;
}

std::vector<double> isotonic(const std::vector<double>& values) {
    std::vector<double> level;
    std::vector<std::size_t> width;
    for (double v : values) {
        level.push_back(v);
        width.push_back(1);
        while (level.size() > 1 && level[level.size() - 2] > level.back()) {
            const double w1 = static_cast<double>(width[width.size() - 2]), w2 = static_cast<double>(width.back());
            const double merged = (level[level.size() - 2] * w1 + level.back() * w2) / (w1 + w2);
            width[width.size() - 2] += width.back();
            level.pop_back();
            width.pop_back();
            level.back() = merged;
        }
    }
    std::vector<double> out;
    for (std::size_t k = 0; k < level.size(); ++k) out.insert(out.end(), width[k], level[k]);
    return out;
}

DensityEstimate estimate_density(const AbelianCWComplex& c, int p, const std::vector<double>& grid,
                                 std::uint64_t samples, std::uint64_t seed, int workers) {
    c.validate();
    if (samples < 1) throw InvalidInput(kModule, "samples must be >= 1");
    if (workers < 1) throw InvalidInput(kModule, "workers must be >= 1");
    if (!std::is_sorted(grid.begin(), grid.end()) || grid.empty())
        throw InvalidInput(kModule, "grid must be nonempty and ascending");

    DensityEstimate e;
    e.degree = p;
    e.cells = c.cells_in(p);
    e.grid = grid;
    e.samples = samples;
    e.seed = seed;
    e.workers = workers;
    e.norm_bound = operator_norm_bound(c, p);
    e.density.assign(grid.size(), 0.0);
    if (e.cells == 0) return e;

    const int d = c.deck_rank;
    const auto alpha = kronecker_steps(std::max(d, 1));
    std::vector<double> shift(d);
    for (int k = 0; k < d; ++k)
        shift[k] = static_cast<double>(splitmix64(seed * 0x100000001B3ULL + static_cast<std::uint64_t>(k)) >> 11) * 0x1.0p-53;
    const double eps = 1e-10 * std::max(1.0, e.norm_bound);
    const std::size_t g = grid.size();

    struct Counts {
        std::vector<std::int64_t> below;
        std::int64_t kernel = 0;
    };
    auto run = [&](std::uint64_t begin, std::uint64_t end, Counts& out) {
        out.below.assign(g, 0);
        std::vector<double> theta(d);
        std::vector<double> eig;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
        for (std::uint64_t s = begin; s < end; ++s) {
            for (int k = 0; k < d; ++k) {
                const double u = std::fmod(shift[k] + static_cast<double>(s) * alpha[k], 1.0);
                theta[k] = 2.0 * std::numbers::pi * u;
            }
            auto delta = symbol_at(c, p, theta);
            eig.clear();
            if (e.cells == 1) {
                eig.push_back(delta(0, 0).real());
            } else {
                solver.compute(delta, Eigen::EigenvaluesOnly);
                for (int k = 0; k < e.cells; ++k) eig.push_back(solver.eigenvalues()[k]);
            }
            for (double v : eig) {
                if (v <= eps) ++out.kernel;
                // first grid point >= v gets the eigenvalue; cumulative sum follows
                auto it = std::lower_bound(grid.begin(), grid.end(), v);
                if (it != grid.end()) ++out.below[static_cast<std::size_t>(it - grid.begin())];
            }
        }
    };

    std::vector<Counts> parts(static_cast<std::size_t>(workers));
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = samples * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
        const std::uint64_t end = samples * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
        threads.emplace_back(run, begin, end, std::ref(parts[static_cast<std::size_t>(w)]));
    }
    for (auto& t : threads) t.join();

    std::vector<std::int64_t> total(g, 0);
    std::int64_t kernel = 0;
    for (const auto& part : parts) {
        for (std::size_t j = 0; j < g; ++j) total[j] += part.below[j];
        kernel += part.kernel;
    }
    const double denom = static_cast<double>(samples);
    std::int64_t running = 0;
    std::vector<double> raw(g);
    for (std::size_t j = 0; j < g; ++j) {
        running += total[j];
        raw[j] = grid[j] >= e.norm_bound ? static_cast<double>(e.cells) : static_cast<double>(running) / denom;
    }
    e.density = isotonic(raw);
    e.betti = static_cast<double>(kernel) / denom;
    return e;
}

NSEstimate estimate_ns(const DensityEstimate& e, const NSFitPolicy& policy) {
    NSEstimate out;
    const std::size_t g = e.grid.size();
    const double floor_value = policy.min_count / static_cast<double>(std::max<std::uint64_t>(e.samples, 1));
    std::vector<double> excess(g);
    for (std::size_t j = 0; j < g; ++j) excess[j] = std::max(0.0, e.density[j] - e.betti);

    // Spectral gap: nothing above the kernel, or a jump straight to a resolvable level after
    // a vanishing lowest decade.
    std::size_t first = 0;
    while (first < g && excess[first] <= 0) ++first;
    const bool lowest_decade_vanishes = g > 0 && first < g ? e.grid[first] > 10 * e.grid[0] : true;
    if (first == g || (lowest_decade_vanishes && excess[first] >= floor_value)) {
        out.infinity_plus_candidate = true;
        out.window_low = e.grid.empty() ? 0 : e.grid[0];
        out.window_high = first < g ? e.grid[first] : (e.grid.empty() ? 0 : e.grid.back());
        return out;
    }

    std::vector<std::size_t> usable;
    for (std::size_t j = 0; j < g; ++j)
        if (excess[j] >= floor_value && excess[j] > 0) usable.push_back(j);
    std::vector<std::size_t> window;
    for (std::size_t a = 0; a < usable.size(); ++a) {
        std::vector<std::size_t> w;
        for (std::size_t b = a; b < usable.size() && e.grid[usable[b]] <= 10 * e.grid[usable[a]] * (1 + 1e-12); ++b)
            w.push_back(usable[b]);
        if (static_cast<int>(w.size()) >= policy.min_points) {
            window = std::move(w);
            break;
        }
    }
    if (window.empty()) {
        throw PreconditionFailed(kModule, "window too small: " + std::to_string(usable.size()) +
                                              " usable grid points (need " + std::to_string(policy.min_points) +
                                              " within one decade with count >= " +
                                              std::to_string(static_cast<int>(policy.min_count)) + ")");
    }
    std::vector<double> x, y;
    for (auto j : window) {
        x.push_back(std::log(e.grid[j]));
        y.push_back(std::log(excess[j]));
    }
    double se = 0;
    out.exponent = slope(x, y, 0, x.size(), &se);
    out.band_low = out.exponent - 2 * se;
    out.band_high = out.exponent + 2 * se;
    out.window_low = e.grid[window.front()];
    out.window_high = e.grid[window.back()];
    out.points = static_cast<int>(window.size());
    const std::size_t half = (x.size() + 1) / 2;
    out.slope_low_half = slope(x, y, 0, half, nullptr);
    out.slope_high_half = slope(x, y, x.size() - half, x.size(), nullptr);
    out.limit_property_flag = std::abs(out.slope_low_half - out.slope_high_half) > policy.flag_threshold;
    return out;
}

}  // namespace l2bs
