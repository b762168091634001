#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace l2bs {

/// One monomial z^exp with integer matrix coefficient of c_p : C_p -> C_{p-1}.
struct SymbolTerm {
    std::vector<int> exp;
    std::vector<std::vector<int>> mat;  // n_{p-1} rows, n_p columns
};

/// Finite free Z^n-CW complex given by the Fourier symbols of its differentials.
struct AbelianCWComplex {
    int deck_rank = 0;
    std::vector<int> cells;                              // n_p for p = 0..top
    std::map<int, std::vector<SymbolTerm>> differentials;  // key p >= 1

    int top_degree() const { return static_cast<int>(cells.size()) - 1; }
    int cells_in(int p) const { return p >= 0 && p <= top_degree() ? cells[p] : 0; }

    /// Shapes, exponent lengths, and c_{p} c_{p+1} = 0 by exact convolution. Throws InvalidInput.
    void validate() const;
};

/// The shipped example complexes.
AbelianCWComplex circle_complex();
AbelianCWComplex square_tiling_complex();
AbelianCWComplex flat_complex();    // zero differential
AbelianCWComplex gapped_complex();  // c_1 = 2

Eigen::MatrixXcd differential_at(const AbelianCWComplex& c, int p, const std::vector<double>& theta);
/// Delta_p(theta) = c_{p+1} c_{p+1}^* + c_p^* c_p.
Eigen::MatrixXcd symbol_at(const AbelianCWComplex& c, int p, const std::vector<double>& theta);

/// Upper bound for the operator norm of Delta_p from the Frobenius norms of the terms.
double operator_norm_bound(const AbelianCWComplex& c, int p);

struct GridSpec {
    double lambda_min = 1e-6;
    double lambda_max = 0;  // 0: operator-norm bound
    int points_per_decade = 20;
};

std::vector<double> log_grid(const GridSpec& spec, double norm_bound);

struct DensityEstimate {
    int degree = 0;
    int cells = 0;
    std::vector<double> grid;
    std::vector<double> density;  // F-hat on the grid
    double betti = 0;             // F-hat(0+)
    double norm_bound = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    int workers = 1;
};

/// Quasi-Monte-Carlo estimate of F_p. Sample k is a fixed function of (seed, k), and each
/// worker returns integer counts, so the result does not depend on the worker count.
DensityEstimate estimate_density(const AbelianCWComplex& c, int p, const std::vector<double>& grid,
                                 std::uint64_t samples, std::uint64_t seed, int workers = 1);

/// Pool-adjacent-violators pass making values nondecreasing.
std::vector<double> isotonic(const std::vector<double>& values);

struct NSEstimate {
    bool infinity_plus_candidate = false;
    double exponent = 0;
    double band_low = 0;
    double band_high = 0;
    double window_low = 0;
    double window_high = 0;
    int points = 0;
    double slope_low_half = 0;
    double slope_high_half = 0;
    bool limit_property_flag = false;
};

struct NSFitPolicy {
    double min_count = 50;  // usable if (F - b) * samples >= min_count
    int min_points = 5;
    double flag_threshold = 0.15;
};

/// Log-log slope of F - b on the lowest usable decade; throws PreconditionFailed
/// ("window too small") when no decade has enough usable points.
NSEstimate estimate_ns(const DensityEstimate& e, const NSFitPolicy& policy = {});

}  // namespace l2bs
