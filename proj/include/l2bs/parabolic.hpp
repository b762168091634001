#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l2bs/real_forms.hpp"
#include "l2bs/tits_index.hpp"

namespace l2bs {

/// Standard rational parabolic attached to a subset I of the simple restricted roots.
struct StandardParabolic {
    std::vector<int> subset;  // I, 0-based, ascending
    std::uint64_t code = 0;   // bit i set iff simple root i is in I
    std::vector<RestrictedRoot> sigma;  // positive restricted roots outside the span of I
    std::vector<int> levels;            // parallel to sigma
    int split_rank = 0;
    int dim_n = 0;
    int growth_degree = 0;
    RestrictedRootSystem levi_system;
    std::optional<RealFormData> levi_annotation;

    bool is_minimal() const noexcept { return subset.empty(); }
    std::string describe() const;
};

StandardParabolic standard_parabolic(const RestrictedRootSystem& rrs, std::vector<int> subset);

/// All 2^l standard parabolics, ordered by subset code.
std::vector<StandardParabolic> enumerate_parabolics(const RestrictedRootSystem& rrs);

int growth_degree(const StandardParabolic& p);

/// Deficiency of the annotated Levi form; throws PreconditionFailed if no annotation.
int levi_deficiency(const StandardParabolic& p);

/// Subsystem of roots supported on `subset`, in coordinates over `subset`.
RestrictedRootSystem levi_restricted_system(const RestrictedRootSystem& rrs, const std::vector<int>& subset);

/// The parabolic of the Levi of P_J cut out by I, for I contained in J.
StandardParabolic relative_parabolic(const RestrictedRootSystem& rrs, const std::vector<int>& inner,
                                     const std::vector<int>& outer);

}  // namespace l2bs
