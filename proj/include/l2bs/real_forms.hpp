#pragma once

#include <string>
#include <vector>

#include "l2bs/root_data.hpp"

namespace l2bs {

enum class Family {
    SL,         // SL(n,R)
    SO,         // SO(p,q)
    SU,         // SU(p,q)
    SpReal,     // Sp(n,R)
    SOStar,     // SO*(2n), param n
    SUStar,     // SU*(2n), param n
    SpPQ,       // Sp(p,q)
    Complex,    // complex simple group viewed as a real group
    Compact,
    Euclidean,  // R^d
    Product,
};

std::string to_string(Family family);

/// Real reductive group data. Products carry their factors and sum the additive fields.
struct RealFormData {
    Family family = Family::Compact;
    std::vector<int> params;
    CartanType cartan_type = CartanType::A;  // complex and compact families only
    std::string name;

    int dim_x = 0;
    int rank_c = 0;
    int rank_k = 0;
    int deficiency = 0;
    int f_rank = 0;

    std::vector<RealFormData> factors;

    bool is_compact() const noexcept { return dim_x == 0; }
    /// True when some factor is noncompact and not abelian; the parity law applies to these.
    bool noncompact_nonabelian() const;
};

/// Closed-form table lookup. Family names: SL, SO, SU, Sp (one param: Sp(n,R), two: Sp(p,q)),
/// SO* / SOstar, SU* / SUstar, complex (type, rank), compact (type, rank), euclidean (dim).
RealFormData derive(const std::string& family, const std::vector<int>& params);
RealFormData derive_lie(Family family, CartanType type, int rank);

RealFormData product(const std::vector<RealFormData>& factors);

/// "SO,2,2", "complex,A,1", "SL,2+euclidean,1" ('+' separates factors).
RealFormData parse_real_form(const std::string& text);

/// q with dim X = 2q or 2q + 1.
int middle_dimension(const RealFormData& g);

/// Forms shipped with the tool; every entry is derived from the formula table.
std::vector<RealFormData> catalog();

}  // namespace l2bs
