#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "l2bs/ns_calculus.hpp"
#include "l2bs/parabolic.hpp"
#include "l2bs/qforms.hpp"
#include "l2bs/real_forms.hpp"
#include "l2bs/root_data.hpp"
#include "l2bs/spectral_density.hpp"
#include "l2bs/tits_index.hpp"
#include "l2bs/torsion_ledger.hpp"

namespace l2bs {

using Json = nlohmann::json;

Json to_json(const RootSystem& rs);
Json to_json(const TitsIndex& index);
Json to_json(const RestrictedRootSystem& rrs);
Json to_json(const RealFormData& g);
Json to_json(const StandardParabolic& p, const TitsIndex* index = nullptr);
/// Integers as numbers, other rationals as "a/b", "inf", "inf+".
Json to_json(const NSValue& v);
Json to_json(const NSProfile& profile);
Json to_json(const Certificate& cert);
Json to_json(const BoundResult& r);
Json to_json(const TorsionVerdict& v);
Json to_json(const CornerStratum& s);
Json to_json(const IsotropyReport& r);
Json to_json(const Example46Report& r);
Json to_json(const DensityEstimate& e);
Json to_json(const NSEstimate& e);
Json to_json(const AbelianCWComplex& c);

/// Index file: {"base":{"type":"A","rank":3},"orbits":[[1],[2],[3]],"distinguished":[[2]],
/// "label":"...", "real_form":"SO,3,3", "levi":"SO,2,2"}; simple roots 1-based.
TitsIndex tits_index_from_json(const Json& j);
AbelianCWComplex complex_from_json(const Json& j);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace l2bs
