#pragma once

#include <string>

#include "json.hpp"
#include "latcoh/complex.hpp"
#include "latcoh/homology.hpp"
#include "latcoh/les.hpp"
#include "latcoh/region.hpp"
#include "latcoh/triangle.hpp"

namespace latcoh {

using Json = nlohmann::ordered_json;

Json to_json(const Coords& c);
Json to_json(const Region& r);
/// Accepts {base, xmin, xmax} with optional mcap and weight_cap. Throws RegionError.
Region region_from_json(const Json& j, Int default_mcap);
Region region_from_json_text(const std::string& text, Int default_mcap);

/// One entry per degree: {graph_hash, class_index, degree, towers, torsions, stabilized, region}.
Json presentation_entries(const std::string& graph_hash, const ClassResult& result);
Json to_json(const DegreePresentation& p);
Json to_json(const SesReport& r);
Json to_json(const LesReport& r);
Json to_json(const DeltaSquaredReport& r);

}  // namespace latcoh
