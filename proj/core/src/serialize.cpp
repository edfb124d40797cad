#include "latcoh/serialize.hpp"

#include "latcoh/error.hpp"

namespace latcoh {

Json to_json(const Coords& c) {
  Json out = Json::array();
  for (Int x : c) out.push_back(x);
  return out;
}

Json to_json(const Region& r) {
  Json out;
  out["base"] = to_json(r.base);
  out["xmin"] = to_json(r.xmin);
  out["xmax"] = to_json(r.xmax);
  out["mcap"] = r.mcap;
  out["weight_cap"] = r.weight_cap ? Json(*r.weight_cap) : Json(nullptr);
  return out;
}

namespace {

Coords coords_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw RegionError(std::string("bounds: missing array '") + key + "'");
  Coords out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw RegionError(std::string("bounds: non-integer entry in '") + key + "'");
    out.push_back(v.get<Int>());
  }
  return out;
}

}  // namespace

Region region_from_json(const Json& j, Int default_mcap) {
  if (!j.is_object()) throw RegionError("bounds must be a JSON object");
  Int mcap = default_mcap;
  if (j.contains("mcap") && !j["mcap"].is_null()) mcap = j["mcap"].get<Int>();
  Region r = explicit_region(coords_field(j, "base"), coords_field(j, "xmin"), coords_field(j, "xmax"), mcap);
  if (j.contains("weight_cap") && !j["weight_cap"].is_null()) r.weight_cap = j["weight_cap"].get<Int>();
  return r;
}

Region region_from_json_text(const std::string& text, Int default_mcap) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw RegionError(std::string("bounds: ") + e.what());
  }
  return region_from_json(j, default_mcap);
}

Json to_json(const DegreePresentation& p) {
  Json towers = Json::array();
  for (Int b : p.towers) towers.push_back({{"bottom", b}});
  Json torsions = Json::array();
  for (const auto& t : p.torsions) torsions.push_back({{"bottom", t.bottom}, {"length", t.length}});
  Json out;
  out["towers"] = towers;
  out["torsions"] = torsions;
  return out;
}

Json presentation_entries(const std::string& graph_hash, const ClassResult& result) {
  Json out = Json::array();
  for (const auto& d : result.presentation.degrees) {
    Json e;
    e["graph_hash"] = graph_hash;
    e["class_index"] = result.class_index;
    e["degree"] = d.degree;
    const Json body = to_json(d);
    e["towers"] = body["towers"];
    e["torsions"] = body["torsions"];
    e["stabilized"] = result.stabilized;
    e["region"] = to_json(result.region);
    out.push_back(std::move(e));
  }
  return out;
}

Json to_json(const SesReport& r) {
  Json out;
  out["mcap"] = r.mcap;
  out["interior_half_width"] = r.interior_half_width;
  out["margin"] = r.margin;
  Json ks = Json::array();
  for (const auto& k : r.k_samples) ks.push_back(to_json(k));
  out["k_samples"] = ks;
  out["blocks"] = r.blocks;
  out["dim_domain"] = r.dim_domain;
  out["dim_ker_A"] = r.dim_ker_a;
  out["dim_im_A"] = r.dim_im_a;
  out["dim_ker_B"] = r.dim_ker_b;
  out["dim_im_B"] = r.dim_im_b;
  out["dim_targets"] = r.dim_targets;
  out["dim_D"] = r.dim_d;
  out["A_injective"] = r.a_injective;
  out["B_surjective"] = r.b_surjective;
  out["BA_zero"] = r.ba_zero;
  out["kerB_equals_imA"] = r.kerb_equals_ima;
  out["kerB_equals_D"] = r.kerb_equals_d;
  out["chain_map_checked"] = r.chain_map_checked;
  out["chain_map_A"] = r.chain_map_a;
  out["chain_map_B"] = r.chain_map_b;
  out["U_equivariant"] = r.u_equivariant;
  out["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  out["passed"] = r.passed();
  return out;
}

Json to_json(const LesReport& r) {
  Json out;
  out["mcap"] = r.mcap;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json e;
    e["level"] = l.level;
    e["gcap"] = l.gcap;
    Json rows = Json::array();
    for (std::size_t s = 0; s < l.dim_g.size(); ++s) {
      rows.push_back({{"degree", s},
                      {"dim_plus", l.dim_plus[s]},
                      {"dim_G", l.dim_g[s]},
                      {"dim_minus", l.dim_minus[s]},
                      {"rank_A", l.rank_a[s]},
                      {"rank_B", l.rank_b[s]},
                      {"rank_connecting", l.rank_connecting[s]}});
    }
    e["degrees"] = rows;
    e["BA_zero"] = l.ba_zero;
    e["exact_middle"] = l.exact_middle;
    e["exact_connecting"] = l.exact_connecting;
    e["chain_maps_ok"] = l.chain_maps_ok;
    e["window_complete"] = l.window_complete;
    e["dropped_terms"] = l.dropped_terms;
    e["exact"] = l.exact();
    levels.push_back(std::move(e));
  }
  out["levels"] = levels;
  out["failure"] = r.failure ? Json(*r.failure) : Json(nullptr);
  out["exact"] = r.exact();
  return out;
}

Json to_json(const DeltaSquaredReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["checked"] = r.checked;
  out["nonmonotone"] = r.nonmonotone;
  out["counterexample"] = r.counterexample ? Json(describe(*r.counterexample)) : Json(nullptr);
  return out;
}

}  // namespace latcoh
