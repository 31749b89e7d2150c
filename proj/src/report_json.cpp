#include "loopmoment/report_json.hpp"

#include "loopmoment/version.hpp"

namespace loopmoment::report {

namespace {

Json rat_array(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_to_string(x));
  return a;
}

Json int_array(const IntVec& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

Json moment_point_json(const moment::MomentPoint& p) {
  Json j;
  if (p.coroot) j["xi"] = int_array(*p.coroot);
  j["xi_ambient"] = rat_array(p.xi);
  j["E"] = rat_to_string(p.energy);
  return j;
}

}  // namespace

Json root_system_json(const cartan::RootSystem& rs) {
  Json j;
  j["type"] = std::string(1, static_cast<char>(rs.type));
  j["rank"] = rs.rank;
  j["normalization"] = kNormalizationTag;
  j["cartan"] = Json::array();
  for (const auto& row : rs.cartan) j["cartan"].push_back(row);
  j["gram"] = Json::array();
  for (int i = 0; i < rs.rank; ++i) {
    Json row = Json::array();
    for (int k = 0; k < rs.rank; ++k)
      row.push_back(rat_to_string(rs.gram.at(i, k)));
    j["gram"].push_back(row);
  }
  j["simple_root_len2"] = rat_array(rs.simple_len2);
  j["positive_roots"] = Json::array();
  for (const IntVec& b : rs.positive_roots)
    j["positive_roots"].push_back(int_array(b));
  j["highest_root"] = int_array(rs.highest_root);
  j["highest_root_coroot"] = int_array(rs.highest_root_coroot);
  return j;
}

Json cell_table_json(const cartan::RootSystem& rs,
                     const affine::CellTable& table) {
  Json cells;
  for (int k = 0; k <= table.max_length; ++k) {
    Json shell = Json::array();
    for (const IntVec& m : table.by_length[k]) shell.push_back(int_array(m));
    cells[std::to_string(k)] = shell;
  }
  Json j;
  j["root_system"] = rs.label();
  j["max_length"] = table.max_length;
  j["cells"] = cells;
  j["total_cells"] = table.total_cells();
  return j;
}

Json polytope_json(const moment::MomentPolytope& poly) {
  Json j;
  j["normalization"] = kNormalizationTag;
  j["root_system"] = poly.root_system.label();
  j["e_max"] = rat_to_string(poly.energy_cutoff);
  j["vertices"] = Json::array();
  for (const auto& v : poly.vertices)
    j["vertices"].push_back(moment_point_json(v));
  return j;
}

Json betti_series_json(const betti::BettiSeries& s) {
  Json j;
  j["label"] = s.label;
  j["max_degree"] = s.max_degree;
  j["coeffs"] = s.coeffs;
  return j;
}

Json compare_report_json(const betti::CompareReport& r) {
  Json j;
  j["equal"] = r.equal;
  j["compared_to_degree"] = r.compared_to_degree;
  if (!r.equal) {
    j["first_discrepancy"] = {{"degree", r.first_discrepancy_degree},
                              {"a", r.a_value},
                              {"b", r.b_value}};
  }
  return j;
}

Json convexity_report_json(const cartan::RootSystem& rs,
                           const lie::LatticeInvolution& iota,
                           const lie::ConvexityReport& rep) {
  Json j;
  j["normalization"] = kNormalizationTag;
  j["root_system"] = rs.label();
  j["involution"] = Json::object();
  j["involution"]["provenance"] = iota.provenance;
  j["involution"]["matrix"] = Json::array();
  for (int i = 0; i < iota.matrix.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < iota.matrix.cols; ++k)
      row.push_back(iota.matrix.at(i, k));
    j["involution"]["matrix"].push_back(row);
  }
  j["involution"]["minus_one_basis"] = Json::array();
  for (const IntVec& b : iota.minus_one_basis)
    j["involution"]["minus_one_basis"].push_back(int_array(b));
  j["cutoff"] = rat_to_string(rep.cutoff);
  j["verdict"] =
      rep.verdict == lie::ConvexityReport::Verdict::equal ? "equal" : "strict";
  j["vertex_count"] = rep.all_vertices.size();
  j["fixed_vertex_count"] = rep.fixed_vertices.size();
  if (rep.witness) {
    j["witness"] = int_array(*rep.witness);
    j["witness_extreme"] = rep.witness_extreme;
  }
  j["fixed_vertices"] = Json::array();
  for (const auto& v : rep.fixed_vertices)
    j["fixed_vertices"].push_back(moment_point_json(v));
  j["all_vertices"] = Json::array();
  for (const auto& v : rep.all_vertices)
    j["all_vertices"].push_back(moment_point_json(v));
  // the vertex-level verdict relies on convexity of the fixed-set image,
  // which is imported, not recomputed
  j["assumed"] = "convexity of the fixed-set moment image";
  Json phi_a;
  auto pts = [](const std::vector<std::pair<RatVec, Rat>>& v) {
    Json a = Json::array();
    for (const auto& [x, e] : v)
      a.push_back({{"pr_a", rat_array(x)}, {"E", rat_to_string(e)}});
    return a;
  };
  phi_a["all_points"] = pts(rep.phi_a.all_points);
  phi_a["fixed_points"] = pts(rep.phi_a.fixed_points);
  phi_a["fixed_subset_of_all"] = rep.phi_a.fixed_subset_of_all;
  phi_a["all_subset_of_fixed"] = rep.phi_a.all_subset_of_fixed;
  j["phi_a_lattice_image"] = phi_a;
  return j;
}

Json involution_check_json(const lie::LieInvolution& inv,
                           const lie::InvolutionCheckReport& rep) {
  Json j;
  j["involution"] = inv.label;
  j["recipe"] = inv.theta.label;
  j["algebra_dim"] = inv.realization.basis.size();
  j["torus_rank"] = inv.adapted_torus.size();
  j["ok"] = rep.ok;
  j["violations"] = rep.violations;
  return j;
}

Json laurent_loop_json(const laurent::LaurentLoop& g) {
  Json j;
  j["group_tag"] = g.group_tag;
  j["degree"] = g.degree();
  Json coeffs;
  for (const auto& [p, a] : g.coeffs) {
    Json mat = Json::array();
    for (int r = 0; r < a.rows; ++r) {
      Json row = Json::array();
      for (int c = 0; c < a.cols; ++c)
        row.push_back(gauss_to_string(a.at(r, c)));
      mat.push_back(row);
    }
    coeffs[std::to_string(p)] = mat;
  }
  j["coeffs"] = coeffs;
  return j;
}

Json wrap_report(Json config, Json payload) {
  Json j;
  j["version"] = kVersion;
  j["normalization"] = kNormalizationTag;
  j["config"] = std::move(config);
  j["report"] = std::move(payload);
  return j;
}

}  // namespace loopmoment::report
