#include "doctest.h"

#include "loopmoment/report_json.hpp"

using namespace loopmoment;
using loopmoment::report::Json;

TEST_CASE("root system serialization") {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  Json j = report::root_system_json(rs);
  CHECK(j["type"] == "A");
  CHECK(j["rank"] == 2);
  CHECK(j["normalization"] == "long_root_sq_2");
  CHECK(j["cartan"][0][1] == -1);
  CHECK(j["gram"][0][0] == "2/1");
  CHECK(j["gram"][0][1] == "-1/1");
}

TEST_CASE("cell table serialization") {
  auto rs = cartan::build_root_system(cartan::LieType::A, 1);
  Json j = report::cell_table_json(rs, affine::enumerate_cells(rs, 3));
  CHECK(j["max_length"] == 3);
  CHECK(j["cells"]["0"][0][0] == 0);
  CHECK(j["cells"]["1"].size() == 1);
  CHECK(j["total_cells"] == 4);
}

TEST_CASE("polytope serialization carries normalization and rationals") {
  auto rs = cartan::build_root_system(cartan::LieType::A, 1);
  Json j = report::polytope_json(moment::polytope_vertices(rs, 4));
  CHECK(j["normalization"] == "long_root_sq_2");
  CHECK(j["e_max"] == "4/1");
  CHECK(j["vertices"].size() == 5);
  CHECK(j["vertices"][0]["xi"][0] == 0);
  CHECK(j["vertices"][0]["E"] == "0/1");
}

TEST_CASE("convexity report serialization") {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  auto iota = lie::lattice_involution_preset(rs, "su_n_cp");
  Json j = report::convexity_report_json(rs, iota,
                                         lie::verify_convexity(rs, iota, 4));
  CHECK(j["verdict"] == "strict");
  CHECK(j["cutoff"] == "4/1");
  CHECK(j.contains("witness"));
  CHECK(j["witness_extreme"] == true);
  CHECK(j["involution"]["provenance"] == "su_n_cp");
  CHECK(j["phi_a_lattice_image"]["fixed_subset_of_all"] == true);

  auto all = lie::lattice_involution_preset(rs, "maximal_rank");
  Json k = report::convexity_report_json(rs, all,
                                         lie::verify_convexity(rs, all, 4));
  CHECK(k["verdict"] == "equal");
  CHECK(!k.contains("witness"));
  CHECK(k["vertex_count"] == k["fixed_vertex_count"]);
}

TEST_CASE("laurent loop serialization uses gaussian rational strings") {
  auto su2 = lie::make_su(2);
  auto g = laurent::root_subgroup_element(
      su2, 0, GaussRat(Rat(1, 2), Rat(-3, 4)));
  Json j = report::laurent_loop_json(g);
  CHECK(j["degree"] == 1);
  CHECK(j["coeffs"]["-1"][1][0] == "1/2-3/4 i");
  CHECK(j["coeffs"]["0"][0][0] == "1/1+0/1 i");
}

TEST_CASE("series and wrapper envelopes") {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  Json s = report::betti_series_json(betti::omega_g_series(rs, 8));
  CHECK(s["label"] == "omega_g A2");
  CHECK(s["coeffs"][4] == 2);
  Json w = report::wrap_report(Json{{"subcommand", "series"}}, s);
  CHECK(w["version"] == "0.1.0");
  CHECK(w["normalization"] == "long_root_sq_2");
  CHECK(w["config"]["subcommand"] == "series");
  // deterministic dumps
  CHECK(w.dump() == report::wrap_report(Json{{"subcommand", "series"}},
                                        report::betti_series_json(
                                            betti::omega_g_series(rs, 8)))
                        .dump());
}
