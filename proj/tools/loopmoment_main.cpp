// Command-line surface of the library: every subcommand writes a
// machine-readable report that embeds its resolved configuration, and
// --expect flags turn the verification subcommands into exit-code checks.

#include "loopmoment/report_json.hpp"
#include "loopmoment/loops.hpp"
#include "loopmoment/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

namespace lm = loopmoment;
using lm::report::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerificationFailed = 2;

struct CommonOpts {
  std::string type = "A";
  int rank = 1;
  std::string out;
};

void add_root_system_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--type", opts.type, "Lie type: A, B, C, D, E, F or G")
      ->check(CLI::IsMember({"A", "B", "C", "D", "E", "F", "G"}));
  cmd->add_option("--rank", opts.rank, "rank of the root system")->required();
}

lm::cartan::RootSystem resolve_rs(const CommonOpts& opts) {
  return lm::cartan::build_root_system(
      lm::cartan::lie_type_from_char(opts.type[0]), opts.rank);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) lm::fail("cannot open output file " + out_path);
  f << text << "\n";
}

void emit_json(const Json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

lm::lie::LatticeInvolution resolve_involution(
    const lm::cartan::RootSystem& rs, const std::string& preset,
    const std::string& file) {
  if (!preset.empty() && !file.empty())
    lm::fail("give either --involution or --involution-file, not both");
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) lm::fail("cannot read involution file " + file);
    Json j = Json::parse(f, nullptr, true);
    if (!j.contains("matrix")) lm::fail("involution file lacks \"matrix\"");
    auto rows = j["matrix"];
    lm::IntMat m(static_cast<int>(rows.size()),
                 rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
      for (int k = 0; k < m.cols; ++k)
        m.at(i, k) = rows[i][k].get<long long>();
    return lm::lie::make_lattice_involution(rs, m, "file:" + file);
  }
  return lm::lie::lattice_involution_preset(
      rs, preset.empty() ? "maximal_rank" : preset);
}

int cmd_polytope(const CommonOpts& opts, const std::string& emax) {
  auto rs = resolve_rs(opts);
  auto poly = lm::moment::polytope_vertices(rs, lm::rat_from_string(emax));
  Json config{{"subcommand", "polytope"},
              {"type", opts.type},
              {"rank", opts.rank},
              {"emax", emax}};
  emit_json(lm::report::wrap_report(config, lm::report::polytope_json(poly)),
            opts.out);
  return kExitOk;
}

int cmd_cells(const CommonOpts& opts, int max_length) {
  auto rs = resolve_rs(opts);
  auto table = lm::affine::enumerate_cells(rs, max_length);
  Json config{{"subcommand", "cells"},
              {"type", opts.type},
              {"rank", opts.rank},
              {"max_length", max_length}};
  emit_json(
      lm::report::wrap_report(config, lm::report::cell_table_json(rs, table)),
      opts.out);
  return kExitOk;
}

int cmd_series(const CommonOpts& opts, int max_degree) {
  auto rs = resolve_rs(opts);
  auto series = lm::betti::omega_g_series(rs, max_degree);
  Json config{{"subcommand", "series"},
              {"type", opts.type},
              {"rank", opts.rank},
              {"max_degree", max_degree}};
  emit_json(lm::report::wrap_report(config,
                                    lm::report::betti_series_json(series)),
            opts.out);
  return kExitOk;
}

int cmd_verify_convexity(const CommonOpts& opts, const std::string& preset,
                         const std::string& file, const std::string& emax,
                         const std::string& expect) {
  auto rs = resolve_rs(opts);
  auto iota = resolve_involution(rs, preset, file);
  auto rep = lm::lie::verify_convexity(rs, iota, lm::rat_from_string(emax));
  std::string verdict =
      rep.verdict == lm::lie::ConvexityReport::Verdict::equal ? "equal"
                                                              : "strict";
  Json config{{"subcommand", "verify-convexity"},
              {"type", opts.type},
              {"rank", opts.rank},
              {"involution", preset.empty() ? (file.empty() ? "maximal_rank"
                                                            : "file")
                                            : preset},
              {"emax", emax},
              {"expect", expect}};
  emit_json(lm::report::wrap_report(
                config, lm::report::convexity_report_json(rs, iota, rep)),
            opts.out);
  if (!expect.empty() && expect != verdict) {
    std::cerr << "verify-convexity: verdict " << verdict << ", expected "
              << expect << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_verify_betti(const CommonOpts& opts, const std::string& against,
                     int n, int max_degree, const std::string& expect) {
  auto rs = resolve_rs(opts);
  lm::betti::BettiSeries lhs, rhs;
  if (against == "cp") {
    lhs = lm::betti::halve(lm::betti::omega_g_series(rs, 2 * max_degree));
    rhs = lm::betti::cp_loop_series(n, max_degree);
  } else if (against == "su") {
    lhs = lm::betti::omega_g_series(rs, max_degree);
    rhs = lm::betti::su_closed_form(n, max_degree);
  } else {
    lm::fail("--against must be cp or su");
  }
  auto cmp = lm::betti::compare(lhs, rhs, max_degree);
  Json config{{"subcommand", "verify-betti"}, {"type", opts.type},
              {"rank", opts.rank},           {"against", against},
              {"n", n},                      {"max_degree", max_degree},
              {"expect", expect}};
  Json payload;
  payload["lhs"] = lm::report::betti_series_json(lhs);
  payload["rhs"] = lm::report::betti_series_json(rhs);
  payload["comparison"] = lm::report::compare_report_json(cmp);
  emit_json(lm::report::wrap_report(config, payload), opts.out);

  if (expect.empty()) return kExitOk;
  bool pass;
  if (expect == "equal") {
    pass = cmp.equal;
  } else if (expect.rfind("discrepancy@", 0) == 0) {
    int degree = std::stoi(expect.substr(std::string("discrepancy@").size()));
    pass = !cmp.equal && cmp.first_discrepancy_degree == degree;
  } else {
    lm::fail("--expect must be 'equal' or 'discrepancy@<degree>'");
  }
  if (!pass) {
    std::cerr << "verify-betti: expectation '" << expect << "' not met\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_involution_check(const std::string& family, int n,
                         const std::string& preset, const std::string& out) {
  lm::lie::LieInvolution inv;
  if (preset == "maximal_rank")
    inv = lm::lie::maximal_rank_involution(family, n);
  else if (preset == "su_n_cp") {
    if (family != "su") lm::fail("su_n_cp preset requires --family su");
    inv = lm::lie::cp_involution(n);
  } else {
    lm::fail("unknown preset '" + preset + "'");
  }
  auto rep = lm::lie::check_lie_involution(inv);
  Json config{{"subcommand", "involution-check"},
              {"family", family},
              {"n", n},
              {"preset", preset}};
  emit_json(lm::report::wrap_report(
                config, lm::report::involution_check_json(inv, rep)),
            out);
  return rep.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_loop_residuals(const std::string& family, int n, int samples,
                       int loops, uint64_t seed, int rotations,
                       int torus_elements, const std::string& out) {
  if (family != "su") lm::fail("loop residual sweeps support --family su");
  auto realization = lm::loops::numeric_realization(lm::lie::make_su(n));
  auto sigma = lm::loops::numeric_sigma(
      lm::lie::maximal_rank_involution("su", n).theta);
  auto rows = lm::loops::residual_sweep(realization, sigma, loops, samples,
                                        seed, rotations, torus_elements);
  Json config{{"subcommand", "loop-residuals"},
              {"family", family},
              {"n", n},
              {"N", samples},
              {"loops", loops},
              {"seed", seed},
              {"rotations", rotations},
              {"torus_elements", torus_elements}};
  std::string csv = "# version " + std::string(lm::kVersion) +
                    "\n# normalization " + lm::kNormalizationTag +
                    "\n# config " + config.dump() + "\n" +
                    lm::loops::residual_rows_to_csv(rows);
  emit(csv, out);
  return kExitOk;
}

int cmd_cell_conjugation_check(const CommonOpts& opts, int max_word_length,
                               int random_tuples, uint64_t seed) {
  auto rs = resolve_rs(opts);
  if (opts.type != "A" || (opts.rank != 1 && opts.rank != 2))
    lm::fail("cell-conjugation-check supports type A, rank 1 or 2");
  auto realization = lm::lie::make_su(opts.rank + 1);
  auto sigma = lm::lie::maximal_rank_involution("su", opts.rank + 1).theta;

  std::vector<lm::GaussRat> grid{
      lm::GaussRat(1), lm::GaussRat(lm::Rat(0), lm::Rat(1)),
      lm::GaussRat(lm::Rat(1, 2), lm::Rat(-1)),
      lm::GaussRat(lm::Rat(-2, 3), lm::Rat(1, 5))};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> num(-5, 5);
  std::uniform_int_distribution<long long> den(1, 3);
  auto random_coord = [&]() {
    return lm::GaussRat(lm::Rat(num(rng), den(rng)),
                        lm::Rat(num(rng), den(rng)));
  };

  long long checks = 0, passes = 0;
  for (const auto& word : lm::affine::all_reduced_words(rs, max_word_length)) {
    lm::IntVec lambda = lm::affine::apply_affine_word_lattice(
        rs, word, lm::IntVec(rs.rank, 0));
    for (const auto& g : grid) {
      std::vector<lm::GaussRat> xs(word.size(), g);
      ++checks;
      if (lm::laurent::conjugation_cell_check(rs, realization, sigma, word,
                                              xs, lambda))
        ++passes;
    }
    for (int t = 0; t < random_tuples; ++t) {
      std::vector<lm::GaussRat> xs;
      for (size_t k = 0; k < word.size(); ++k) xs.push_back(random_coord());
      ++checks;
      if (lm::laurent::conjugation_cell_check(rs, realization, sigma, word,
                                              xs, lambda))
        ++passes;
    }
  }
  Json config{{"subcommand", "cell-conjugation-check"},
              {"type", opts.type},
              {"rank", opts.rank},
              {"max_word_length", max_word_length},
              {"random_tuples", random_tuples},
              {"seed", seed}};
  Json payload{{"checks", checks}, {"passes", passes},
               {"all_exact", checks == passes}};
  emit_json(lm::report::wrap_report(config, payload), opts.out);
  return checks == passes ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moment-map, Bruhat-cell and Z2 Poincare-series "
               "computations for based loop groups"};
  app.set_version_flag("--version", lm::kVersion);
  app.require_subcommand(1);

  CommonOpts polytope_opts, cells_opts, series_opts, convexity_opts,
      betti_opts, conj_opts;
  std::string emax = "4", conv_emax = "8";
  int max_length = 6, max_degree = 20;
  std::string inv_preset, inv_file, conv_expect;
  std::string against = "cp", betti_expect;
  int against_n = 2;
  std::string family = "su";
  int family_n = 2, sweep_samples = 256, sweep_loops = 100;
  int rotations = 8, torus_elements = 8, max_word_length = 4,
      random_tuples = 50;
  uint64_t seed = 1;
  std::string check_preset = "maximal_rank", check_out, sweep_out;

  auto* polytope = app.add_subcommand(
      "polytope", "truncated vertex set of the moment polyhedron");
  add_root_system_opts(polytope, polytope_opts);
  polytope->add_option("--emax", emax, "energy cutoff, rational p/q");
  polytope->add_option("--out", polytope_opts.out, "output path");

  auto* cells =
      app.add_subcommand("cells", "Bruhat cells by complex dimension");
  add_root_system_opts(cells, cells_opts);
  cells->add_option("--max-length", max_length, "dimension bound");
  cells->add_option("--out", cells_opts.out, "output path");

  auto* series =
      app.add_subcommand("series", "Z2 Poincare series of the loop space");
  add_root_system_opts(series, series_opts);
  series->add_option("--max-degree", max_degree, "truncation degree");
  series->add_option("--out", series_opts.out, "output path");

  auto* conv = app.add_subcommand(
      "verify-convexity",
      "compare moment vertices with the tau-fixed ones, report the verdict");
  add_root_system_opts(conv, convexity_opts);
  conv->add_option("--involution", inv_preset,
                   "preset: maximal_rank or su_n_cp");
  conv->add_option("--involution-file", inv_file,
                   "JSON file with an integer matrix");
  conv->add_option("--emax", conv_emax, "energy cutoff, rational p/q");
  conv->add_option("--expect", conv_expect, "equal or strict");
  conv->add_option("--out", convexity_opts.out, "output path");

  auto* vbetti = app.add_subcommand(
      "verify-betti", "compare Betti series against a closed form");
  add_root_system_opts(vbetti, betti_opts);
  vbetti->add_option("--against", against, "cp (halved) or su (direct)");
  vbetti->add_option("--n", against_n, "closed-form parameter n")->required();
  vbetti->add_option("--max-degree", max_degree, "comparison degree");
  vbetti->add_option("--expect", betti_expect,
                     "equal or discrepancy@<degree>");
  vbetti->add_option("--out", betti_opts.out, "output path");

  auto* icheck = app.add_subcommand("involution-check",
                                    "exact checks of a matrix involution");
  icheck->add_option("--family", family, "su, so or sp")->required();
  icheck->add_option("--n", family_n, "family parameter")->required();
  icheck->add_option("--preset", check_preset, "maximal_rank or su_n_cp");
  icheck->add_option("--out", check_out, "output path");

  auto* sweep = app.add_subcommand(
      "loop-residuals", "CSV residual sweep over seeded random loops");
  sweep->add_option("--family", family, "group family (su)");
  sweep->add_option("--n", family_n, "family parameter");
  sweep->add_option("--samples", sweep_samples, "grid size N (power of two)");
  sweep->add_option("--loops", sweep_loops, "number of random loops");
  sweep->add_option("--seed", seed, "RNG seed");
  sweep->add_option("--rotations", rotations, "grid rotations per loop");
  sweep->add_option("--torus-elements", torus_elements,
                    "torus elements per rotation");
  sweep->add_option("--out", sweep_out, "output path");

  auto* conj = app.add_subcommand(
      "cell-conjugation-check",
      "exact tau-conjugation identity on Bruhat cell coordinates");
  add_root_system_opts(conj, conj_opts);
  conj->add_option("--max-word-length", max_word_length, "word length bound");
  conj->add_option("--random", random_tuples, "random tuples per word");
  conj->add_option("--seed", seed, "RNG seed");
  conj->add_option("--out", conj_opts.out, "output path");

  try {
    app.parse(argc, argv);
    if (polytope->parsed()) return cmd_polytope(polytope_opts, emax);
    if (cells->parsed()) return cmd_cells(cells_opts, max_length);
    if (series->parsed()) return cmd_series(series_opts, max_degree);
    if (conv->parsed())
      return cmd_verify_convexity(convexity_opts, inv_preset, inv_file,
                                  conv_emax, conv_expect);
    if (vbetti->parsed())
      return cmd_verify_betti(betti_opts, against, against_n, max_degree,
                              betti_expect);
    if (icheck->parsed())
      return cmd_involution_check(family, family_n, check_preset, check_out);
    if (sweep->parsed())
      return cmd_loop_residuals(family, family_n, sweep_samples, sweep_loops,
                                seed, rotations, torus_elements, sweep_out);
    if (conj->parsed())
      return cmd_cell_conjugation_check(conj_opts, max_word_length,
                                        random_tuples, seed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help, --version
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
