// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Batch CLI: every subcommand reads one JSON document (stdin or --in),
// writes one JSON document (stdout or --out) and exits 0 on success, 1 on
// an axiom failure (with a JSON report) and 2 on malformed input.
// Identical inputs and seeds produce byte-identical outputs.

#ifndef TRACTS_CLI_HPP
#define TRACTS_CLI_HPP

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tracts/json_io.hpp"
#include "tracts/spaces.hpp"

namespace tracts::cli {

using nlohmann::json;

namespace detail {

struct Options {
  std::string in_path;
  std::string out_path;
  long guard = kEnumerationGuard;
  int gp3_n = GPFunction::kDefaultGp3Guard;
  bool variant = false;
  // gen-random
  std::string kind = "matrix";
  unsigned long seed = 0;
  long p = 0;  // 0 = rationals
  long q = 2;
  int rows = 2;
  int cols = 4;
};

inline json read_input(const Options& opt, std::istream& fallback) {
  if (!opt.in_path.empty()) {
    std::ifstream f(opt.in_path);
    if (!f) throw invalid_input("cannot open input file " + opt.in_path);
    return json::parse(f);
  }
  return json::parse(fallback);
}

inline void write_output(const Options& opt, std::ostream& fallback,
                         const json& j) {
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw invalid_input("cannot open output file " + opt.out_path);
    f << j.dump(2) << "\n";
    return;
  }
  fallback << j.dump(2) << "\n";
}

inline GPFunction input_gp(const json& j, const Options& opt) {
  return io::gp_from_json(j, opt.gp3_n);
}

inline json gen_random(const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  if (opt.rows < 1 || opt.cols < opt.rows || opt.cols > kMaxGroundSet)
    throw invalid_input("gen-random: bad shape");
  if (opt.kind == "matrix") {
    Tract t = opt.p == 0 ? Tract::rationals() : Tract::gf(opt.p);
    for (int attempt = 0; attempt < 4096; ++attempt) {
      FieldMatrix m;
      for (int r = 0; r < opt.rows; ++r) {
        TVec row;
        for (int c = 0; c < opt.cols; ++c) {
          long v = opt.p == 0
                       ? static_cast<long>(rng() % 19) - 9
                       : static_cast<long>(rng() % opt.p);
          row.push_back(t.element(v));
        }
        m.push_back(std::move(row));
      }
      try {
        (void)from_matrix(t, m);
        return io::matrix_to_json(t, m);
      } catch (const invalid_input&) {
      }
    }
    throw invalid_input("gen-random: no valid arrangement found");
  }
  if (opt.kind == "valuation") {
    Tract qq = Tract::rationals();
    for (int attempt = 0; attempt < 4096; ++attempt) {
      FieldMatrix m;
      for (int r = 0; r < opt.rows; ++r) {
        TVec row;
        for (int c = 0; c < opt.cols; ++c)
          row.push_back(qq.element(static_cast<long>(rng() % 61) - 30));
        m.push_back(std::move(row));
      }
      try {
        GPFunction trop = qadic_minors_gp(m, opt.q);
        return {{"matrix", io::matrix_to_json(qq, m).at("rows")},
                {"q", opt.q},
                {"gp", io::gp_to_json(trop)}};
      } catch (const axiom_error&) {
        // rank-deficient integer matrix; resample
      }
    }
    throw invalid_input("gen-random: no full-rank matrix found");
  }
  throw invalid_input("gen-random: kind must be matrix or valuation");
}

inline int dispatch(const std::string& cmd, const Options& opt,
                    std::istream& in, std::ostream& out) {
  if (cmd == "gen-random") {
    write_output(opt, out, gen_random(opt));
    return 0;
  }
  json input = read_input(opt, in);

  if (cmd == "check-gp") {
    (void)input_gp(input, opt);  // throws axiom_error on violation
    write_output(opt, out, {{"gp1", "ok"}, {"gp3", "ok"}});
    return 0;
  }
  if (cmd == "dual") {
    write_output(opt, out, io::gp_to_json(input_gp(input, opt).dual()));
    return 0;
  }
  if (cmd == "contract") {
    GPFunction phi = input_gp(input.at("gp"), opt);
    Subset s = io::subset_from_json(input.at("S"), phi.n());
    auto con = phi.contract(s);
    write_output(opt, out,
                 {{"gp", io::gp_to_json(con.gp)}, {"ground", con.ground}});
    return 0;
  }
  if (cmd == "fquotient") {
    GPFunction phi = input_gp(input.at("gp"), opt);
    Subset f = io::subset_from_json(input.at("F"), phi.n());
    write_output(opt, out, io::gp_to_json(phi.f_quotient(f)));
    return 0;
  }
  if (cmd == "direct-sum") {
    GPFunction a = input_gp(input.at("a"), opt);
    GPFunction b = input_gp(input.at("b"), opt);
    write_output(opt, out, io::gp_to_json(direct_sum(a, b)));
    return 0;
  }
  if (cmd == "rep-from-gp") {
    write_output(opt, out,
                 io::rep_to_json(fundamental_rep(input_gp(input, opt))));
    return 0;
  }
  if (cmd == "gp-from-rep") {
    write_output(opt, out,
                 io::gp_to_json(gp_from_rep(io::rep_from_json(input))));
    return 0;
  }
  if (cmd == "check-rep") {
    CheckReport r = check_representation(io::rep_from_json(input));
    write_output(opt, out, io::report_to_json(r));
    return r.ok ? 0 : 1;
  }
  if (cmd == "quotient-check") {
    GPFunction low = input_gp(input.at("low"), opt);
    GPFunction high = input_gp(input.at("high"), opt);
    write_output(opt, out, {{"is_quotient", is_quotient(low, high)}});
    return 0;
  }
  if (cmd == "vectors" || cmd == "support-bases" || cmd == "normal-basis") {
    if (cmd == "support-bases") {
      GPFunction phi = input_gp(input, opt);
      json sb = json::array();
      for (Subset b : support_bases(phi)) sb.push_back(io::subset_to_json(b));
      write_output(opt, out, {{"support_bases", sb}});
      return 0;
    }
    if (cmd == "normal-basis") {
      GPFunction phi = input_gp(input.at("gp"), opt);
      Subset b = io::subset_from_json(input.at("B"), phi.n());
      NormalForm nf = normal_basis(phi, b);
      json rows = json::object();
      for (const auto& [i, row] : nf.rows)
        rows[std::to_string(i)] = io::tvec_to_json(phi.tract(), row);
      write_output(opt, out,
                   {{"J", io::subset_to_json(nf.index_set)}, {"rows", rows}});
      return 0;
    }
    GPFunction phi = input_gp(input.at("gp"), opt);
    std::string which = input.value("which", std::string("vectors"));
    VectorSpacePredicate pred =
        which == "covectors" ? covectors_of(phi) : vectors_of(phi);
    if (input.contains("X")) {
      TVec x = io::tvec_from_json(phi.tract(), input.at("X"), phi.n());
      write_output(opt, out, {{"member", pred.membership(x)}});
      return 0;
    }
    json gens = json::array();
    for (const TVec& g : pred.generators())
      gens.push_back(io::tvec_to_json(phi.tract(), g));
    json result = {{"generators", gens}};
    if (phi.tract().finite()) {
      json members = json::array();
      for (const TVec& x : pred.members(opt.guard))
        members.push_back(io::tvec_to_json(phi.tract(), x));
      result["members"] = members;
    }
    write_output(opt, out, result);
    return 0;
  }
  if (cmd == "tflats") {
    GPFunction phi = input_gp(input, opt);
    write_output(opt, out,
                 io::tflat_lattice_to_json(lattice_of_t_flats(phi),
                                           opt.guard));
    return 0;
  }
  if (cmd == "check-lf") {
    io::ExplicitCollection col = io::collection_from_json(input);
    CheckReport r = opt.variant
                        ? check_lf_axioms_variant(col.t, col.n, col.members,
                                                  opt.guard)
                        : check_lf_axioms(col.t, col.n, col.members,
                                          opt.guard);
    write_output(opt, out, io::report_to_json(r));
    return r.ok ? 0 : 1;
  }
  if (cmd == "gp-from-lattice") {
    io::ExplicitCollection col = io::collection_from_json(input);
    write_output(opt, out, io::gp_to_json(gp_from_lattice(col.t, col.n,
                                                          col.members,
                                                          opt.guard)));
    return 0;
  }
  if (cmd == "psi") {
    write_output(opt, out,
                 io::arrangement_to_json(psi_arrangement(input_gp(input,
                                                                  opt))));
    return 0;
  }
  if (cmd == "check-pl") {
    CheckReport r =
        check_pl(io::arrangement_from_json(input, opt.gp3_n));
    write_output(opt, out, io::report_to_json(r));
    return r.ok ? 0 : 1;
  }
  if (cmd == "gp-from-pointline") {
    write_output(opt, out,
                 io::gp_to_json(gp_from_pointline(
                     io::arrangement_from_json(input, opt.gp3_n))));
    return 0;
  }
  if (cmd == "arr-from-matrix") {
    auto [t, m] = io::matrix_from_json(input);
    auto [arr, phi] = from_matrix(t, m);
    write_output(opt, out,
                 {{"arrangement", io::matrix_to_json(arr.field, arr.matrix)},
                  {"gp", io::gp_to_json(phi)}});
    return 0;
  }
  if (cmd == "verify-thm-d") {
    auto [t, m] = io::matrix_from_json(input);
    auto [arr, phi] = from_matrix(t, m);
    CheckReport flats = verify_flat_intersections(arr);
    auto [arr2, phi2] =
        from_matrix(t, linalg::row_space_basis(t, arr.matrix));
    bool round_trip = projectively_equal(phi, phi2) &&
                      rescaling_equivalent(arr, arr2);
    json result = {{"ok", flats.ok && round_trip},
                   {"flat_intersections", io::report_to_json(flats)},
                   {"rowspace_round_trip", round_trip}};
    write_output(opt, out, result);
    return (flats.ok && round_trip) ? 0 : 1;
  }
  if (cmd == "canonical-arr") {
    GPFunction phi = input_gp(input.at("gp"), opt);
    CanonicalArrangement arr(phi);
    Subset s = input.contains("S")
                   ? io::subset_from_json(input.at("S"), phi.n())
                   : 0;
    if (input.contains("X")) {
      TVec x = io::tvec_from_json(phi.tract(), input.at("X"), phi.n());
      write_output(opt, out, {{"member", arr.in_h(s, x)}});
      return 0;
    }
    json members = json::array();
    for (const TVec& x : arr.h_members(s, opt.guard))
      members.push_back(io::tvec_to_json(phi.tract(), x));
    write_output(opt, out,
                 {{"S", io::subset_to_json(s)}, {"members", members}});
    return 0;
  }
  if (cmd == "check-prop-e") {
    CheckReport r = check_prop_e(input_gp(input, opt), opt.guard);
    write_output(opt, out, io::report_to_json(r));
    return r.ok ? 0 : 1;
  }
  throw invalid_input("unknown subcommand " + cmd);
}

}  // namespace detail

/// Entry point used by the binary and by tests.  `args` excludes the
/// program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"exact matroids with coefficients in tracts"};
  app.require_subcommand(1);
  detail::Options opt;

  const std::vector<std::string> names = {
      "check-gp",     "dual",           "contract",      "fquotient",
      "direct-sum",   "rep-from-gp",    "gp-from-rep",   "check-rep",
      "quotient-check", "vectors",      "support-bases", "normal-basis",
      "tflats",       "check-lf",       "gp-from-lattice", "psi",
      "check-pl",     "gp-from-pointline", "arr-from-matrix",
      "verify-thm-d", "canonical-arr",  "check-prop-e",  "gen-random"};
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--in", opt.in_path, "input file (default stdin)");
    sub->add_option("--out", opt.out_path, "output file (default stdout)");
    sub->add_option("--guard", opt.guard, "enumeration guard override");
    sub->add_option("--gp3-n", opt.gp3_n,
                    "largest ground set for the GP3 scan");
    if (name == "check-lf")
      sub->add_flag("--variant", opt.variant, "check the starred axioms");
    if (name == "gen-random") {
      sub->add_option("--kind", opt.kind, "matrix | valuation");
      sub->add_option("--seed", opt.seed, "RNG seed");
      sub->add_option("--p", opt.p, "field prime (0 = rationals)");
      sub->add_option("--q", opt.q, "valuation prime");
      sub->add_option("--rows", opt.rows, "matrix rows");
      sub->add_option("--cols", opt.cols, "matrix columns");
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "{\"error\": \"" << e.what() << "\"}\n";
    return 2;
  }

  try {
    return detail::dispatch(app.get_subcommands().front()->get_name(), opt,
                            in, out);
  } catch (const axiom_error& e) {
    nlohmann::json report = {{"ok", false},
                             {"axiom", e.axiom()},
                             {"message", e.what()},
                             {"detail", e.detail()}};
    detail::write_output(opt, out, report);
    return 1;
  } catch (const invalid_input& e) {
    err << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << nlohmann::json({{"error", e.what()}}).dump() << "\n";
    return 2;
  }
}

}  // namespace tracts::cli

#endif  // TRACTS_CLI_HPP
