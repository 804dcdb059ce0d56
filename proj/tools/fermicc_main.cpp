// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: classify, convert, invariants, perturb, verify,
// orbit48. Exit codes: 0 ok, 1 verification failure, 2 input error,
// 3 unsupported case, 4 reference-deficient state.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fermicc/four_eight.hpp"
#include "fermicc/perturbation.hpp"
#include "fermicc/seven_mode.hpp"
#include "fermicc/six_mode.hpp"
#include "fermicc/state_io.hpp"
#include "fermicc/verify.hpp"

namespace {

using namespace fermicc;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitNoReference = 4;

void emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw state_format_error("cannot open output file: " + out_path);
  os << j.dump(2) << "\n";
}

void put_complex(nlohmann::json& obj, const char* key, cplx v) {
  obj[key] = {{"re", v.real()}, {"im", v.imag()}};
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw state_format_error("cannot open output file: " + out_path);
  os << text;
}

int cmd_classify(const std::string& input, double tol, const std::string& fmt,
                 const std::string& out) {
  const AntisymTensor t = read_state_file(input);
  if (t.fermions() == 3 && t.modes() == 6) {
    const SixClassReport r = classify6(t, tol);
    if (fmt == "csv") emit_text(report_csv(r), out);
    else emit(report_json(r), out);
    return kExitOk;
  }
  if (t.fermions() == 3 && t.modes() == 7) {
    const SevenClassReport r = classify7(t, tol);
    if (fmt == "csv") emit_text(report_csv(r), out);
    else emit(report_json(r), out);
    return kExitOk;
  }
  std::cerr << "classify: unsupported (fermions, modes) = (" << t.fermions()
            << ", " << t.modes()
            << "); supported: (3,6), (3,7), (4,8 membership via orbit48)\n";
  return kExitUnsupported;
}

int cmd_convert(const std::string& input, const std::string& to,
                const std::string& from, double tol, const std::string& out) {
  if (!from.empty()) {
    // inverse direction: coordinates document -> state file
    std::ifstream in(input);
    if (!in) throw state_format_error("cannot open input file: " + input);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw state_format_error(std::string("invalid JSON: ") + e.what());
    }
    if (doc.contains("to") && doc["to"] != from) {
      throw state_format_error("convert: document was produced with --to " +
                               doc["to"].get<std::string>());
    }
    doc["to"] = from;
    emit(state_to_json(state_from_coordinates_json(doc)), out);
    return kExitOk;
  }
  const AntisymTensor t = read_state_file(input);
  nlohmann::json j{{"tolerance", tol},
                   {"version", std::string(library_version)},
                   {"to", to}};
  if (t.fermions() == 3 && t.modes() == 6) {
    const cplx ref = ci6_from_tensor(t).alpha;
    const SixModeCI ci = ci6_from_tensor_normalized(t, tol);
    put_complex(j, "reference_amplitude", ref);
    j["rescaled"] = std::abs(ref - cplx(1.0)) > tol;
    j["coordinates"] = to == "ci" ? ci_to_json(ci) : cc_to_json(cc6_from_ci6(ci, tol));
  } else if (t.fermions() == 3 && t.modes() == 7) {
    const cplx ref = ci7_from_tensor(t).alpha;
    const SevenModeCI ci = ci7_from_tensor_normalized(t, tol);
    put_complex(j, "reference_amplitude", ref);
    j["rescaled"] = std::abs(ref - cplx(1.0)) > tol;
    j["coordinates"] = to == "ci" ? ci_to_json(ci) : cc_to_json(cc7_from_ci7(ci, tol));
  } else {
    std::cerr << "convert: unsupported (fermions, modes) = (" << t.fermions()
              << ", " << t.modes() << "); supported: (3,6), (3,7)\n";
    return kExitUnsupported;
  }
  emit(j, out);
  return kExitOk;
}

int cmd_invariants(const std::string& input, double tol,
                   const std::string& out) {
  const AntisymTensor t = read_state_file(input);
  nlohmann::json j{{"tolerance", tol}, {"version", std::string(library_version)}};
  if (t.fermions() == 3 && t.modes() == 6) {
    const cplx d_cov = quartic_D(t);
    const cplx d_ci = quartic_D(ci6_from_tensor(t));
    put_complex(j, "D_covariant", d_cov);
    put_complex(j, "D_coordinate", d_ci);
    double disagreement = std::abs(d_cov - d_ci);
    try {
      const auto [tp, s] = remove_singles(t, tol);
      const cplx ref = ci6_from_tensor(tp).alpha;
      const SixModeCI reduced = ci6_from_tensor_normalized(tp, tol);
      // the invariant is homogeneous of degree 4 in the amplitudes
      const cplx d_cc =
          ref * ref * ref * ref * quartic_D(cc6_from_ci6(reduced, tol));
      put_complex(j, "D_cluster", d_cc);
      disagreement = std::max(disagreement, std::abs(d_cov - d_cc));
    } catch (const reference_deficient_error&) {
      j["D_cluster"] = nullptr;
      j["reference_deficient"] = true;
    }
    j["route_disagreement"] = disagreement;
  } else if (t.fermions() == 3 && t.modes() == 7) {
    const cplx j_trace = invariant_J(t);
    put_complex(j, "J_trace", j_trace);
    j["J_cube_residual"] = j_cube_residual(t);
    try {
      const auto [tp, s] = remove_singles(t, tol);
      const cplx ref = ci7_from_tensor(tp).alpha;
      const SevenModeCI reduced = ci7_from_tensor_normalized(tp, tol);
      // degree 7 homogeneity restores the raw-state value
      const cplx j_cc =
          std::pow(ref, 7) * invariant_J_cc(cc7_from_ci7(reduced, tol), tol);
      put_complex(j, "J_cluster", j_cc);
      j["route_disagreement"] = std::abs(j_trace - j_cc);
    } catch (const reference_deficient_error&) {
      j["J_cluster"] = nullptr;
      j["reference_deficient"] = true;
      j["route_disagreement"] = 0.0;
    }
  } else {
    std::cerr << "invariants: unsupported (fermions, modes)\n";
    return kExitUnsupported;
  }
  emit(j, out);
  return kExitOk;
}

// grid spec: comma-separated "axis=start:stop:step" over xi, u1, u2, u3
std::vector<TriplesPerturbation> parse_grid(const std::string& spec) {
  struct Axis {
    int index;  // 0 = xi, 1..3 = u components
    std::vector<double> values;
  };
  std::vector<Axis> axes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw state_format_error("grid: expected axis=start:stop:step");
    }
    const std::string name = item.substr(0, eq);
    Axis axis;
    if (name == "xi") axis.index = 0;
    else if (name == "u1") axis.index = 1;
    else if (name == "u2") axis.index = 2;
    else if (name == "u3") axis.index = 3;
    else throw state_format_error("grid: unknown axis " + name);
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(item.c_str() + eq + 1, "%lf:%lf:%lf", &start, &stop,
                    &step) != 3 ||
        step <= 0.0) {
      throw state_format_error("grid: expected axis=start:stop:step");
    }
    for (double v = start; v <= stop + 1e-12; v += step) {
      axis.values.push_back(v);
    }
    axes.push_back(std::move(axis));
  }
  if (axes.empty()) throw state_format_error("grid: empty specification");
  std::vector<TriplesPerturbation> points{TriplesPerturbation{}};
  for (const Axis& axis : axes) {
    std::vector<TriplesPerturbation> next;
    next.reserve(points.size() * axis.values.size());
    for (const TriplesPerturbation& p : points) {
      for (double v : axis.values) {
        TriplesPerturbation q = p;
        if (axis.index == 0) q.xi = cplx(v);
        else q.u(axis.index - 1) = cplx(v);
        next.push_back(q);
      }
    }
    points = std::move(next);
  }
  return points;
}

int cmd_perturb(const std::string& base_name, const std::string& grid,
                double sphere_q, int samples, std::uint64_t seed, double tol,
                const std::string& fmt, const std::string& out) {
  const GhzBase base = base_name == "minus" ? GhzBase::minus : GhzBase::plus;
  std::vector<TriplesPerturbation> path;
  if (!grid.empty()) {
    path = parse_grid(grid);
  } else {
    if (samples < 0) throw state_format_error("perturb: samples must be >= 0");
    path = sphere_samples(sphere_q, samples, seed);
  }
  const auto records = sweep(base, path, tol);
  if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
      arr.push_back({{"xi", {{"re", r.p.xi.real()}, {"im", r.p.xi.imag()}}},
                     {"u",
                      {{{"re", r.p.u(0).real()}, {"im", r.p.u(0).imag()}},
                       {{"re", r.p.u(1).real()}, {"im", r.p.u(1).imag()}},
                       {{"re", r.p.u(2).real()}, {"im", r.p.u(2).imag()}}}},
                     {"q2", {{"re", r.q2.real()}, {"im", r.q2.imag()}}},
                     {"J", {{"re", r.J.real()}, {"im", r.J.imag()}}},
                     {"rank_N", r.rank_N},
                     {"class", r.cls}});
    }
    emit(nlohmann::json{{"records", arr},
                        {"tolerance", tol},
                        {"version", std::string(library_version)}},
         out);
    return kExitOk;
  }
  if (out.empty()) {
    write_sweep_csv(std::cout, records);
  } else {
    std::ofstream os(out);
    if (!os) throw state_format_error("cannot open output file: " + out);
    write_sweep_csv(os, records);
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  const std::vector<int> ks = [&] {
    try {
      return verify::suite_criteria(suite);
    } catch (const std::invalid_argument& e) {
      throw state_format_error(e.what());
    }
  }();
  const auto results = verify::run_criteria(ks);
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %d: %s (%s)\n", r.pass ? "PASS" : "FAIL",
                r.criterion, r.name.c_str(), r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%zu checks, %s\n", results.size(),
              all_pass ? "all passed" : "FAILURES present");
  return all_pass ? kExitOk : kExitFail;
}

int cmd_orbit48(const std::string& input, double tol, const std::string& out) {
  const AntisymTensor t = read_state_file(input);
  if (t.fermions() != 4 || t.modes() != 8) {
    std::cerr << "orbit48: needs a (4, 8) state\n";
    return kExitUnsupported;
  }
  emit(report_json(subspace_membership(t), tol), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SLOCC entanglement classification of few-fermion states via "
               "coupled-cluster coordinates"};
  app.require_subcommand(1);

  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string input, out, to = "cc", suite = "all", base = "minus", grid;
  std::string format = "json";
  std::string sweep_format = "csv";
  double sphere_q = 2.0;
  int samples = 100;

  auto* classify = app.add_subcommand("classify", "classify a state file");
  classify->add_option("input", input)->required();
  classify->add_option("--tol", tol);
  classify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  classify->add_option("--out", out);

  std::string from;
  auto* convert = app.add_subcommand(
      "convert", "emit CI or CC coordinates, or rebuild a state from them");
  convert->add_option("input", input)->required();
  convert->add_option("--to", to)->check(CLI::IsMember({"ci", "cc"}));
  convert->add_option("--from", from, "rebuild a state from a coordinates document")
      ->check(CLI::IsMember({"ci", "cc"}));
  convert->add_option("--tol", tol);
  convert->add_option("--out", out);

  auto* invariants =
      app.add_subcommand("invariants", "evaluate the relative invariants");
  invariants->add_option("input", input)->required();
  invariants->add_option("--tol", tol);
  invariants->add_option("--out", out);

  auto* perturb = app.add_subcommand(
      "perturb", "sweep triples perturbations of a dense-orbit state");
  perturb->add_option("--base", base)->check(CLI::IsMember({"minus", "plus"}));
  perturb->add_option("--grid", grid,
                      "comma-separated axis=start:stop:step over xi,u1,u2,u3");
  perturb->add_option("--sphere", sphere_q, "sphere radius for random samples");
  perturb->add_option("--samples", samples);
  perturb->add_option("--seed", seed);
  perturb->add_option("--tol", tol);
  perturb->add_option("--format", sweep_format)
      ->check(CLI::IsMember({"json", "csv"}));
  perturb->add_option("--out", out);

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", suite, "all | six | seven | perturb | four8");

  auto* orbit48 = app.add_subcommand(
      "orbit48", "closed-orbit subspace membership for (4, 8) states");
  orbit48->add_option("input", input)->required();
  orbit48->add_option("--tol", tol);
  orbit48->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(classify)) {
      return cmd_classify(input, tol, format, out);
    }
    if (app.got_subcommand(convert)) {
      return cmd_convert(input, to, from, tol, out);
    }
    if (app.got_subcommand(invariants)) return cmd_invariants(input, tol, out);
    if (app.got_subcommand(perturb)) {
      return cmd_perturb(base, grid, sphere_q, samples, seed, tol,
                         sweep_format, out);
    }
    if (app.got_subcommand(verify_cmd)) return cmd_verify(suite);
    if (app.got_subcommand(orbit48)) return cmd_orbit48(input, tol, out);
  } catch (const fermicc::reference_deficient_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoReference;
  } catch (const fermicc::state_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
