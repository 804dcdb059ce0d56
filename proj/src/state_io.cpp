// Copyright 2026 The fermicc Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "fermicc/state_io.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace fermicc {

namespace {

nlohmann::json complex_json(cplx v) {
  return nlohmann::json{{"re", v.real()}, {"im", v.imag()}};
}

nlohmann::json mat3_json(const Mat3& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) {
    throw state_format_error(std::string("state: ") + what +
                             " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw state_format_error(std::string("state: non-finite ") + what);
  }
  return v;
}

}  // namespace

AntisymTensor state_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("fermions") || !j.contains("modes")) {
    throw state_format_error("state: need \"fermions\" and \"modes\" fields");
  }
  if (!j["fermions"].is_number_integer() || !j["modes"].is_number_integer()) {
    throw state_format_error("state: \"fermions\" and \"modes\" must be integers");
  }
  const int n = j["fermions"].get<int>();
  const int modes = j["modes"].get<int>();
  AntisymTensor t = [&] {
    try {
      return AntisymTensor(n, modes);
    } catch (const std::invalid_argument& e) {
      throw state_format_error(e.what());
    }
  }();

  if (j.contains("amplitudes")) {
    if (!j["amplitudes"].is_array()) {
      throw state_format_error("state: \"amplitudes\" must be an array");
    }
    std::set<std::array<int, 4>> seen;
    for (const auto& entry : j["amplitudes"]) {
      if (!entry.is_object() || !entry.contains("indices")) {
        throw state_format_error("state: amplitude entry needs \"indices\"");
      }
      const auto& idx = entry["indices"];
      if (!idx.is_array() || static_cast<int>(idx.size()) != n) {
        throw state_format_error("state: \"indices\" must list exactly n modes");
      }
      std::array<int, 4> tup{};
      for (int k = 0; k < n; ++k) {
        if (!idx[size_t(k)].is_number_integer()) {
          throw state_format_error("state: indices must be integers");
        }
        tup[size_t(k)] = idx[size_t(k)].get<int>();
        if (tup[size_t(k)] < 1 || tup[size_t(k)] > modes) {
          throw state_format_error("state: index out of range 1..modes");
        }
        if (k > 0 && tup[size_t(k)] <= tup[size_t(k - 1)]) {
          throw state_format_error("state: indices must be strictly increasing");
        }
      }
      if (!seen.insert(tup).second) {
        throw state_format_error("state: duplicate index tuple");
      }
      const double re = entry.contains("re") ? finite_number(entry["re"], "re") : 0.0;
      const double im = entry.contains("im") ? finite_number(entry["im"], "im") : 0.0;
      t.set(std::span<const int>(tup.data(), size_t(n)), cplx(re, im));
    }
  }
  return t;
}

AntisymTensor read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw state_format_error("cannot open state file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw state_format_error(std::string("invalid JSON: ") + e.what());
  }
  return state_from_json(j);
}

nlohmann::json state_to_json(const AntisymTensor& t) {
  nlohmann::json amps = nlohmann::json::array();
  for (int k = 0; k < t.component_count(); ++k) {
    const cplx v = t.amplitudes()[size_t(k)];
    if (v == cplx(0.0)) continue;
    const auto tup = t.tuple(k);
    nlohmann::json entry;
    entry["indices"] = std::vector<int>(tup.begin(), tup.end());
    entry["re"] = v.real();
    entry["im"] = v.imag();
    amps.push_back(entry);
  }
  return nlohmann::json{
      {"fermions", t.fermions()}, {"modes", t.modes()}, {"amplitudes", amps}};
}

nlohmann::json report_json(const SixClassReport& r) {
  return nlohmann::json{
      {"class", std::string(to_string(r.cls))},
      {"D", complex_json(r.D)},
      {"dual_norm", r.dual_norm},
      {"K_norm", r.k_norm},
      {"Q_norms", {r.q_norms[0], r.q_norms[1], r.q_norms[2]}},
      {"scale", r.scale},
      {"tolerance", r.tol},
      {"version", std::string(library_version)}};
}

nlohmann::json report_json(const SevenClassReport& r) {
  std::vector<double> sv(7);
  for (int i = 0; i < 7; ++i) sv[size_t(i)] = r.singular_values(i);
  nlohmann::json j{{"class", std::string(to_string(r.cls))},
                   {"J", complex_json(r.J)},
                   {"rank_N", r.rank_N},
                   {"singular_values_N", sv},
                   {"ambiguous", r.ambiguous},
                   {"scale", r.scale},
                   {"tolerance", r.tol},
                   {"rank_tolerance", r.rank_tol},
                   {"version", std::string(library_version)}};
  if (r.six_mode_delegated) {
    j["six_mode_class"] = std::string(to_string(r.six_mode_class));
  }
  return j;
}

nlohmann::json report_json(const MembershipReport& r, double tol) {
  nlohmann::json coords = nlohmann::json::array();
  for (int i = 0; i < 7; ++i) coords.push_back(complex_json(r.coords(i)));
  return nlohmann::json{{"residual", r.residual},
                        {"in_subspace", r.residual <= tol},
                        {"coords", coords},
                        {"tolerance", tol},
                        {"version", std::string(library_version)}};
}

namespace {

std::string csv_row(std::initializer_list<std::pair<const char*, std::string>>
                        fields) {
  std::string header, row;
  for (const auto& [k, v] : fields) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += k;
    row += v;
  }
  return header + "\n" + row + "\n";
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv(const SixClassReport& r) {
  return csv_row({{"class", std::string(to_string(r.cls))},
                  {"re_D", num(r.D.real())},
                  {"im_D", num(r.D.imag())},
                  {"dual_norm", num(r.dual_norm)},
                  {"K_norm", num(r.k_norm)},
                  {"scale", num(r.scale)},
                  {"tolerance", num(r.tol)},
                  {"version", std::string(library_version)}});
}

std::string report_csv(const SevenClassReport& r) {
  return csv_row({{"class", std::string(to_string(r.cls))},
                  {"re_J", num(r.J.real())},
                  {"im_J", num(r.J.imag())},
                  {"rank_N", std::to_string(r.rank_N)},
                  {"ambiguous", r.ambiguous ? "1" : "0"},
                  {"scale", num(r.scale)},
                  {"tolerance", num(r.tol)},
                  {"version", std::string(library_version)}});
}

namespace {

cplx complex_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_object()) {
    throw state_format_error(std::string("coordinates: ") + what +
                             " must be an {re, im} object");
  }
  const double re = j.contains("re") ? finite_number(j["re"], what) : 0.0;
  const double im = j.contains("im") ? finite_number(j["im"], what) : 0.0;
  return {re, im};
}

Mat3 mat3_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) {
    throw state_format_error(std::string("coordinates: ") + what +
                             " must be a 3x3 array");
  }
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    if (!j[size_t(r)].is_array() || j[size_t(r)].size() != 3) {
      throw state_format_error(std::string("coordinates: ") + what +
                               " must be a 3x3 array");
    }
    for (int c = 0; c < 3; ++c) {
      m(r, c) = complex_from_json(j[size_t(r)][size_t(c)], what);
    }
  }
  return m;
}

}  // namespace

AntisymTensor state_from_coordinates_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("to") || !doc.contains("coordinates")) {
    throw state_format_error(
        "coordinates: need \"to\" and \"coordinates\" fields");
  }
  const std::string kind = doc["to"].get<std::string>();
  if (kind != "ci" && kind != "cc") {
    throw state_format_error("coordinates: \"to\" must be ci or cc");
  }
  const nlohmann::json& c = doc["coordinates"];
  const cplx ref = doc.contains("reference_amplitude")
                       ? complex_from_json(doc["reference_amplitude"],
                                           "reference_amplitude")
                       : cplx(1.0);
  const bool seven = c.contains("Z") || c.contains("D");

  AntisymTensor t = [&] {
    if (kind == "ci") {
      if (seven) {
        SevenModeCI ci;
        ci.alpha = complex_from_json(c.at("alpha"), "alpha");
        ci.beta = complex_from_json(c.at("beta"), "beta");
        ci.A = mat3_from_json(c.at("A"), "A");
        ci.B = mat3_from_json(c.at("B"), "B");
        ci.D = mat3_from_json(c.at("D"), "D");
        ci.E = AntisymMat3::from_matrix(mat3_from_json(c.at("E"), "E"));
        ci.F = AntisymMat3::from_matrix(mat3_from_json(c.at("F"), "F"));
        return tensor_from_ci7(ci);
      }
      SixModeCI ci;
      ci.alpha = complex_from_json(c.at("alpha"), "alpha");
      ci.beta = complex_from_json(c.at("beta"), "beta");
      ci.A = mat3_from_json(c.at("A"), "A");
      ci.B = mat3_from_json(c.at("B"), "B");
      return tensor_from_ci6(ci);
    }
    if (seven) {
      SevenModeCC cc;
      cc.eta = complex_from_json(c.at("eta"), "eta");
      cc.xi = complex_from_json(c.at("xi"), "xi");
      cc.X = mat3_from_json(c.at("X"), "X");
      cc.Y = mat3_from_json(c.at("Y"), "Y");
      cc.Z = mat3_from_json(c.at("Z"), "Z");
      cc.V = AntisymMat3::from_matrix(mat3_from_json(c.at("V"), "V"));
      cc.U = AntisymMat3::from_matrix(mat3_from_json(c.at("U"), "U"));
      return tensor_from_ci7(ci7_from_cc7(cc));
    }
    SixModeCC cc;
    cc.eta = complex_from_json(c.at("eta"), "eta");
    cc.xi = complex_from_json(c.at("xi"), "xi");
    cc.X = mat3_from_json(c.at("X"), "X");
    cc.Y = mat3_from_json(c.at("Y"), "Y");
    return tensor_from_ci6(ci6_from_cc6(cc));
  }();
  t *= ref;
  return t;
}

nlohmann::json ci_to_json(const SixModeCI& ci) {
  return nlohmann::json{{"alpha", complex_json(ci.alpha)},
                        {"A", mat3_json(ci.A)},
                        {"B", mat3_json(ci.B)},
                        {"beta", complex_json(ci.beta)}};
}

nlohmann::json ci_to_json(const SevenModeCI& ci) {
  return nlohmann::json{{"alpha", complex_json(ci.alpha)},
                        {"beta", complex_json(ci.beta)},
                        {"A", mat3_json(ci.A)},
                        {"B", mat3_json(ci.B)},
                        {"D", mat3_json(ci.D)},
                        {"E", mat3_json(ci.E.matrix())},
                        {"F", mat3_json(ci.F.matrix())}};
}

nlohmann::json cc_to_json(const SixModeCC& cc) {
  return nlohmann::json{{"eta", complex_json(cc.eta)},
                        {"X", mat3_json(cc.X)},
                        {"Y", mat3_json(cc.Y)},
                        {"xi", complex_json(cc.xi)}};
}

nlohmann::json cc_to_json(const SevenModeCC& cc) {
  return nlohmann::json{{"eta", complex_json(cc.eta)},
                        {"xi", complex_json(cc.xi)},
                        {"X", mat3_json(cc.X)},
                        {"Y", mat3_json(cc.Y)},
                        {"Z", mat3_json(cc.Z)},
                        {"V", mat3_json(cc.V.matrix())},
                        {"U", mat3_json(cc.U.matrix())}};
}

}  // namespace fermicc
