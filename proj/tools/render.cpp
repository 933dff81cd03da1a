// Copyright 2026 The codezeta Authors.
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

#include "render.hpp"

#include <sstream>

namespace codezeta::cli {

namespace {

using nlohmann::json;

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

// "n/1" prints as "n".
std::string rat(const json& r) {
  std::string s = r.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

std::string join(const json& arr, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += sep;
    out += arr[i].is_string() ? rat(arr[i]) : arr[i].dump();
  }
  return out;
}

std::string subset(const json& arr) { return "{" + join(arr, ",") + "}"; }

std::string header(const json& code) {
  std::ostringstream os;
  os << "code: [" << code["n"].get<int>() << "," << code["k"].get<int>() << "] over GF(" << code["q"].get<int>()
     << ")\n";
  return os.str();
}

std::string text(const json& poly) { return poly["text"].get<std::string>(); }

void weights(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "distribution: " << join(d["distribution"]) << "\n";
  os << "dual distribution: " << join(d["dual_distribution"]) << "\n";
  os << "total: " << rat(d["total"]) << "\n";
  os << "d = " << d["d"] << ", d_dual = " << d["d_dual"] << "\n";
}

void zeta(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "P(T) = " << text(d["P"]) << "\n";
  os << "degree " << d["degree"] << " (n + 2 - d - d_dual = " << d["expected_degree"] << "), P(1) = "
     << rat(d["P_at_1"]) << "\n";
  os << "g = " << d["g"] << ", g_dual = " << d["g_dual"] << "\n";
  if (!d["nondegenerate"].get<bool>()) {
    os << "d or d_dual is below 2: route comparison, functional equation and distance relation skipped\n";
    return;
  }
  os << "P(T) from the enumerator system = " << text(d["P_bivariate"]) << "\n";
  os << "routes agree: " << pass(d["routes_agree"].get<bool>()) << "\n";
  os << "dual P(T) = " << text(d["dual_P"]) << "\n";
  os << "functional equation: " << pass(d["functional_equation"].get<bool>()) << "\n";
  const json& b = d["distance_bound"];
  os << "a = p_1/p_0 = " << rat(b["a"]) << "\n";
  if (b["relation_defined"].get<bool>()) {
    os << "a_d (a - d + q) = " << rat(b["lhs"]) << ", a_{d+1} = " << rat(b["rhs"])
       << ": " << pass(b["relation_holds"].get<bool>()) << "\n";
  } else {
    os << "a_d (a - d + q) = a_{d+1}: not applicable (d = n)\n";
  }
  os << "d + 1 <= q + 1 + a = " << rat(b["bound"]) << ": " << pass(b["bound_holds"].get<bool>())
     << "\n";
}

void rankgen(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "rank profile (row i: subsets of size i by rank):\n";
  for (std::size_t i = 0; i < d["rank_profile"].size(); ++i) {
    os << "  " << i << ": " << join(d["rank_profile"][i]) << "\n";
  }
  os << "W(x,y) = " << text(d["W"]) << "\n";
  os << "W_n(x,y) = " << text(d["Wn"]) << "\n";
  os << "W_n+(x,y) = (" << text(d["Wn_plus"]["numerator"]) << ") / (" << text(d["Wn_plus"]["denominator"])
     << ")\n";
}

void greene(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "distribution: " << join(d["distribution"]) << "\n";
  os << "predicted from W: " << join(d["predicted"]) << "\n";
  os << "Greene identity: " << pass(d["greene"].get<bool>()) << "\n";
  os << "normalized Greene identity: " << pass(d["greene_normalized"].get<bool>()) << "\n";
  if (d["greene_symmetric"].is_null()) {
    os << "symmetric form: not applicable\n";
  } else {
    os << "symmetric form: " << pass(d["greene_symmetric"].get<bool>()) << "\n";
  }
}

void twovar(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "g = " << d["g"] << "\n";
  os << "Z(T,u) numerator: " << text(d["Z"]["numerator"]) << "\n";
  os << "Z(T,u) denominator: " << text(d["Z"]["denominator"]) << "\n";
  os << "Z(T,q) = P(T)/((1-T)(1-qT)) with P(T) = " << text(d["P"]) << ": "
     << (d["compatible"].is_null() ? "not applicable (zero column)" : pass(d["compatible"].get<bool>())) << "\n";
  os << "functional equation (exploratory): " << (d["functional_equation_exploratory"].get<bool>() ? "holds" : "fails")
     << "\n";
}

void inequality(std::ostream& os, const char* label, const json& i) {
  os << label << ": " << i["lhs"] << " <= " << i["rhs"] << ": " << pass(i["holds"].get<bool>()) << "\n";
}

void audit(std::ostream& os, const char* label, const json& a) {
  os << label << ": zeros " << subset(a["zeros"]) << ", need >= " << rat(a["lower_bound"]) << ": "
     << pass(a["meets"].get<bool>()) << "\n";
}

void bounds(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "d = " << d["d"] << ", d_dual = " << d["d_dual"] << ", c = " << d["c"] << "\n";
  inequality(os, "Singleton d <= n - k + 1", d["singleton"]);
  inequality(os, "d - 2 <= n - d_dual", d["distance_pair"]);
  const bool vanishing = d["h_identically_zero"].get<bool>();
  const char* na = vanishing ? " (h = 0, not applicable)" : "";
  os << "h(w) = " << text(d["h"]) << "\n";
  inequality(os, (std::string("d + c d_dual <= n + c(c+1)") + na).c_str(), d["divisible"]);
  if (!d["binary_even_all_one"].is_null()) {
    inequality(os, (std::string("2d + c d_dual <= n + c(c+2)") + na).c_str(), d["binary_even_all_one"]);
  }
  audit(os, "h zero count", d["h_zeros"]);
  if (!d["h_zeros_binary"].is_null()) audit(os, "h zero count (binary even, all-one)", d["h_zeros_binary"]);
  if (!d["self_dual_type"].is_null()) {
    const json& t = d["self_dual_type"];
    os << "Type " << t["name"].get<std::string>() << (t["formal"].get<bool>() ? " (equal distributions)" : "")
       << ": d = " << t["d"] << " <= " << t["bound"] << ", "
       << (t["met"].get<bool>() ? "extremal" : "not extremal") << "\n";
  }
  if (!d["g"].is_null()) {
    const json& g = d["g"];
    os << "g(w) = " << text(g["poly"]) << " (degree " << g["degree"] << ")\n";
    os << "g from P(T): " << pass(g["matches_zeta"].get<bool>())
       << ", zeros on 2..d-1: " << pass(g["zeros_below_d"].get<bool>())
       << ", subcode averages: " << pass(g["subcode_average"].get<bool>()) << "\n";
  }
}

void clifford(std::ostream& os, const json& d) {
  os << header(d["code"]);
  os << "duality: " << d["duality"].get<std::string>() << "\n";
  const json& m = d["mode"];
  if (m["exhaustive"].get<bool>()) {
    os << "mode: exhaustive\n";
  } else {
    os << "mode: " << m["samples"] << " samples, seed " << m["seed"] << "\n";
  }
  os << "subsets visited: " << d["visited"] << "\n";
  os << "violations of 2 r(A) >= |A|: " << d["violations"] << "\n";
  if (!d["first_violation"].is_null()) os << "witness: A = " << subset(d["first_violation"]) << "\n";
  os << "equality cases: " << d["equality_witnesses"] << ", failed decompositions: " << d["failed_decompositions"]
     << "\n";
  for (const json& w : d["witness_samples"]) {
    os << "  A = " << subset(w["subset"]) << ": dims " << w["dim_on_subset"] << " + " << w["dim_on_complement"]
       << (w["decomposes"].get<bool>() ? ", decomposes" : "") << "\n";
  }
  if (!d["two_disjoint_bases"].is_null()) {
    const json& b = d["two_disjoint_bases"];
    if (b["found"].get<bool>()) {
      os << "two disjoint bases: " << subset(b["first"]) << " and " << subset(b["second"]) << "\n";
    } else {
      os << "two disjoint bases: none\n";
    }
  }
}

void extremal(std::ostream& os, const json& d) {
  os << "type q = " << d["q"] << ", c = " << d["c"] << ", n = " << d["n"] << "\n";
  os << "d = " << d["d"] << " (bound " << d["bound"] << (d["meets_bound"].get<bool>() ? ", met" : "") << ")\n";
  os << "distribution: " << join(d["distribution"]) << "\n";
  if (!d["unique"].get<bool>()) {
    os << "not unique: solution space of dimension " << d["solution_dimension"] << "\n";
  }
  if (!d["nonnegative"].get<bool>()) os << "negative entries present\n";
  if (!d["zeta"].is_null()) os << "P(T) = " << text(d["zeta"]["P"]) << "\n";
  if (!d["ultraspherical"].is_null()) {
    const json& u = d["ultraspherical"];
    os << "m = " << u["m"] << ", lambda_m = " << rat(u["lambda"]) << "\n";
    os << "Q(T^2/2) = lambda_m C_m^(m+1)((1/T + T)/2) T^m: " << pass(u["holds"].get<bool>()) << "\n";
    if (u["radii"].empty()) {
      os << "roots: none (P is constant)\n";
    } else {
      os << "root moduli: " << join(u["radii"]) << "\n";
    }
    os << "roots on |T| = " << u["target_radius"] << ": " << pass(u["on_circle"].get<bool>()) << "\n";
  }
}

void dispatch(std::ostream& os, const json& d);

void full(std::ostream& os, const json& d) {
  bool first = true;
  for (const char* name : {"weights", "zeta", "rankgen", "greene", "twovar", "bounds", "clifford"}) {
    if (!first) os << "\n";
    first = false;
    os << "== " << name << " ==\n";
    dispatch(os, d["sections"][name]);
  }
  os << "\n";
}

void dispatch(std::ostream& os, const json& d) {
  const std::string cmd = d["command"].get<std::string>();
  if (cmd == "weights") weights(os, d);
  else if (cmd == "zeta") zeta(os, d);
  else if (cmd == "rankgen") rankgen(os, d);
  else if (cmd == "greene") greene(os, d);
  else if (cmd == "twovar") twovar(os, d);
  else if (cmd == "bounds") bounds(os, d);
  else if (cmd == "clifford") clifford(os, d);
  else if (cmd == "extremal") extremal(os, d);
  else if (cmd == "report") full(os, d);
  os << "result: " << (d["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

std::string render(const json& doc) {
  std::ostringstream os;
  dispatch(os, doc);
  return os.str();
}

}  // namespace codezeta::cli
