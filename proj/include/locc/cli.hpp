#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "locc/certify.hpp"
#include "locc/measures.hpp"
#include "locc/scan.hpp"
#include "locc/states.hpp"

namespace locc::cli {

inline constexpr const char* kCsvHeader =
    "theta1,theta2,a,b,c,d,x,y,en_rho_numeric,en_rho_closed,en_eta_numeric,en_eta_closed,"
    "cond3,cond4,verdict_three,verdict_four,case_label";

/// 17 significant digits: enough for exact double round-trips.
inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline Complex parse_amplitude(const std::string& s) {
  const auto colon = s.find(':');
  std::size_t used = 0;
  try {
    if (colon == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string res = s.substr(0, colon), ims = s.substr(colon + 1);
    const double re = std::stod(res, &used);
    if (used != res.size()) throw std::invalid_argument(s);
    const double im = std::stod(ims, &used);
    if (used != ims.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad amplitude '" + s + "' (expected re or re:im)");
  }
}

inline std::vector<int> parse_triple(const std::string& s) {
  std::vector<int> t;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      t.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad triple '" + s + "' (expected i,j,k)");
    }
  }
  if (t.size() != 3) throw std::invalid_argument("bad triple '" + s + "' (expected i,j,k)");
  return t;
}

/// Parse, optionally renormalize, and canonicalize the four amplitudes.
inline FamilyParams read_params(const std::vector<std::string>& raw, bool renorm,
                                std::ostream& err) {
  if (raw.size() != 4) throw std::invalid_argument("--params needs exactly 4 values");
  FamilyParams p{parse_amplitude(raw[0]), parse_amplitude(raw[1]), parse_amplitude(raw[2]),
                 parse_amplitude(raw[3])};
  const double nab = std::norm(p.a) + std::norm(p.b);
  const double ncd = std::norm(p.c) + std::norm(p.d);
  const double tol = renorm ? 1e-6 : 1e-9;
  if (std::abs(nab - 1.0) > tol || std::abs(ncd - 1.0) > tol)
    throw std::invalid_argument("parameters not normalized: |a|^2+|b|^2 and |c|^2+|d|^2 must be 1" +
                                std::string(renorm ? " within 1e-6" : " within 1e-9 (see --renorm)"));
  if (renorm) {
    const double sab = 1.0 / std::sqrt(nab), scd = 1.0 / std::sqrt(ncd);
    p.a *= sab;
    p.b *= sab;
    p.c *= scd;
    p.d *= scd;
  }
  if (p.was_swapped())
    err << "note: parameters canonicalized to |a| >= |b|, |c| >= |d| (A1/A2 or A3/A4 roles swapped)\n";
  return p.canonicalized();
}

inline nlohmann::json to_json(const EnResult& r) {
  return {{"en", r.en},
          {"negativity", r.negativity},
          {"neg_eigenvalues", r.neg_eigenvalues},
          {"method", r.method}};
}

inline nlohmann::json to_json(const Verdict& v) {
  nlohmann::json j{{"kind", to_string(v.kind)},
                   {"en_value", v.en_value},
                   {"cut", v.cut.name()},
                   {"rationale", v.rationale}};
  if (v.case_label) j["case_label"] = *v.case_label;
  return j;
}

inline nlohmann::json to_json(const ScanRecord& r) {
  return {{"theta1", r.theta1},
          {"theta2", r.theta2},
          {"a", r.a},
          {"b", r.b},
          {"c", r.c},
          {"d", r.d},
          {"x", r.x},
          {"y", r.y},
          {"en_rho_numeric", r.en_rho_numeric},
          {"en_rho_closed", r.en_rho_closed},
          {"en_eta_numeric", r.en_eta_numeric},
          {"en_eta_closed", r.en_eta_closed},
          {"cond3", r.cond3},
          {"cond4", r.cond4},
          {"verdict_three", to_string(r.verdict_three)},
          {"verdict_four", to_string(r.verdict_four)},
          {"case_label", r.case_label}};
}

inline nlohmann::json to_json(const CrossValidationReport& rep) {
  return {{"record_count", rep.record_count},
          {"max_rho_deviation", rep.max_rho_deviation},
          {"max_eta_deviation", rep.max_eta_deviation},
          {"corrected_branch_count", rep.corrected_branch_count},
          {"boundary_band_count", rep.boundary_band_count},
          {"violations", rep.violations},
          {"ok", rep.ok()}};
}

inline void write_csv(const std::vector<ScanRecord>& records, std::ostream& os) {
  os << kCsvHeader << "\n";
  for (const ScanRecord& r : records) {
    os << fmt(r.theta1) << ',' << fmt(r.theta2) << ',' << fmt(r.a) << ',' << fmt(r.b) << ','
       << fmt(r.c) << ',' << fmt(r.d) << ',' << fmt(r.x) << ',' << fmt(r.y) << ','
       << fmt(r.en_rho_numeric) << ',' << fmt(r.en_rho_closed) << ',' << fmt(r.en_eta_numeric)
       << ',' << fmt(r.en_eta_closed) << ',' << (r.cond3 ? "true" : "false") << ','
       << (r.cond4 ? "true" : "false") << ',' << to_string(r.verdict_three) << ','
       << to_string(r.verdict_four) << ',' << r.case_label << "\n";
  }
}

/// Front end; `args` excludes the program name. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifies single-copy LOCC indistinguishability of the (a,b,c,d) state "
               "families via logarithmic negativity across the AC:BD cut"};
  app.require_subcommand(1);

  std::vector<std::string> params;
  std::string triple_str = "1,2,3";
  bool renorm = false;
  bool eta = false;
  int grid = 101;
  std::string out_path;
  std::string format = "csv";

  CLI::App* cmd_en = app.add_subcommand("en", "Logarithmic negativity of rho (or eta) across AC:BD");
  cmd_en->add_option("--params", params, "amplitudes a b c d, each re or re:im")
      ->expected(4)
      ->required();
  cmd_en->add_flag("--eta", eta, "use the three-state mixture eta instead of rho");
  cmd_en->add_option("--triple", triple_str, "eta member indices i,j,k (default 1,2,3)");
  cmd_en->add_flag("--renorm", renorm, "renormalize inputs off by up to 1e-6");

  CLI::App* cmd_certify = app.add_subcommand("certify", "Run the indistinguishability certifier");
  cmd_certify->require_subcommand(1);
  CLI::App* cmd_four = cmd_certify->add_subcommand("four", "certify the full four-state family");
  CLI::App* cmd_three = cmd_certify->add_subcommand("three", "certify a three-state subfamily");
  for (CLI::App* c : {cmd_four, cmd_three}) {
    c->add_option("--params", params, "amplitudes a b c d, each re or re:im")
        ->expected(4)
        ->required();
    c->add_flag("--renorm", renorm, "renormalize inputs off by up to 1e-6");
  }
  cmd_three->add_option("--triple", triple_str, "eta member indices i,j,k")->required();

  CLI::App* cmd_scan = app.add_subcommand("scan", "Sweep the (theta1, theta2) parameter grid");
  cmd_scan->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(2, 100000));
  cmd_scan->add_option("--triple", triple_str, "eta member indices i,j,k");
  cmd_scan->add_option("--out", out_path, "output file")->required();
  cmd_scan->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Cross-validate closed forms against the numeric pipeline");
  cmd_validate->add_option("--grid", grid, "grid points per axis")->check(CLI::Range(2, 100000));
  cmd_validate->add_option("--triple", triple_str, "eta member indices i,j,k");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    const std::vector<int> triple = parse_triple(triple_str);
    if (cmd_en->parsed()) {
      const FamilyParams p = read_params(params, renorm, err);
      const Matrix m = eta ? build_eta(p, triple) : build_rho(p);
      const EnResult r = log_negativity(m, four_party_labels(), Cut::ac_bd().left);
      out << to_json(r).dump(2) << "\n";
    } else if (cmd_certify->parsed()) {
      const FamilyParams p = read_params(params, renorm, err);
      const Verdict v = cmd_four->parsed() ? certify_four(p) : certify_three(p, triple);
      out << to_json(v).dump(2) << "\n";
    } else if (cmd_scan->parsed()) {
      const std::vector<ScanRecord> records = sweep_grid(grid, triple);
      std::ofstream file(out_path);
      if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
      if (format == "csv") {
        write_csv(records, file);
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (const ScanRecord& r : records) j.push_back(to_json(r));
        file << j.dump(2) << "\n";
      }
      err << "wrote " << records.size() << " records to " << out_path << "\n";
    } else if (cmd_validate->parsed()) {
      const CrossValidationReport rep = cross_validate(sweep_grid(grid, triple));
      out << to_json(rep).dump(2) << "\n";
      if (!rep.ok()) return 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace locc::cli
