#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "locc/cli.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = locc::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

const std::string kHalf = "0.7071067811865476";

}  // namespace

TEST_CASE("certify three via CLI") {
  const auto r = run({"certify", "three", "--triple", "1,2,3", "--params", kHalf, kHalf, "1", "0"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "certified_indistinguishable");
  CHECK(std::abs(j["en_value"].get<double>() - std::log2((std::sqrt(5.0) + 3.0) / 3.0)) < 1e-9);
  CHECK(j["cut"] == "AC:BD");
  CHECK(j["case_label"] == "1.1.a");
}

TEST_CASE("en of rho at the product corner") {
  const auto r = run({"en", "--params", "1", "0", "1", "0"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["en"].get<double>() - 1.0) < 1e-10);
  CHECK(j["method"] == "numeric");
}

TEST_CASE("certify four at the Bell corner") {
  const auto r = run({"certify", "four", "--params", kHalf, kHalf, kHalf, kHalf});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "certified_indistinguishable");
  CHECK(std::abs(j["en_value"].get<double>()) < 1e-10);
}

TEST_CASE("en of eta with a triple") {
  const auto r = run({"en", "--eta", "--triple", "1,2,3", "--params", "1", "0", kHalf, kHalf});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["en"].get<double>() - std::log2((4.0 + std::sqrt(5.0)) / 3.0)) < 1e-9);
}

TEST_CASE("complex amplitudes parse as re:im") {
  const auto r = run({"en", "--params", "0:" + kHalf, kHalf, "1", "0"});
  REQUIRE(r.status == 0);
  CHECK(r.err.find("canonicalized") == std::string::npos);  // |a| == |b|, no swap
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["en"].get<double>() - std::log2(1.5)) < 1e-9);
}

TEST_CASE("non-canonical parameters are swapped with a notice") {
  const auto r = run({"certify", "four", "--params", "0", "1", "1", "0"});
  REQUIRE(r.status == 0);
  CHECK(r.err.find("canonicalized") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "trivially_distinguishable");
}

TEST_CASE("bad inputs exit nonzero with a diagnostic") {
  CHECK(run({"en", "--params", "0.9", "0.1", "1", "0"}).status != 0);
  CHECK(run({"en", "--params", "x", "0", "1", "0"}).status != 0);
  CHECK(run({"certify", "three", "--triple", "1,2", "--params", "1", "0", "1", "0"}).status != 0);
  CHECK(run({"certify", "three", "--triple", "1,2,5", "--params", "1", "0", "1", "0"}).status != 0);
  CHECK(run({"nonsense"}).status != 0);
  const auto r = run({"en", "--params", "0.9", "0.1", "1", "0"});
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("--renorm accepts slightly off-normalized input") {
  // |a|^2+|b|^2 = 1 + ~2.8e-7: rejected without --renorm, accepted with it.
  CHECK(run({"en", "--params", "0.7071068811865476", kHalf, "1", "0"}).status != 0);
  const auto r = run({"en", "--renorm", "--params", "0.7071068811865476", kHalf, "1", "0"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["en"].get<double>() - std::log2(1.5)) < 1e-6);
}

TEST_CASE("scan writes the exact CSV header and parseable rows") {
  const std::string path = (std::filesystem::temp_directory_path() / "locc_scan_test.csv").string();
  const auto r = run({"scan", "--grid", "3", "--triple", "1,2,3", "--out", path, "--format", "csv"});
  REQUIRE(r.status == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header ==
        "theta1,theta2,a,b,c,d,x,y,en_rho_numeric,en_rho_closed,en_eta_numeric,en_eta_closed,"
        "cond3,cond4,verdict_three,verdict_four,case_label");
  int rows = 0;
  for (std::string line; std::getline(f, line);) {
    if (line.empty()) continue;
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 16);
  }
  CHECK(rows == 9);
  std::remove(path.c_str());
}

TEST_CASE("scan JSON output round-trips to full precision") {
  const std::string path = (std::filesystem::temp_directory_path() / "locc_scan_test.json").string();
  const auto r = run({"scan", "--grid", "3", "--triple", "1,2,3", "--out", path, "--format", "json"});
  REQUIRE(r.status == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  const auto j = nlohmann::json::parse(f);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 9);
  const auto records = locc::sweep_grid(3, {1, 2, 3});
  for (std::size_t k = 0; k < records.size(); ++k) {
    CHECK(j[k]["en_rho_numeric"].get<double>() == records[k].en_rho_numeric);
    CHECK(j[k]["en_eta_numeric"].get<double>() == records[k].en_eta_numeric);
    CHECK(j[k]["theta1"].get<double>() == records[k].theta1);
    CHECK(j[k]["verdict_three"].get<std::string>() == locc::to_string(records[k].verdict_three));
  }
  std::remove(path.c_str());
}

TEST_CASE("CSV doubles round-trip through 17 significant digits") {
  const auto records = locc::sweep_grid(3, {1, 2, 3});
  std::ostringstream os;
  locc::cli::write_csv(records, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);  // header
  for (const auto& rec : records) {
    REQUIRE(std::getline(is, line));
    std::stringstream row(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 17);
    CHECK(std::stod(cells[8]) == rec.en_rho_numeric);
    CHECK(std::stod(cells[10]) == rec.en_eta_numeric);
    CHECK(cells[16] == rec.case_label);
  }
}

TEST_CASE("validate reports a clean grid and exits zero") {
  const auto r = run({"validate", "--grid", "5"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["record_count"] == 25);
  CHECK(j["max_rho_deviation"].get<double>() <= 1e-9);
}
