#include <doctest.h>

#include <cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecc/error.hpp"
#include "ecc/generators.hpp"
#include "ecc/io.hpp"
#include "ecc/report.hpp"
#include "support.hpp"

using namespace ecc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ecc-spectra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture_file(const char* name) { return (fs::path(ECC_FIXTURES_DIR) / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const char* name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("JSON round trip") {
  for (const char* name : {"G1", "G2", "G3", "triangle_pendants"}) {
    CAPTURE(name);
    const auto j = report::to_json(verify_all(test::fixture_graph(name), name));
    CHECK(report::to_json(report::from_json(j)) == j);
    CHECK(report::to_json(report::from_json(nlohmann::json::parse(j.dump()))) == j);
  }
  const auto h = report::to_json(verify_matrix(test::fixture_matrix("H1_matrix"), "H1"));
  CHECK(h["m"].is_null());
  CHECK(report::to_json(report::from_json(h)) == h);
  CHECK_THROWS(report::from_json(nlohmann::json::object()));
}

TEST_CASE("JSON fields") {
  const auto j = report::to_json(verify_all(test::fixture_graph("G1"), "G1"));
  CHECK(j["graph_id"] == "G1");
  CHECK(j["n"] == 11);
  CHECK(j["inertia_exact"] == nlohmann::json::array({2, 2, 7}));
  CHECK(j["char_poly"][7] == "320");
  CHECK(j["char_poly"][9] == "-216");
  CHECK(j["class"]["in_ct"] == true);
  CHECK(j["class"]["diameter"] == 3);
  CHECK(j["symmetric"] == true);
  CHECK(j["checks"].size() == 8);
  CHECK(report::round12(1.0 / 3.0) == 0.333333333333);
  CHECK(report::round12(0.0) == 0.0);
}

TEST_CASE("CSV and text") {
  const auto r = verify_all(test::fixture_graph("G1"), "G1");
  CHECK(report::csv_header() == "graph_id,n,m,in_ct,diameter,radius,n_plus,n_minus,n_zero,symmetric,applicable,failures,flags");
  const auto row = report::to_csv_row(r);
  CHECK(row.rfind("G1,11,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 12);
  const auto text = report::to_text(r);
  CHECK(text.find("x^7") != std::string::npos);
  CHECK(text.find("216") != std::string::npos);
  CHECK(text.find("(2, 2, 7)") != std::string::npos);
}

TEST_CASE("analyze") {
  const auto g1 = run({"analyze", fixture_file("g1.edges")});
  REQUIRE(g1.code == 0);
  const auto j = nlohmann::json::parse(g1.out);
  CHECK(j["inertia_exact"] == nlohmann::json::array({2, 2, 7}));
  CHECK(j["graph_id"] == "g1");
  CHECK(report::to_json(report::from_json(j)) == j);

  const auto h1 = run({"analyze", "--format", "matrix", fixture_file("h1.matrix")});
  REQUIRE(h1.code == 0);
  CHECK(nlohmann::json::parse(h1.out)["inertia_exact"] == nlohmann::json::array({3, 3, 3}));

  const auto both = run({"analyze", "--output", "csv", fixture_file("g1.edges"), fixture_file("g3.edges")});
  CHECK(both.code == 0);
  CHECK(std::count(both.out.begin(), both.out.end(), '\n') == 3);
  const auto arr = run({"analyze", fixture_file("g1.edges"), fixture_file("g2.edges")});
  CHECK(nlohmann::json::parse(arr.out).size() == 2);
  CHECK(run({"analyze", "--output", "text", fixture_file("g1.edges")}).out.find("x^7") != std::string::npos);

  // repeated runs are byte-identical
  CHECK(run({"analyze", fixture_file("g3.edges")}).out == run({"analyze", fixture_file("g3.edges")}).out);
}

TEST_CASE("analyze error paths") {
  const auto dir = scratch("ecc_cli_analyze");
  std::ofstream(dir / "split.edges") << "p 4\n0 1\n2 3\n";
  std::ofstream(dir / "bad.edges") << "0 1 7\n";
  std::ofstream(dir / "asym.matrix") << "m 2\n0 1\n2 0\n";

  CHECK(run({"analyze", (dir / "missing.edges").string()}).code == 2);
  CHECK(run({"analyze", (dir / "split.edges").string()}).code == 3);
  CHECK(run({"analyze", (dir / "bad.edges").string()}).code == 2);
  CHECK(run({"analyze", "--format", "matrix", (dir / "asym.matrix").string()}).code == 2);
  CHECK(run({"analyze", "--tol", "-1", fixture_file("g1.edges")}).code == 2);
  CHECK(run({"analyze", "--zero-tol", "0", fixture_file("g1.edges")}).code == 2);
  CHECK(run({"analyze", "--output", "xml", fixture_file("g1.edges")}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto written = run({"analyze", "--out", (dir / "r.json").string(), fixture_file("g1.edges")});
  CHECK(written.code == 0);
  CHECK(written.out.empty());
  CHECK(nlohmann::json::parse(slurp(dir / "r.json"))["n"] == 11);
  CHECK(run({"analyze", "--out", (dir / "no" / "r.json").string(), fixture_file("g1.edges")}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("generate") {
  const auto a = scratch("ecc_cli_gen_a");
  const auto b = scratch("ecc_cli_gen_b");
  CHECK(run({"generate", "--count", "3", "--seed", "5", "--out", a.string()}).code == 0);
  CHECK(run({"generate", "--count", "3", "--seed", "5", "--out", b.string()}).code == 0);
  for (const char* f : {"ct_5.edges", "ct_6.edges", "ct_7.edges"}) {
    CAPTURE(f);
    REQUIRE(fs::exists(a / f));
    CHECK(slurp(a / f) == slurp(b / f));
  }
  CHECK(std::distance(fs::directory_iterator(a), {}) == 3);
  CHECK(io::read_edge_list(a / "ct_6.edges") == corpus_instance(6));
  // regenerating over existing files yields the same bytes
  const auto before = slurp(a / "ct_5.edges");
  CHECK(run({"generate", "--count", "1", "--seed", "5", "--out", a.string()}).code == 0);
  CHECK(slurp(a / "ct_5.edges") == before);
  const auto analyzed = run({"analyze", (a / "ct_5.edges").string()});
  CHECK(analyzed.code == 0);
  CHECK(nlohmann::json::parse(analyzed.out)["class"]["in_ct"] == true);

  const auto empty = scratch("ecc_cli_gen_empty");
  CHECK(run({"generate", "--count", "0", "--out", (empty / "sub").string()}).code == 0);
  CHECK_FALSE(fs::exists(empty / "sub"));
  std::ofstream(empty / "file") << "x";
  CHECK(run({"generate", "--count", "1", "--out", (empty / "file").string()}).code == 2);
  for (const auto& d : {a, b, empty}) fs::remove_all(d);
}

TEST_CASE("verify") {
  const auto fx = run({"verify", "--fixtures-only"});
  CHECK(fx.code == 0);
  CHECK(std::count(fx.out.begin(), fx.out.end(), '\n') == 8);
  CHECK(fx.err.find("7 graphs checked, 0 failures") != std::string::npos);

  const auto from_files = run({"verify", "--fixtures-only", "--fixtures-dir", ECC_FIXTURES_DIR});
  CHECK(from_files.code == 0);
  CHECK(from_files.out == fx.out);

  const auto corpus = run({"verify", "--count", "20", "--seed", "3"});
  CHECK(corpus.code == 0);
  CHECK(corpus.err.find("27 graphs checked, 0 failures") != std::string::npos);
  CHECK(corpus.out.find("\nseed-22,") != std::string::npos);

  const auto dir = scratch("ecc_cli_verify");
  for (const auto& e : fs::directory_iterator(ECC_FIXTURES_DIR)) fs::copy(e.path(), dir / e.path().filename());
  std::ofstream(dir / "g1.edges", std::ios::trunc) << "p 3\n0 1\n1 2 9\n";
  CHECK(run({"verify", "--fixtures-only", "--fixtures-dir", dir.string()}).code == 2);
  std::ofstream(dir / "g1.edges", std::ios::trunc) << "p 4\n0 1\n2 3\n";
  CHECK(run({"verify", "--fixtures-only", "--fixtures-dir", dir.string()}).code == 3);
  CHECK(run({"verify", "--fixtures-only", "--fixtures-dir", (dir / "nowhere").string()}).code == 2);
  fs::remove_all(dir);
}
