#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecc/error.hpp"
#include "ecc/fixtures.hpp"
#include "ecc/generators.hpp"
#include "ecc/io.hpp"
#include "ecc/kernels.hpp"
#include "ecc/report.hpp"
#include "ecc/theorems.hpp"

namespace ecc::cli {

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kDisconnected = 3;

struct Options {
  std::vector<std::string> inputs;
  std::string format = "edges";
  std::string output = "json";
  std::string out;
  std::string out_dir = ".";
  std::string fixtures_dir;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  bool fixtures_only = false;
  double tol = 0.0;
  double zero_tol = 0.0;
};

Tolerances tolerances(const Options& o) {
  Tolerances t;
  if (o.tol > 0.0) t.jacobi.tol = o.tol;
  t.zero_tol = o.zero_tol;
  return t;
}

std::string render(const std::vector<TheoremReport>& reports, const std::string& output) {
  std::ostringstream s;
  if (output == "json") {
    if (reports.size() == 1) {
      s << report::to_json(reports.front()).dump(2) << '\n';
    } else {
      auto arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(report::to_json(r));
      s << arr.dump(2) << '\n';
    }
  } else if (output == "csv") {
    s << report::csv_header() << '\n';
    for (const auto& r : reports) s << report::to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) s << report::to_text(r);
  }
  return s.str();
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kOk;
  }
  try {
    io::write_file_atomic(path, text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  const auto tol = tolerances(o);
  std::vector<TheoremReport> reports;
  for (const auto& path : o.inputs) {
    const std::string id = fs::path(path).stem().string();
    try {
      if (o.format == "matrix") {
        reports.push_back(verify_matrix(io::read_matrix(path), id, tol));
      } else {
        reports.push_back(verify_all(io::read_edge_list(path), id, tol));
      }
    } catch (const Error& e) {
      err << "error: " << path << ": " << e.what() << '\n';
      if (e.code() == ErrorCode::GraphDisconnected) return kDisconnected;
      if (e.code() == ErrorCode::NoConvergence) return kCheckFailed;
      return kBadInput;
    }
  }
  return emit(render(reports, o.output), o.out, out, err);
}

void print_failures(const TheoremReport& r, std::ostream& err) {
  for (const auto& c : r.checks)
    if (c.applicable && c.passed == false) err << r.graph_id << ": " << c.id << " failed: " << c.witness.value_or("") << '\n';
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto tol = tolerances(o);
  // Matrix fixtures are verified inline; graphs go through verify_corpus and
  // are slotted back so the output follows catalogue order.
  std::vector<std::optional<TheoremReport>> reports;
  std::vector<std::size_t> slot;
  std::vector<std::pair<std::string, Graph>> graphs;
  auto add_graph = [&](std::string id, Graph g) {
    slot.push_back(reports.size());
    reports.emplace_back();
    graphs.emplace_back(std::move(id), std::move(g));
  };
  for (const auto& info : fixture_catalog()) {
    const std::string name(info.name);
    try {
      if (!o.fixtures_dir.empty()) {
        const auto path = fs::path(o.fixtures_dir) / std::string(info.file);
        if (path.extension() == ".matrix") reports.emplace_back(verify_matrix(io::read_matrix(path), name, tol));
        else add_graph(name, io::read_edge_list(path));
      } else {
        auto value = fixture(name);
        if (auto* m = std::get_if<IntSymMatrix>(&value)) reports.emplace_back(verify_matrix(*m, name, tol));
        else add_graph(name, std::get<Graph>(std::move(value)));
      }
    } catch (const Error& e) {
      err << "error: fixture " << name << ": " << e.what() << '\n';
      return kBadInput;
    }
  }
  if (!o.fixtures_only) {
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::uint64_t s = o.seed + i;
      add_graph("seed-" + std::to_string(s), corpus_instance(s));
    }
  }
  try {
    auto graph_reports = verify_corpus(graphs, tol);
    for (std::size_t i = 0; i < graph_reports.size(); ++i) reports[slot[i]] = std::move(graph_reports[i]);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::GraphDisconnected ? kDisconnected : kBadInput;
  }

  std::size_t failures = 0;
  out << report::csv_header() << '\n';
  for (const auto& r : reports) {
    out << report::to_csv_row(*r) << '\n';
    failures += r->failures();
    print_failures(*r, err);
  }
  err << reports.size() << " graphs checked, " << failures << " failures\n";
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_generate(const Options& o, std::ostream& err) {
  if (o.count == 0) return kOk;
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec || !fs::is_directory(o.out_dir)) {
    err << "error: cannot use output directory " << o.out_dir << '\n';
    return kBadInput;
  }
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t s = o.seed + i;
    const Graph g = corpus_instance(s);
    std::ostringstream text;
    io::write_edge_list(text, g, "clique tree, seed " + std::to_string(s));
    try {
      io::write_file_atomic(fs::path(o.out_dir) / ("ct_" + std::to_string(s) + ".edges"), text.str());
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kBadInput;
    }
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  kernels::apply_thread_cap();

  CLI::App app{"Eccentricity matrices of clique trees: spectra, inertia and structural checks"};
  app.require_subcommand(1);
  Options o;

  auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "Jacobi convergence tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--zero-tol", o.zero_tol, "numeric zero threshold for inertia")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "report on edge-list or matrix files");
  analyze->add_option("inputs", o.inputs, "input files")->required();
  analyze->add_option("--format", o.format, "input format")->check(CLI::IsMember({"edges", "matrix"}));
  analyze->add_option("--output", o.output, "report format")->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->add_option("--out", o.out, "write the report to this file");
  add_tol(analyze);

  auto* verify = app.add_subcommand("verify", "run every check on the fixtures and a seeded corpus");
  verify->add_option("--count", o.count, "number of random clique trees");
  verify->add_option("--seed", o.seed, "first corpus seed");
  verify->add_flag("--fixtures-only", o.fixtures_only, "skip the random corpus");
  verify->add_option("--fixtures-dir", o.fixtures_dir, "read fixtures from files in this directory");
  add_tol(verify);

  auto* generate = app.add_subcommand("generate", "write seeded random clique trees as edge lists");
  generate->add_option("--count", o.count, "number of graphs");
  generate->add_option("--seed", o.seed, "first seed");
  generate->add_option("--out", o.out_dir, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  if (analyze->parsed()) return cmd_analyze(o, out, err);
  if (verify->parsed()) return cmd_verify(o, out, err);
  return cmd_generate(o, err);
}

}  // namespace ecc::cli
