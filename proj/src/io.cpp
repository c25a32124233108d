#include "ecc/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ecc/error.hpp"

namespace ecc::io {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
}

std::uint64_t parse_label(const std::string& tok, std::size_t lineno) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(lineno, "expected a nonnegative integer, got '" + tok + "'");
  if (value > 0xFFFFFFFEULL) fail(lineno, "label too large");
  return value;
}

bool skip(const std::vector<std::string>& t) { return t.empty() || t.front().front() == '#'; }

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::uint64_t max_label = 0;
  bool any = false;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto t = tokens(line);
    if (skip(t)) continue;
    if (t.front() == "p") {
      if (declared || !edges.empty()) fail(lineno, "header must come once, before any edge");
      if (t.size() != 2) fail(lineno, "header is 'p <n>'");
      declared = parse_label(t[1], lineno);
      continue;
    }
    if (t.size() == 3) fail(lineno, "weighted edges are not supported");
    if (t.size() != 2) fail(lineno, "expected 'u v'");
    const auto u = parse_label(t[0], lineno);
    const auto w = parse_label(t[1], lineno);
    if (u == w) fail(lineno, "self-loop at vertex " + t[0]);
    if (declared && (u >= *declared || w >= *declared)) fail(lineno, "vertex label outside 0..n-1");
    max_label = std::max({max_label, u, w});
    any = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
  }
  const std::size_t n = declared ? *declared : (any ? max_label + 1 : 0);
  return Graph::build(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "p " << g.order() << '\n';
  for (auto [u, w] : g.edges()) out << u << ' ' << w << '\n';
}

IntSymMatrix parse_matrix(std::istream& in) {
  std::optional<std::size_t> order;
  std::vector<BigInt> data;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto t = tokens(line);
    if (skip(t)) continue;
    if (!order) {
      if (t.size() != 2 || t[0] != "m") fail(lineno, "matrix must start with 'm <order>'");
      order = parse_label(t[1], lineno);
      continue;
    }
    if (data.size() == *order * *order) fail(lineno, "more rows than the declared order");
    if (t.size() != *order) fail(lineno, "row has " + std::to_string(t.size()) + " entries, expected " + std::to_string(*order));
    for (const auto& tok : t) {
      BigInt x;
      if (x.set_str(tok, 10) != 0) fail(lineno, "not an integer: '" + tok + "'");
      data.push_back(std::move(x));
    }
  }
  if (!order) throw Error(ErrorCode::ParseError, "empty matrix file");
  if (data.size() != *order * *order) throw Error(ErrorCode::ParseError, "fewer rows than the declared order");
  try {
    return IntSymMatrix(*order, std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

IntSymMatrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const IntSymMatrix& a, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "m " << a.order() << '\n';
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) out << (j ? " " : "") << a(i, j).get_str();
    out << '\n';
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot rename into " + path.string());
  }
}

}  // namespace ecc::io
