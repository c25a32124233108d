#include "ecc/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "ecc/error.hpp"

namespace ecc {

namespace {

std::string set_str(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

std::string triple_str(const InertiaTriple& t) {
  return "(" + std::to_string(t.n_plus) + "," + std::to_string(t.n_minus) + "," + std::to_string(t.n_zero) + ")";
}

VertexSet all_vertices(std::size_t n) {
  VertexSet v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

bool complete(const GraphAnalysis& a) { return a.cls.is_clique_tree && a.cls.num_blocks == 1; }

void require_ct(const GraphAnalysis& a) {
  if (!a.cls.in_ct) throw Error(ErrorCode::NotInCT, "graph is not a clique tree with <= 2 cut-vertices per block");
  if (a.graph.order() < 2) throw Error(ErrorCode::OrderOne, "single vertex");
}

// Collects failed sub-assertions; the record passes iff none failed.
struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, std::string what) {
    if (!ok) items.push_back(std::move(what));
  }
  CheckRecord record(std::string id, std::string ok_note = {}) const {
    if (items.empty()) return CheckRecord::result(std::move(id), true, ok_note.empty() ? std::nullopt : std::optional(ok_note));
    std::string w;
    for (const auto& s : items) w += (w.empty() ? "" : "; ") + s;
    return CheckRecord::result(std::move(id), false, w);
  }
};

// Every entry of rows x cols satisfies pred(u, v, value).
template <class Pred>
bool block_all(const IntSymMatrix& e, const VertexSet& rows, const VertexSet& cols, Pred pred) {
  for (Vertex u : rows)
    for (Vertex v : cols)
      if (!pred(u, v, e(u, v))) return false;
  return true;
}

bool block_const(const IntSymMatrix& e, const VertexSet& rows, const VertexSet& cols, long c) {
  return block_all(e, rows, cols, [c](Vertex u, Vertex v, const BigInt& x) { return u == v ? x == 0 : x == c; });
}

// Rows identical and nowhere zero.
bool block_rank_one_positive(const IntSymMatrix& e, const VertexSet& rows, const VertexSet& cols) {
  if (rows.empty() || cols.empty()) return true;
  return block_all(e, rows, cols, [&](Vertex, Vertex v, const BigInt& x) { return x != 0 && x == e(rows.front(), v); });
}

const VertexSet& dec_block(const GraphAnalysis& a, Vertex x, Vertex y) { return a.dec.blocks[a.dec.block_with(x, y).value()]; }

}  // namespace

CheckRecord CheckRecord::skipped(std::string id, std::string reason) {
  CheckRecord r;
  r.id = std::move(id);
  r.applicable = false;
  r.witness = std::move(reason);
  return r;
}

CheckRecord CheckRecord::result(std::string id, bool ok, std::optional<std::string> witness) {
  CheckRecord r;
  r.id = std::move(id);
  r.applicable = true;
  r.passed = ok;
  r.witness = std::move(witness);
  return r;
}

GraphAnalysis analyze_graph(const Graph& g, const Tolerances& tol) {
  GraphAnalysis a;
  a.graph = g;
  a.dist = all_pairs_distances(g);
  a.profile = eccentricity_profile(a.dist);
  a.dec = decompose(g);
  a.cls = classify(g, a.dec, a.profile);
  a.ecc = eccentricity_matrix(a.dist, a.profile);
  a.poly = char_poly(a.ecc);
  a.inertia = inertia_exact(a.poly);
  a.spectrum = symmetric_eigenvalues(a.ecc, tol.jacobi);
  a.norm = a.ecc.frobenius_norm();
  a.zero_tol = tol.zero_tol > 0.0 ? tol.zero_tol : default_zero_tol(a.norm);
  if (a.cls.in_ct) a.tree = associated_tree(g, a.dec);
  return a;
}

CheckRecord check_center(const GraphAnalysis& a) {
  require_ct(a);
  const auto& actual = a.profile.center;
  VertexSet expected;
  std::string kind;
  if (complete(a)) {
    expected = all_vertices(a.graph.order());
    kind = "complete";
  } else if (a.profile.diameter % 2 == 0) {
    const auto tp = eccentricity_profile(all_pairs_distances(a.tree->tree));
    for (Vertex i : tp.center) expected.push_back(a.tree->vertex_subset[i]);
    kind = "tree centre";
    if (expected.size() != 1) {
      return CheckRecord::result("center", false, "associated tree has " + std::to_string(expected.size()) + " centres");
    }
  } else {
    expected = central_block(a.graph, a.dec, a.profile);
    kind = "central block";
  }
  const bool ok = expected == actual;
  return CheckRecord::result("center", ok, kind + " " + set_str(expected) + (ok ? " = " : " != ") + "C(G) " + set_str(actual));
}

CheckRecord check_inertia(const GraphAnalysis& a) {
  require_ct(a);
  const std::size_t n = a.graph.order();
  const auto& got = a.inertia;
  const std::uint32_t diam = a.profile.diameter;
  if (complete(a)) {
    const InertiaTriple want{1, n - 1, 0};
    return CheckRecord::result("inertia", got == want, "complete: expected " + triple_str(want) + ", got " + triple_str(got));
  }
  if (diam % 2 == 1) {
    const InertiaTriple want{2, 2, n - 4};
    return CheckRecord::result("inertia", got == want, "odd diameter: expected " + triple_str(want) + ", got " + triple_str(got));
  }
  if (diam >= 4) {
    const std::size_t l = diametrally_distinguished(a.graph, a.dist, a.profile).size();
    const InertiaTriple want{l, l, n - 2 * l};
    return CheckRecord::result("inertia", got == want,
                               "even diameter, l=" + std::to_string(l) + ": expected " + triple_str(want) + ", got " + triple_str(got));
  }
  // clique star: rank t+1 and a single positive eigenvalue; the rest from the numeric oracle
  const std::size_t t = a.cls.num_blocks;
  const auto oracle = inertia_float(a.spectrum, a.zero_tol);
  Failures f;
  f.expect(got.rank() == t + 1, "rank " + std::to_string(got.rank()) + " != t+1 = " + std::to_string(t + 1));
  f.expect(got.n_plus == 1, "n_plus = " + std::to_string(got.n_plus));
  f.expect(got == oracle, "exact " + triple_str(got) + " != numeric " + triple_str(oracle));
  return f.record("inertia", "clique star, t=" + std::to_string(t) + ": " + triple_str(got));
}

CheckRecord check_symmetry(const GraphAnalysis& a) {
  require_ct(a);
  Failures f;
  const bool symmetric = is_spectrum_symmetric_exact(a.poly);
  const bool odd = a.profile.diameter % 2 == 1;
  const bool predicted = odd && a.profile.center.size() == 2;
  f.expect(symmetric == predicted, std::string("spectrum ") + (symmetric ? "symmetric" : "asymmetric") + " but |C(G)| = " +
                                       std::to_string(a.profile.center.size()) + ", diameter " + std::to_string(a.profile.diameter));
  const auto witness = asymmetry_witness(a.poly);
  const std::pair<std::size_t, std::size_t> c23{2, 3};
  if (!odd && a.profile.diameter >= 4) {
    f.expect(witness == c23, "even diameter: no nonzero (c2, c3) pair");
  }
  if (odd && !complete(a) && a.profile.center.size() > 2) {
    f.expect(witness == c23, "odd diameter: no nonzero (c2, c3) pair");
    const auto p = odd_partition(a.graph, a.dec, a.dist, a.profile);
    const long k = p.k;
    const BigInt e3 = BigInt(static_cast<unsigned long>(p.w[0].size() * p.w[2].size() * p.w[4].size())) * 2 * (2 * k + 1) *
                      (k + 1) * (k + 1);
    const auto r = reduced(a.poly);
    const BigInt c3 = r.coeff(static_cast<std::size_t>(r.degree()) - 3);
    f.expect(c3 == -e3, "c3 = " + c3.get_str() + " but -|W1||W3||W5|*2(2k+1)(k+1)^2 = " + BigInt(-e3).get_str());
    f.expect(principal_minor_sum(a.ecc, 3) == e3, "size-3 principal minors do not sum to the closed form");
  }
  return f.record("symmetry", symmetric ? "symmetric" : "asymmetric");
}

CheckRecord check_irreducibility(const GraphAnalysis& a) {
  if (a.graph.order() < 2) throw Error(ErrorCode::OrderOne, "single vertex");
  if (!a.cls.in_ct) {
    throw Error(ErrorCode::NotInCT, std::string("irreducible=") + (is_irreducible(a.ecc) ? "true" : "false"));
  }
  return CheckRecord::result("irreducibility", is_irreducible(a.ecc));
}

CheckRecord check_structure(const GraphAnalysis& a) {
  require_ct(a);
  if (a.profile.diameter < 2) throw Error(ErrorCode::DiameterTooSmall, "structure checks need diameter >= 2");
  const auto& t = *a.tree;
  const std::size_t m = t.vertex_subset.size();
  Failures f;

  f.expect(a.dec.count(BlockKind::Leaf) >= 2, "fewer than two leaf-blocks");

  const bool tree_ok = t.tree.connected() && t.tree.size() + 1 == m;
  f.expect(tree_ok, "associated tree is not a tree");
  f.expect(t.tree.size() == a.dec.blocks.size(), "associated tree edge count differs from block count");
  if (!tree_ok) return f.record("structure");

  const auto td = all_pairs_distances(t.tree);
  const auto tp = eccentricity_profile(td);
  f.expect(tp.diameter == a.profile.diameter,
           "diam(T_G) = " + std::to_string(tp.diameter) + " != diam(G) = " + std::to_string(a.profile.diameter));
  for (std::size_t i = 0; i < m; ++i) {
    const Vertex u = t.vertex_subset[i];
    f.expect(tp.ecc[i] == a.profile.ecc[u], "e_G != e_T at vertex " + std::to_string(u));
  }

  const auto et = eccentricity_matrix(td, tp);
  const auto sub = principal_submatrix(a.ecc, t.vertex_subset);
  f.expect(et == sub, "eps(T_G) is not the principal submatrix of eps(G)");
  f.expect(indicator_graph(et) == induced_subgraph(indicator_graph(a.ecc), t.vertex_subset),
           "Gamma(T_G) is not induced in Gamma(G)");

  for (Vertex u = 0; u < a.graph.order(); ++u) {
    if (a.dec.is_cut(u)) continue;
    const std::size_t b = a.dec.vertex_blocks[u].front();
    const auto cuts = a.dec.cuts_of(b);
    if (a.dec.kind[b] == BlockKind::Leaf) {
      f.expect(a.profile.ecc[u] == a.profile.ecc[cuts[0]] + 1, "leaf-block vertex " + std::to_string(u) + ": e(u) != e(w)+1");
    } else if (a.dec.kind[b] == BlockKind::Bridge) {
      f.expect(a.profile.ecc[u] == std::max(a.profile.ecc[cuts[0]], a.profile.ecc[cuts[1]]),
               "bridge-block vertex " + std::to_string(u) + ": e(u) != max(e(w1), e(w2))");
    }
  }

  const auto ts = symmetric_eigenvalues(et);
  f.expect(interlaces(ts, a.spectrum, 1e-9 * std::max(1.0, a.norm)), "spectra do not interlace");

  if (a.profile.diameter % 2 == 0 && a.profile.diameter >= 4) {
    const auto dg = diametrally_distinguished(a.graph, a.dist, a.profile);
    f.expect(std::includes(a.dec.cut_vertices.begin(), a.dec.cut_vertices.end(), dg.begin(), dg.end()),
             "distinguished vertices " + set_str(dg) + " are not all cut-vertices");
  }

  VertexSet ends;
  for (Vertex i = 0; i < m; ++i)
    if (t.tree.degree(i) == 1) ends.push_back(t.vertex_subset[i]);
  f.expect(ends == t.leaf_representatives, "degree-1 tree vertices " + set_str(ends) + " != leaf representatives");

  return f.record("structure", "T_G on " + set_str(t.vertex_subset));
}

CheckRecord check_partition(const GraphAnalysis& a) {
  require_ct(a);
  const auto& e = a.ecc;
  Failures f;
  if (a.profile.diameter % 2 == 1) {
    const auto p = odd_partition(a.graph, a.dec, a.dist, a.profile);
    const long k = p.k;
    const auto& w = p.w;
    const auto zero = [&](int i, int j) { return block_const(e, w[i], w[j], 0); };
    f.expect(zero(0, 0) && zero(0, 1) && zero(1, 1) && zero(2, 2) && zero(2, 3) && zero(3, 3), "diagonal zero blocks");
    f.expect(zero(1, 3) && zero(1, 4) && zero(3, 4) && zero(4, 4), "off-diagonal zero blocks");
    f.expect(block_const(e, w[0], w[2], 2 * k + 1), "W1 x W3 is not (2k+1)J");
    f.expect(block_const(e, w[0], w[4], k + 1) && block_const(e, w[2], w[4], k + 1), "W5 blocks are not (k+1)J");
    f.expect(block_rank_one_positive(e, w[0], w[3]) && block_rank_one_positive(e, w[2], w[1]),
             "P or Q does not have identical nowhere-zero rows");
    if (w[0].empty() || w[2].empty()) {
      f.expect(false, "W1 or W3 empty");
      return f.record("partition");
    }
    const std::vector<Vertex> idx{w[0].front(), w[2].front(), p.z1, p.z2};
    const auto am = select(e, idx);
    f.expect(am == witness_matrix_a(k), "principal submatrix at (u1, u2, z1, z2) differs from A(k)");
    f.expect(inertia_exact(char_poly(am)) == InertiaTriple{2, 2, 0}, "In(A) != (2,2,0)");
    return f.record("partition", "odd, k=" + std::to_string(k) + ", |W| = (" + std::to_string(w[0].size()) + "," +
                                     std::to_string(w[1].size()) + "," + std::to_string(w[2].size()) + "," +
                                     std::to_string(w[3].size()) + "," + std::to_string(w[4].size()) + ")");
  }

  const auto p = even_partition(a.graph, a.dec, a.dist, a.profile);
  const std::size_t l = p.l;
  const long k = p.k;
  const auto& v = p.parts;
  const auto ecc_of = [&](Vertex, Vertex col, const BigInt& x) { return x == a.profile.ecc[col]; };
  for (std::size_t i = 0; i < l; ++i) {
    f.expect(block_const(e, v[i], v[i], 0) && block_const(e, v[l + i], v[l + i], 0) && block_const(e, v[i], v[l + i], 0) &&
                 block_const(e, v[l + i], v[2 * l], 0),
             "zero blocks of branch " + std::to_string(i));
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      f.expect(block_const(e, v[i], v[j], 2 * k), "V_i x V_j is not 2kJ");
      f.expect(block_all(e, v[i], v[l + j], ecc_of), "V_i x V_(l+j) entries differ from e(v)");
      f.expect(block_const(e, v[l + i], v[l + j], 0), "V_(l+i) x V_(l+j) is not zero");
    }
  }
  f.expect(block_const(e, v[2 * l], v[2 * l], 0), "V_(2l+1) is not a zero block");
  // Towards the rest, the far vertices see e(v), except for the noncut
  // vertices of their own block {z, w_i, ...}: those sit at distance k while
  // e(v) = k + 1, so the entry is 0.
  for (std::size_t i = 0; i < l; ++i) {
    const auto own = dec_block(a, p.center, p.distinguished[i]);
    f.expect(block_all(e, v[i], v[2 * l],
                       [&](Vertex, Vertex col, const BigInt& x) {
                         const bool beside = !a.dec.is_cut(col) && std::binary_search(own.begin(), own.end(), col);
                         return beside ? x == 0 : x == a.profile.ecc[col];
                       }),
             "V_i x V_(2l+1) entries differ from e(v)");
  }

  std::vector<Vertex> idx;
  for (std::size_t i = 0; i < l; ++i) {
    if (v[i].empty()) {
      f.expect(false, "V_" + std::to_string(i + 1) + " empty");
      return f.record("partition");
    }
    idx.push_back(v[i].front());
  }
  for (std::size_t i = 0; i < l; ++i) {
    const auto b = a.dec.vertex_blocks[idx[i]].front();
    idx.push_back(a.dec.cuts_of(b).front());
  }
  const auto mm = select(e, idx);
  f.expect(mm == lemma31_matrix(static_cast<std::int64_t>(l), k), "principal submatrix M differs from the block form");
  f.expect(inertia_exact(char_poly(mm)) == InertiaTriple{l, l, 0}, "In(M) != (l,l,0)");
  return f.record("partition", "even, k=" + std::to_string(k) + ", l=" + std::to_string(l));
}

CheckRecord check_five_eigenvalues(const GraphAnalysis& a) {
  require_ct(a);
  if (a.profile.diameter % 2 == 0) throw Error(ErrorCode::EvenDiameter, "needs odd diameter");
  if (a.profile.diameter < 3) throw Error(ErrorCode::DiameterTooSmall, "needs diameter >= 3");
  if (a.profile.center.size() != 2) {
    throw Error(ErrorCode::ParameterOutOfRange, "central block has " + std::to_string(a.profile.center.size()) + " vertices");
  }
  if (a.graph.order() < 5) throw Error(ErrorCode::SizeOutOfRange, "needs n >= 5");
  const auto clusters = cluster_eigenvalues(a.spectrum);
  const bool simple_top = !clusters.empty() && clusters.front().multiplicity == 1;
  const bool ok = clusters.size() == 5 && simple_top;
  return CheckRecord::result("five_eigenvalues", ok, std::to_string(clusters.size()) + " distinct eigenvalues" +
                                                        (simple_top ? "" : ", spectral radius not simple"));
}

CheckRecord check_inertia_agreement(const GraphAnalysis& a) {
  const auto numeric = inertia_float(a.spectrum, a.zero_tol);
  return CheckRecord::result("inertia_agreement", numeric == a.inertia,
                             "exact " + triple_str(a.inertia) + ", numeric " + triple_str(numeric));
}

IntSymMatrix witness_matrix_a(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k));
  const long a = 2 * k + 1;
  const long b = k + 1;
  return IntSymMatrix::from_rows({{0, a, 0, b}, {a, 0, b, 0}, {0, b, 0, 0}, {b, 0, 0, 0}});
}

Spectrum witness_matrix_a_spectrum(std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k));
  const double kd = static_cast<double>(k);
  const double q = std::sqrt(5.0 + 12.0 * kd + 8.0 * kd * kd);
  const double s = 2.0 * kd + 1.0;
  return Spectrum{{(q + s) / 2, (q - s) / 2, -(q - s) / 2, -(q + s) / 2}};
}

IntSymMatrix lemma31_matrix(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::ParameterOutOfRange, "n and k must be >= 1");
  const std::size_t m = static_cast<std::size_t>(n);
  IntSymMatrix a(2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      a.set(i, j, BigInt(static_cast<long>(2 * k)));
      a.set(i, m + j, BigInt(static_cast<long>(2 * k - 1)));
    }
  return a;
}

std::size_t TheoremReport::applicable() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.applicable; }));
}

std::size_t TheoremReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.applicable && c.passed == false; }));
}

TheoremReport verify_analysis(const GraphAnalysis& a, const std::string& graph_id) {
  TheoremReport r;
  r.graph_id = graph_id;
  r.n = a.graph.order();
  r.m = a.graph.size();
  r.is_clique_tree = a.cls.is_clique_tree;
  r.in_ct = a.cls.in_ct;
  r.diameter = a.profile.diameter;
  r.radius = a.profile.radius;
  r.center = a.profile.center;
  r.char_poly = a.poly;
  r.inertia_exact = a.inertia;
  r.spectrum = a.spectrum.eigenvalues;
  r.symmetric = is_spectrum_symmetric_exact(a.poly);
  if (!a.cls.is_clique_tree) r.flags.emplace_back("not_clique_tree");
  else if (!a.cls.in_ct) r.flags.emplace_back("not_in_ct");

  using Check = CheckRecord (*)(const GraphAnalysis&);
  static constexpr std::pair<const char*, Check> suite[] = {
      {"center", check_center},
      {"inertia", check_inertia},
      {"symmetry", check_symmetry},
      {"irreducibility", check_irreducibility},
      {"structure", check_structure},
      {"partition", check_partition},
      {"five_eigenvalues", check_five_eigenvalues},
      {"inertia_agreement", check_inertia_agreement},
  };
  for (const auto& [id, fn] : suite) {
    try {
      r.checks.push_back(fn(a));
    } catch (const Error& e) {
      r.checks.push_back(CheckRecord::skipped(id, e.what()));
    } catch (const std::logic_error& e) {
      // an internal invariant broke: that is a failed check, not an inapplicable one
      r.checks.push_back(CheckRecord::result(id, false, e.what()));
    }
  }
  return r;
}

TheoremReport verify_all(const Graph& g, const std::string& graph_id, const Tolerances& tol) {
  return verify_analysis(analyze_graph(g, tol), graph_id);
}

TheoremReport verify_matrix(const IntSymMatrix& m, const std::string& graph_id, const Tolerances& tol) {
  TheoremReport r;
  r.graph_id = graph_id;
  const std::size_t n = m.order();
  r.n = n;
  if (n == 0) throw Error(ErrorCode::SizeOutOfRange, "empty matrix");

  // eccentricities are the row maxima of an eccentricity matrix
  std::vector<std::uint32_t> ecc(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& x : m.row(i)) ecc[i] = std::max<std::uint32_t>(ecc[i], static_cast<std::uint32_t>(x.get_ui()));
  r.diameter = *std::max_element(ecc.begin(), ecc.end());
  r.radius = *std::min_element(ecc.begin(), ecc.end());
  for (Vertex i = 0; i < n; ++i)
    if (ecc[i] == r.radius) r.center.push_back(i);

  r.char_poly = char_poly(m);
  r.inertia_exact = inertia_exact(r.char_poly);
  const auto spectrum = symmetric_eigenvalues(m, tol.jacobi);
  r.spectrum = spectrum.eigenvalues;
  r.symmetric = is_spectrum_symmetric_exact(r.char_poly);

  const double zt = tol.zero_tol > 0.0 ? tol.zero_tol : default_zero_tol(m.frobenius_norm());
  const auto numeric = inertia_float(spectrum, zt);
  r.checks.push_back(CheckRecord::result("inertia_agreement", numeric == r.inertia_exact,
                                         "exact " + triple_str(r.inertia_exact) + ", numeric " + triple_str(numeric)));

  const auto& in = r.inertia_exact;
  bool fits;
  if (r.diameter == 1) fits = in == InertiaTriple{1, n - 1, 0};
  else if (r.diameter % 2 == 1) fits = n >= 4 && in == InertiaTriple{2, 2, n - 4};
  else if (r.diameter == 2) fits = in.n_plus == 1;
  else fits = in.n_plus == in.n_minus;
  if (!fits) r.flags.emplace_back("outside_ct_inertia_pattern");
  return r;
}

std::vector<TheoremReport> verify_corpus(const std::vector<std::pair<std::string, Graph>>& graphs, const Tolerances& tol) {
  std::vector<TheoremReport> out(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
  const long count = static_cast<long>(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = verify_all(graphs[i].second, graphs[i].first, tol);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace ecc
