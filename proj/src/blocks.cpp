#include "ecc/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ecc/error.hpp"

namespace ecc {

bool BlockDecomposition::is_cut(Vertex v) const {
  return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::size_t BlockDecomposition::count(BlockKind k) const {
  return static_cast<std::size_t>(std::count(kind.begin(), kind.end(), k));
}

VertexSet BlockDecomposition::cuts_of(std::size_t b) const {
  VertexSet out;
  for (Vertex v : blocks.at(b))
    if (is_cut(v)) out.push_back(v);
  return out;
}

bool BlockDecomposition::is_complete(std::size_t b) const {
  const std::size_t s = blocks.at(b).size();
  return block_edges.at(b) == s * (s - 1) / 2;
}

std::optional<std::size_t> BlockDecomposition::block_with(Vertex u, Vertex v) const {
  for (std::size_t b : vertex_blocks.at(u)) {
    const auto& blk = blocks[b];
    if (std::binary_search(blk.begin(), blk.end(), v)) return b;
  }
  return std::nullopt;
}

BlockDecomposition decompose(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::int64_t unseen = -1;
  std::vector<std::int64_t> disc(n, unseen), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> raw_blocks;
  std::vector<std::size_t> raw_edges;

  struct Frame {
    Vertex v;
    std::int64_t parent;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::int64_t clock = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unseen) continue;
    if (g.degree(root) == 0) {
      disc[root] = clock++;
      raw_blocks.push_back({root});
      raw_edges.push_back(0);
      continue;
    }
    disc[root] = low[root] = clock++;
    frames.push_back({root, -1, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const Vertex v = f.v;
      auto nb = g.neighbors(v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (disc[w] == unseen) {
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = clock++;
          frames.push_back({w, static_cast<std::int64_t>(v), 0});
        } else if (static_cast<std::int64_t>(w) != f.parent && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const std::int64_t parent = f.parent;
      frames.pop_back();
      if (parent < 0) continue;
      const Vertex p = static_cast<Vertex>(parent);
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        // p separates the subtree of v: everything above (p, v) is one block
        VertexSet blk;
        std::size_t edges = 0;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          ++edges;
          blk.push_back(e.first);
          blk.push_back(e.second);
          if (e.first == p && e.second == v) break;
        }
        std::sort(blk.begin(), blk.end());
        blk.erase(std::unique(blk.begin(), blk.end()), blk.end());
        raw_blocks.push_back(std::move(blk));
        raw_edges.push_back(edges);
      }
    }
  }

  std::vector<std::size_t> order(raw_blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return raw_blocks[a] < raw_blocks[b]; });

  BlockDecomposition dec;
  dec.vertex_blocks.resize(n);
  for (std::size_t i : order) {
    for (Vertex x : raw_blocks[i]) dec.vertex_blocks[x].push_back(dec.blocks.size());
    dec.blocks.push_back(std::move(raw_blocks[i]));
    dec.block_edges.push_back(raw_edges[i]);
  }
  for (Vertex x = 0; x < n; ++x)
    if (dec.vertex_blocks[x].size() >= 2) dec.cut_vertices.push_back(x);
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    const std::size_t cuts = dec.cuts_of(b).size();
    dec.kind.push_back(cuts == 0   ? BlockKind::Sole
                       : cuts == 1 ? BlockKind::Leaf
                       : cuts == 2 ? BlockKind::Bridge
                                   : BlockKind::Other);
  }
  return dec;
}

bool in_ct(const BlockDecomposition& dec) {
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
    if (!dec.is_complete(b) || dec.kind[b] == BlockKind::Other) return false;
  }
  return true;
}

bool is_diamond_free_chordal(const Graph& g) {
  const std::size_t n = g.order();
  // chordal: repeatedly strip a simplicial vertex
  std::vector<char> alive(n, 1);
  for (std::size_t removed = 0; removed < n; ++removed) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (!alive[v]) continue;
      VertexSet nb;
      for (Vertex w : g.neighbors(v))
        if (alive[w]) nb.push_back(w);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = g.adjacent(nb[i], nb[j]);
      if (clique) {
        alive[v] = 0;
        found = true;
      }
    }
    if (!found) return false;
  }
  // diamond: four vertices inducing exactly five edges
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) +
                        g.adjacent(b, d) + g.adjacent(c, d);
          if (e == 5) return false;
        }
  return true;
}

ClassReport classify(const Graph& g, const BlockDecomposition& dec, const EccentricityProfile& profile) {
  ClassReport r;
  r.num_blocks = dec.blocks.size();
  r.is_clique_tree = true;
  for (std::size_t b = 0; b < dec.blocks.size(); ++b) r.is_clique_tree = r.is_clique_tree && dec.is_complete(b);
  r.in_ct = r.is_clique_tree && in_ct(dec);
  r.diameter = profile.diameter;
  r.diameter_parity = profile.diameter % 2 == 0 ? Parity::Even : Parity::Odd;
  r.in_ct_ge2 = r.in_ct && profile.diameter >= 2;
  if (g.order() <= 12 && is_diamond_free_chordal(g) != r.is_clique_tree) {
    throw std::logic_error("block-completeness and diamond-free chordal recognition disagree");
  }
  return r;
}

ClassReport classify(const Graph& g) {
  return classify(g, decompose(g), eccentricity_profile(all_pairs_distances(g)));
}

AssociatedTree associated_tree(const Graph& g, const BlockDecomposition& dec) {
  if (!in_ct(dec)) throw Error(ErrorCode::NotInCT, "associated tree needs a clique tree with <= 2 cut-vertices per block");
  AssociatedTree t;
  if (dec.blocks.size() <= 1) {
    t.vertex_subset = g.order() >= 2 ? VertexSet{0, 1} : VertexSet{0};
  } else {
    t.vertex_subset = dec.cut_vertices;
    for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
      if (dec.kind[b] != BlockKind::Leaf) continue;
      for (Vertex x : dec.blocks[b]) {
        if (!dec.is_cut(x)) {  // blocks are sorted, so this is the minimal label
          t.leaf_representatives.push_back(x);
          break;
        }
      }
    }
    std::sort(t.leaf_representatives.begin(), t.leaf_representatives.end());
    t.vertex_subset.insert(t.vertex_subset.end(), t.leaf_representatives.begin(), t.leaf_representatives.end());
    std::sort(t.vertex_subset.begin(), t.vertex_subset.end());
  }
  t.tree = induced_subgraph(g, t.vertex_subset);
  return t;
}

VertexSet diametrally_distinguished(const Graph& g, const DistanceMatrix& d, const EccentricityProfile& profile) {
  if (profile.diameter % 2 != 0) throw Error(ErrorCode::OddDiameter, "diametrally distinguished vertices need even diameter");
  if (profile.center.size() != 1) throw Error(ErrorCode::MultipleCenters, std::to_string(profile.center.size()) + " centres");
  const Vertex z = profile.center.front();
  const auto pairs = diametral_pairs(d);
  VertexSet out;
  for (Vertex w : g.neighbors(z)) {
    for (auto [x, y] : pairs) {
      if (on_shortest_path(d, x, w, y)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

namespace {

// Centre of the associated tree, in G's labels.
VertexSet tree_center(const AssociatedTree& t) {
  const auto profile = eccentricity_profile(all_pairs_distances(t.tree));
  VertexSet out;
  for (Vertex i : profile.center) out.push_back(t.vertex_subset[i]);
  return out;
}

VertexSet filter(const VertexSet& in, auto pred) {
  VertexSet out;
  for (Vertex x : in)
    if (pred(x)) out.push_back(x);
  return out;
}

void require_partition(std::size_t n, const auto& parts, const char* what) {
  std::vector<int> hits(n, 0);
  for (const auto& p : parts)
    for (Vertex x : p) ++hits.at(x);
  for (int h : hits)
    if (h != 1) throw std::logic_error(std::string(what) + " is not a partition of the vertex set");
}

}  // namespace

VertexSet central_block(const Graph& g, const BlockDecomposition& dec, const EccentricityProfile& profile) {
  if (!in_ct(dec)) throw Error(ErrorCode::NotInCT, "central block");
  if (profile.diameter % 2 == 0) throw Error(ErrorCode::EvenDiameter, "central block needs odd diameter");
  const auto t = associated_tree(g, dec);
  const auto zc = tree_center(t);
  if (zc.size() != 2) throw std::logic_error("odd-diameter tree without two centres");
  const auto b = dec.block_with(zc[0], zc[1]);
  if (!b) throw std::logic_error("tree centres not in a common block");
  return dec.blocks[*b];
}

OddPartition odd_partition(const Graph& g, const BlockDecomposition& dec, const DistanceMatrix& d,
                           const EccentricityProfile& profile) {
  if (!in_ct(dec)) throw Error(ErrorCode::NotInCT, "odd partition");
  if (profile.diameter % 2 == 0) throw Error(ErrorCode::EvenDiameter, "odd partition needs odd diameter");
  if (profile.diameter < 3) throw Error(ErrorCode::DiameterTooSmall, "odd partition needs diameter >= 3");
  OddPartition p;
  p.k = (profile.diameter - 1) / 2;
  const auto t = associated_tree(g, dec);
  const auto zc = tree_center(t);
  p.z1 = zc.at(0);
  p.z2 = zc.at(1);
  p.central_block = dec.blocks[dec.block_with(p.z1, p.z2).value()];
  const Graph cut = remove_edges_within(g, p.central_block);
  const auto t1 = component_of(cut, p.z1);
  const auto t2 = component_of(cut, p.z2);
  const auto k = p.k;
  p.w[0] = filter(t1, [&](Vertex u) { return d(u, p.z1) == k; });
  p.w[1] = filter(t1, [&](Vertex u) { return d(u, p.z1) < k; });
  p.w[2] = filter(t2, [&](Vertex u) { return d(u, p.z2) == k; });
  p.w[3] = filter(t2, [&](Vertex u) { return d(u, p.z2) < k; });
  p.w[4] = filter(p.central_block, [&](Vertex u) { return u != p.z1 && u != p.z2; });
  require_partition(g.order(), p.w, "odd partition");
  return p;
}

EvenPartition even_partition(const Graph& g, const BlockDecomposition& dec, const DistanceMatrix& d,
                             const EccentricityProfile& profile) {
  if (!in_ct(dec)) throw Error(ErrorCode::NotInCT, "even partition");
  if (profile.diameter % 2 != 0) throw Error(ErrorCode::OddDiameter, "even partition needs even diameter");
  if (profile.diameter < 4) throw Error(ErrorCode::DiameterTooSmall, "even partition needs diameter >= 4");
  EvenPartition p;
  p.k = profile.diameter / 2;
  p.distinguished = diametrally_distinguished(g, d, profile);
  p.center = profile.center.front();
  p.l = p.distinguished.size();
  p.parts.assign(2 * p.l + 1, {});
  std::vector<char> taken(g.order(), 0);
  for (std::size_t i = 0; i < p.l; ++i) {
    const Vertex w = p.distinguished[i];
    const auto b = dec.block_with(p.center, w).value();
    const auto ti = component_of(remove_edges_within(g, dec.blocks[b]), w);
    p.parts[i] = filter(ti, [&](Vertex u) { return d(u, p.center) == p.k; });
    p.parts[p.l + i] = filter(ti, [&](Vertex u) { return d(u, w) + 1 < p.k; });
    for (Vertex u : ti) taken[u] = 1;
  }
  for (Vertex u = 0; u < g.order(); ++u)
    if (!taken[u]) p.parts[2 * p.l].push_back(u);
  require_partition(g.order(), p.parts, "even partition");
  return p;
}

}  // namespace ecc
