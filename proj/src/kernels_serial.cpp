// Serial reference kernels. Deliberately the textbook formulations, with no
// sparsity shortcuts, so they can arbitrate the OpenMP versions in tests.

#include <algorithm>
#include <limits>
#include <queue>

#include "ecc/kernels.hpp"

namespace ecc::kernels::reference {

std::vector<std::uint32_t> bfs_all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(n * n, unreached);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = dist.data() + static_cast<std::size_t>(s) * n;
    std::queue<Vertex> todo;
    row[s] = 0;
    todo.push(s);
    while (!todo.empty()) {
      Vertex u = todo.front();
      todo.pop();
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == unreached) {
          row[w] = row[u] + 1;
          todo.push(w);
        }
      }
    }
  }
  return dist;
}

std::vector<BigInt> eccentricity_entries(const std::vector<std::uint32_t>& dist,
                                         const std::vector<std::uint32_t>& ecc) {
  const std::size_t n = ecc.size();
  std::vector<BigInt> out(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && dist[u * n + v] == std::min(ecc[u], ecc[v])) out[u * n + v] = dist[u * n + v];
  return out;
}

std::vector<BigInt> berkowitz(const IntSymMatrix& a) {
  const std::size_t n = a.order();
  std::vector<BigInt> poly{1};
  if (n == 0) return poly;
  poly.push_back(-a(0, 0));
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<BigInt> col(r), row(r);
    for (std::size_t i = 0; i < r; ++i) {
      col[i] = a(i, r);
      row[i] = a(r, i);
    }
    std::vector<BigInt> t(r + 2);
    t[0] = 1;
    t[1] = -a(r, r);
    std::vector<BigInt> power = col;  // A_r^j * col
    for (std::size_t j = 0; j < r; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += row[i] * power[i];
      t[j + 2] = -dot;
      std::vector<BigInt> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < r; ++c) next[i] += a(i, c) * power[c];
      power = std::move(next);
    }
    std::vector<BigInt> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += t[i - j] * poly[j];
    poly = std::move(updated);
  }
  return poly;
}

}  // namespace ecc::kernels::reference
