#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <string>

#include "ecc/kernels.hpp"

namespace ecc::kernels {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Below these sizes a parallel region costs more than it saves.
constexpr std::size_t kBfsGrain = 64;
constexpr std::size_t kMatvecGrain = 48;

void bfs_from(const Graph& g, Vertex source, std::uint32_t* row, std::vector<Vertex>& queue) {
  const std::size_t n = g.order();
  std::fill(row, row + n, kUnreached);
  queue.clear();
  queue.push_back(source);
  row[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (row[w] == kUnreached) {
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

std::vector<std::uint32_t> bfs_all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> dist(n * n);
#pragma omp parallel if (n >= kBfsGrain)
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      bfs_from(g, static_cast<Vertex>(s), dist.data() + s * n, queue);
    }
  }
  return dist;
}

std::vector<BigInt> eccentricity_entries(const std::vector<std::uint32_t>& dist,
                                         const std::vector<std::uint32_t>& ecc) {
  const std::size_t n = ecc.size();
  std::vector<BigInt> out(n * n);
#pragma omp parallel for schedule(static) if (n >= kBfsGrain)
  for (std::int64_t u = 0; u < static_cast<std::int64_t>(n); ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint32_t d = dist[u * n + v];
      if (d != 0 && d == std::min(ecc[u], ecc[v])) out[u * n + v] = d;
    }
  }
  return out;
}

std::vector<BigInt> berkowitz(const IntSymMatrix& a) {
  const std::size_t n = a.order();
  std::vector<BigInt> poly{1};
  if (n == 0) return poly;
  poly.push_back(-a(0, 0));

  std::vector<BigInt> v, next, toeplitz, updated;
  for (std::size_t r = 1; r < n; ++r) {
    // toeplitz = [1, -a_rr, -R C, -R A_r C, ..., -R A_r^{r-1} C]
    toeplitz.assign(r + 2, 0);
    toeplitz[0] = 1;
    toeplitz[1] = -a(r, r);
    v.assign(r, 0);
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    next.assign(r, 0);
    for (std::size_t j = 0; j < r; ++j) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (sgn(a(r, i)) != 0) mpz_addmul(dot.get_mpz_t(), a(r, i).get_mpz_t(), v[i].get_mpz_t());
      }
      toeplitz[j + 2] = -dot;
      if (j + 1 == r) break;
#pragma omp parallel for schedule(static) if (r >= kMatvecGrain)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(r); ++i) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < r; ++c) {
          if (sgn(a(i, c)) != 0) mpz_addmul(acc.get_mpz_t(), a(i, c).get_mpz_t(), v[c].get_mpz_t());
        }
        next[i] = std::move(acc);
      }
      std::swap(v, next);
    }

    // Lower-triangular Toeplitz (r+2) x (r+1) times poly.
    updated.assign(r + 2, 0);
#pragma omp parallel for schedule(static) if (r >= kMatvecGrain)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(r + 2); ++i) {
      BigInt acc = 0;
      const std::size_t hi = std::min<std::size_t>(i, r);
      for (std::size_t j = 0; j <= hi; ++j) {
        mpz_addmul(acc.get_mpz_t(), toeplitz[i - j].get_mpz_t(), poly[j].get_mpz_t());
      }
      updated[i] = std::move(acc);
    }
    std::swap(poly, updated);
  }
  return poly;
}

int thread_cap() {
  int cap = omp_get_num_procs();
  if (const char* env = std::getenv("ECC_SPECTRA_THREADS")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) cap = static_cast<int>(std::min<long>(value, 1 << 16));
  }
  return std::max(cap, 1);
}

void apply_thread_cap() { omp_set_num_threads(std::min(thread_cap(), omp_get_max_threads())); }

}  // namespace ecc::kernels
