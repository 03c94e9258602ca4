#pragma once

#include <random>

#include "latvol/sylvester.hpp"

namespace latvol {

// Deterministic pseudo-random simplices for self-check corpora.  Values are
// drawn with plain modular reduction instead of std::uniform_int_distribution
// so the stream is identical across standard-library implementations.

inline Int corpus_draw(std::mt19937_64& rng, long lo, long hi) {
  return Int(lo + long(rng() % (unsigned long)(hi - lo + 1)));
}

// Nondegenerate simplex with at least one interior lattice point and a
// bounded normalized volume (keeps interior enumeration cheap).  Throws
// after too many rejected draws rather than looping forever.
inline LatticeSimplex random_interior_simplex(std::mt19937_64& rng, unsigned d,
                                              long coord_range = 6,
                                              long max_normalized_volume = 4000) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::vector<IntVec> verts(d + 1, IntVec(d));
    for (auto& v : verts)
      for (auto& c : v) c = corpus_draw(rng, -coord_range, coord_range);
    try {
      LatticeSimplex s(d, std::move(verts));
      if (normalized_volume(s) > max_normalized_volume) continue;
      if (interior_points(s).empty()) continue;
      return s;
    } catch (const singular_matrix_error&) {
      continue;
    }
  }
  throw std::logic_error("random_interior_simplex: no admissible simplex found");
}

// Fixed-size corpus cycling through dimensions 1..max_dim.
inline std::vector<LatticeSimplex> make_corpus(unsigned max_dim,
                                               unsigned long long seed,
                                               unsigned count) {
  std::mt19937_64 rng(seed);
  std::vector<LatticeSimplex> out;
  out.reserve(count);
  for (unsigned i = 0; i < count; ++i)
    out.push_back(random_interior_simplex(rng, 1 + i % max_dim));
  return out;
}

}  // namespace latvol
