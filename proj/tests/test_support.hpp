#pragma once

// Test-only oracles. Nothing here calls the incremental reduction used by
// Word; reduction is done by repeated rescanning instead.

#include <cstdint>
#include <random>
#include <vector>

#include "autfn/automorphism.hpp"
#include "autfn/word.hpp"

namespace autfn::testing {

/// Cancels adjacent inverse pairs by rescanning until nothing changes.
inline std::vector<int> naive_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::vector<int> values(const Word& w) {
  std::vector<int> out;
  for (Letter l : w) out.push_back(l.value());
  return out;
}

inline std::vector<int> naive_inverse(const std::vector<int>& w) {
  std::vector<int> r(w.rbegin(), w.rend());
  for (int& x : r) x = -x;
  return r;
}

/// Substitutes images (as raw value lists) letter by letter, reducing only
/// at the end.
inline std::vector<int> naive_apply(const FreeAutomorphism& f,
                                    const std::vector<int>& w) {
  std::vector<int> raw;
  for (int x : w) {
    auto img = values(f.images()[std::abs(x) - 1]);
    if (x < 0) img = naive_inverse(img);
    raw.insert(raw.end(), img.begin(), img.end());
  }
  return naive_reduce(raw);
}

inline std::vector<Letter> random_letters(std::mt19937_64& rng, int rank,
                                          std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::bernoulli_distribution neg(0.5);
  std::vector<Letter> out(len(rng));
  for (Letter& l : out) l = Letter(idx(rng), neg(rng) ? -1 : 1);
  return out;
}

inline Word random_word(std::mt19937_64& rng, int rank, std::size_t max_len) {
  auto raw = random_letters(rng, rank, max_len);
  return Word(rank, raw);
}

/// A random Nielsen map E_ab at the given rank.
inline FreeAutomorphism random_nielsen(std::mt19937_64& rng, int rank) {
  std::uniform_int_distribution<int> idx(1, rank);
  std::bernoulli_distribution neg(0.5);
  int i = idx(rng);
  int j = idx(rng);
  while (j == i) j = idx(rng);
  return nielsen(Letter(i, neg(rng) ? -1 : 1), Letter(j, neg(rng) ? -1 : 1), rank);
}

/// Exact determinant by cofactor expansion; only for tiny matrices.
inline long long cofactor_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    long long sub = cofactor_det(minor);
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * sub;
  }
  return det;
}

}  // namespace autfn::testing
