#pragma once

// Small integral representations of Z/2 and Z/2 x Z/2 in rank <= 3: all
// involutions with entries in {-1, 0, 1}, up to conjugation by signed
// permutation matrices.

#include <algorithm>
#include <map>
#include <vector>

#include "prasad/galois_lattices.hpp"

namespace oracle {

using prasad::Mat;

inline std::vector<Mat> signed_permutations(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Mat> out;
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      Mat P = Mat::Zero(n, n);
      for (int i = 0; i < n; ++i) P(perm[i], i) = (signs >> i & 1) ? -1 : 1;
      out.push_back(P);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::vector<long long> flatten(const std::vector<Mat>& ms) {
  std::vector<long long> k;
  for (const Mat& m : ms)
    for (Eigen::Index i = 0; i < m.size(); ++i) k.push_back(m(i));
  return k;
}

inline std::vector<Mat> involutions(int n) {
  std::vector<Mat> out;
  const int cells = n * n;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= 3;
  const Mat I = Mat::Identity(n, n);
  for (long long code = 0; code < total; ++code) {
    Mat g(n, n);
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      g(i) = c % 3 - 1;
      c /= 3;
    }
    if (g * g == I) out.push_back(g);
  }
  return out;
}

// Representatives of tuples of commuting involutions (k = 1 or 2 generators).
inline std::vector<prasad::GaloisLattice> lattice_zoo(int n, int k) {
  const auto inv = involutions(n);
  const auto conj = signed_permutations(n);
  std::map<std::vector<long long>, std::vector<Mat>> reps;
  auto canonical = [&](const std::vector<Mat>& gs) {
    std::vector<long long> best;
    for (const Mat& P : conj) {
      std::vector<Mat> c;
      for (const Mat& g : gs) c.push_back(P.transpose() * g * P);
      auto key = flatten(c);
      if (best.empty() || key < best) best = key;
    }
    return best;
  };
  if (k == 1) {
    for (const Mat& g : inv) reps.emplace(canonical({g}), std::vector<Mat>{g});
  } else {
    for (size_t i = 0; i < inv.size(); ++i)
      for (size_t j = 0; j < inv.size(); ++j)
        if (inv[i] * inv[j] == inv[j] * inv[i]) {
          std::vector<Mat> gs{inv[i], inv[j]};
          reps.emplace(canonical(gs), gs);
        }
  }
  std::vector<prasad::GaloisLattice> out;
  for (auto& [key, gs] : reps) out.emplace_back(std::vector<int>(gs.size(), 2), gs, n);
  return out;
}

}  // namespace oracle
