#pragma once

// (a, b) over Q_p by searching for a primitive zero of a x^2 + b y^2 - z^2
// modulo p^2. For p odd and v(a), v(b) <= 1 such a zero lifts by Hensel.

#include <vector>

namespace oracle {

inline int hilbert_by_solutions(long long p, long long a, long long b) {
  const long long m = p * p;
  std::vector<std::vector<long long>> roots(m);
  for (long long z = 0; z < m; ++z) roots[(z * z) % m].push_back(z);
  auto md = [m](long long x) { return ((x % m) + m) % m; };
  for (long long x = 0; x < m; ++x)
    for (long long y = 0; y < m; ++y) {
      long long r = md(md(a) * md(x * x) + md(b) * md(y * y));
      for (long long z : roots[r])
        if (x % p != 0 || y % p != 0 || z % p != 0) return 1;
    }
  return -1;
}

// Legendre symbol by listing the squares of (Z/p)^x.
inline int legendre_by_enumeration(long long p, long long a) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  for (long long x = 1; x < p; ++x)
    if ((x * x) % p == a) return 1;
  return -1;
}

inline long long least_nonresidue(long long p) {
  for (long long a = 2; a < p; ++a)
    if (legendre_by_enumeration(p, a) == -1) return a;
  return 0;
}

}  // namespace oracle
