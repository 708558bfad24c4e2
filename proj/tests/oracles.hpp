#pragma once

// Test-only brute-force enumerators, independent of the library's operator
// implementations. Expected values in the suites are computed (or frozen)
// from these.

#include <vector>

namespace oracles {

// All partitions of n as weakly increasing part lists (n = 0 gives {{}}).
inline std::vector<std::vector<long long>> partitions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  // parts weakly increasing from the back: extend with parts >= min.
  auto rec = [&](auto&& self, long long rest, long long minp) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = minp; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

inline long long partition_count(long long n) { return static_cast<long long>(partitions_of(n).size()); }

// All compositions of n, order significant.
inline std::vector<std::vector<long long>> compositions_of(long long n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  auto rec = [&](auto&& self, long long rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long long p = 1; p <= rest; ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

inline long long composition_count(long long n) { return static_cast<long long>(compositions_of(n).size()); }

// dim of the degree-(m,n) weight space of the negative half for the rank-2
// type A datum, counted by enumerating multisets of the three positive
// roots alpha_1, alpha_2, alpha_1 + alpha_2.
inline long long kostant_a2(long long m, long long n) {
  long long count = 0;
  for (long long k3 = 0; k3 <= m && k3 <= n; ++k3) {
    // remaining (m - k3, n - k3) forced on alpha_1, alpha_2
    ++count;
  }
  return count;
}

}  // namespace oracles
