#pragma once

// Brute-force checks on raw multiplication tables, independent of the library.

#include <functional>
#include <vector>

namespace oracle {

// Backtracking search for a bijection f with f(ab) = f(a)f(b).
inline bool isomorphic(const std::vector<int>& A, const std::vector<int>& B, int n) {
  if (A.size() != B.size()) return false;
  std::vector<int> f(n, -1), used(n, 0);
  std::function<bool(int)> go = [&](int a) -> bool {
    if (a == n) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (f[A[x * n + y]] != B[f[x] * n + f[y]]) return false;
      return true;
    }
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      bool ok = true;
      for (int x = 0; x < a && ok; ++x) {
        int p = A[x * n + a], q = A[a * n + x];
        if (p < a && f[p] != B[f[x] * n + b]) ok = false;
        if (q < a && f[q] != B[b * n + f[x]]) ok = false;
      }
      int sq = A[a * n + a];
      if (ok && sq < a && f[sq] != B[b * n + b]) ok = false;
      if (!ok) continue;
      f[a] = b;
      used[b] = 1;
      if (go(a + 1)) return true;
      used[b] = 0;
      f[a] = -1;
    }
    return false;
  };
  return go(0);
}

// True iff map equals x -> g x g^-1 for some g.
inline bool is_conjugation(const std::vector<int>& T, const std::vector<int>& map, int n) {
  int e = 0;
  for (int a = 0; a < n; ++a) {
    bool id = true;
    for (int x = 0; x < n; ++x) id = id && T[a * n + x] == x;
    if (id) e = a;
  }
  for (int g = 0; g < n; ++g) {
    int gi = 0;
    for (int h = 0; h < n; ++h)
      if (T[g * n + h] == e) gi = h;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = T[T[g * n + x] * n + gi] == map[x];
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
