#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

using eloday::BigInt;
using eloday::IntMatrix;
using eloday::PresentedGroup;

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<int> digits_of(long long idx, int len, int r) {
  std::vector<int> d(len);
  for (int s = len - 1; s >= 0; --s) {
    d[s] = static_cast<int>(idx % r);
    idx /= r;
  }
  return d;
}

long long index_of(const std::vector<int>& d, int r) {
  long long idx = 0;
  for (int x : d) idx = idx * r + x;
  return idx;
}

}  // namespace

ChainComplex cyclic_bar(const Ring& R, int top) {
  const int r = R.rank();
  ChainComplex C;
  for (int n = 0; n <= top; ++n) {
    const long long dim = ipow(r, n + 1);
    std::vector<BigInt> ord;
    for (long long m = 0; m < dim; ++m) {
      long long g = 0;
      for (int x : digits_of(m, n + 1, r)) g = std::gcd(g, R.order(x));
      ord.emplace_back(g);
    }
    C.groups.push_back(PresentedGroup::cyclic(ord));
  }
  C.boundary.push_back(IntMatrix(0, 0));
  for (int n = 1; n <= top; ++n) {
    const long long dim = ipow(r, n + 1), tdim = ipow(r, n);
    IntMatrix D = IntMatrix::Zero(tdim, dim);
    for (long long m = 0; m < dim; ++m) {
      auto a = digits_of(m, n + 1, r);
      for (int i = 0; i <= n; ++i) {
        const int sign = i % 2 ? -1 : 1;
        int x, y;
        std::vector<int> rest;
        if (i < n) {
          x = a[i];
          y = a[i + 1];
        } else {
          x = a[n];
          y = a[0];
        }
        const auto& prod = R.product(x, y);
        for (int k = 0; k < r; ++k) {
          if (!prod[k]) continue;
          std::vector<int> t;
          if (i < n) {
            t.assign(a.begin(), a.begin() + i);
            t.push_back(k);
            t.insert(t.end(), a.begin() + i + 2, a.end());
          } else {
            t.push_back(k);
            t.insert(t.end(), a.begin() + 1, a.begin() + n);
          }
          D(index_of(t, r), m) += BigInt(sign * prod[k]);
        }
      }
    }
    C.boundary.push_back(D);
  }
  return C;
}

MonomialMatrix cyclic_bar_map(const Ring& R, int q, const std::vector<int>& theta) {
  const int r = R.rank();
  const int p = static_cast<int>(theta.size()) - 1;
  // target element of each source element, and the fibre order
  std::vector<int> to(q + 1);
  for (int j = 0; j <= q; ++j) {
    int x = 0;
    while (x <= p && theta[x] < j) ++x;
    to[j] = x > p ? 0 : x;
  }
  std::vector<std::vector<int>> fibre(p + 1);
  for (int j = 0; j <= q; ++j)
    if (to[j] == 0 && j > theta[0]) fibre[0].push_back(j);
  for (int j = 0; j <= q; ++j)
    if (to[j] != 0 || j <= theta[0]) fibre[to[j]].push_back(j);
  MonomialMatrix M;
  M.rows = ipow(r, p + 1);
  const long long dim = ipow(r, q + 1);
  M.cols.resize(dim);
  for (long long m = 0; m < dim; ++m) {
    auto a = digits_of(m, q + 1, r);
    std::vector<std::vector<long long>> parts;
    for (int t = 0; t <= p; ++t) {
      std::vector<long long> v(r, 0);
      v[0] = 1;
      for (int j : fibre[t]) {
        std::vector<long long> w(r, 0);
        for (int x = 0; x < r; ++x) {
          if (!v[x]) continue;
          const auto& prod = R.product(x, a[j]);
          for (int y = 0; y < r; ++y) w[y] += v[x] * prod[y];
        }
        for (int y = 0; y < r; ++y) w[y] = R.reduce(y, w[y]);
        v = w;
      }
      parts.push_back(v);
    }
    // expand the tensor product of the target factors
    std::vector<std::pair<long long, long long>> acc{{0, 1}};
    for (int t = 0; t <= p; ++t) {
      std::vector<std::pair<long long, long long>> next;
      for (auto& [idx, c] : acc)
        for (int y = 0; y < r; ++y)
          if (parts[t][y]) next.push_back({idx * r + y, c * parts[t][y]});
      acc.swap(next);
    }
    for (auto& [idx, c] : acc) {
      long long ord = 0;
      auto d = digits_of(idx, p + 1, r);
      for (int x : d) ord = std::gcd(ord, R.order(x));
      long long v = ord ? ((c % ord) + ord) % ord : c;
      if (v) M.cols[m].push_back({idx, v});
    }
    std::sort(M.cols[m].begin(), M.cols[m].end());
  }
  return M;
}

MonomialMatrix sd_face(const Ring& R, int n, int k, int i) {
  std::vector<int> theta;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < k; ++x) theta.push_back(a * (k + 1) + (x < i ? x : x + 1));
  return cyclic_bar_map(R, n * (k + 1) - 1, theta);
}

MonomialMatrix sd_degeneracy(const Ring& R, int n, int k, int j) {
  std::vector<int> theta;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x <= k + 1; ++x) theta.push_back(a * (k + 1) + (x <= j ? x : x - 1));
  return cyclic_bar_map(R, n * (k + 1) - 1, theta);
}

GraphBetti graph_betti(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int tree = 0;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      ++tree;
    }
  }
  GraphBetti g;
  g.b0 = vertices - tree;
  g.b1 = static_cast<int>(edges.size()) - tree;
  return g;
}

std::vector<FgAbelianGroup> hochschild(const Ring& R, int max_k) {
  ChainComplex C = cyclic_bar(R, max_k + 1);
  std::vector<FgAbelianGroup> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(eloday::homology(C, k));
  return out;
}

}  // namespace oracle
