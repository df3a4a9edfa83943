#include "eloday/sparse_elim.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace eloday {

IntMatrix SparseMatrix::dense() const {
  IntMatrix D = IntMatrix::Zero(rows, ncols());
  for (int c = 0; c < ncols(); ++c)
    for (auto& [r, v] : cols[c]) D(r, c) += BigInt(v);
  return D;
}

namespace {

using Row = std::vector<std::pair<int, long long>>;

long long checked_sub_mul(long long a, long long f, long long b) {
  long long prod, out;
  if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
    throw OverflowError("sparse elimination: entry overflow");
  return out;
}

long long inv_mod(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    long long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return (t % p + p) % p;
}

}  // namespace

Elimination eliminate(const SparseMatrix& M, long long p, long long dense_limit, long long max_entries) {
  std::vector<std::vector<std::pair<int, long long>>> rows(M.rows);
  for (int c = 0; c < M.ncols(); ++c)
    for (auto& [r, v] : M.cols[c]) {
      if (r < 0 || r >= M.rows) throw AlgebraError("sparse matrix row out of range");
      rows[r].push_back({c, v});
    }
  return eliminate_rows(std::move(rows), M.ncols(), p, dense_limit, false, max_entries);
}

Elimination eliminate_rows(std::vector<std::vector<std::pair<int, long long>>> rows, int nc, long long p,
                           long long dense_limit, bool keep, long long max_entries) {
  const int nr = static_cast<int>(rows.size());
  for (auto& row : rows)
    for (auto& e : row)
      if (e.first < 0 || e.first >= nc) throw AlgebraError("sparse row entry out of range");
  auto normalize = [&](Row& row) {
    std::sort(row.begin(), row.end());
    Row out;
    for (auto& e : row) {
      if (!out.empty() && out.back().first == e.first) {
        out.back().second = p ? (out.back().second + e.second) % p
                              : checked_sub_mul(out.back().second, -1, e.second);
      } else {
        out.push_back({e.first, p ? ((e.second % p) + p) % p : e.second});
      }
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    row.swap(out);
  };
  std::vector<std::vector<int>> colrows(nc);
  for (int r = 0; r < nr; ++r) {
    normalize(rows[r]);
    for (auto& e : rows[r]) colrows[e.first].push_back(r);
  }
  std::vector<char> row_alive(nr, 1), col_alive(nc, 1);
  auto is_pivot_value = [&](long long v) { return p ? v != 0 : (v == 1 || v == -1); };
  using Item = std::pair<size_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (int r = 0; r < nr; ++r)
    if (!rows[r].empty()) queue.push({rows[r].size(), r});
  Elimination res;
  long long stored = 0;
  for (auto& row : rows) stored += static_cast<long long>(row.size());
  // live entry count per column; columns with a single live entry pivot without fill-in
  std::vector<int> cnt(nc, 0);
  for (auto& row : rows)
    for (auto& e : row) ++cnt[e.first];
  std::vector<int> singles;
  for (int c = 0; c < nc; ++c)
    if (cnt[c] == 1) singles.push_back(c);
  auto drop = [&](int col) {
    if (--cnt[col] == 1 && col_alive[col]) singles.push_back(col);
  };
  Row merged;
  auto pivot = [&](int r, int c, long long pv) {
    const Row prow = rows[r];
    if (keep) res.kept.push_back(prow);
    row_alive[r] = 0;
    col_alive[c] = 0;
    ++res.rank;
    ++res.unit_pivots;
    std::vector<int> targets;
    targets.swap(colrows[c]);
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const long long pinv = p ? inv_mod(pv, p) : pv;  // pv = +-1 over Z
    for (int r2 : targets) {
      if (r2 == r || !row_alive[r2]) continue;
      auto& row = rows[r2];
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, std::numeric_limits<long long>::min()));
      if (it == row.end() || it->first != c) continue;
      long long f = p ? (it->second * pinv) % p : it->second * pinv;
      merged.clear();
      size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          merged.push_back(row[i++]);
        } else if (i == row.size() || prow[j].first < row[i].first) {
          long long v = p ? ((p - f) % p * prow[j].second) % p : checked_sub_mul(0, f, prow[j].second);
          if (v) {
            merged.push_back({prow[j].first, v});
            colrows[prow[j].first].push_back(r2);
            ++cnt[prow[j].first];
          }
          ++j;
        } else {
          long long v = p ? ((row[i].second - f * prow[j].second) % p + p) % p
                          : checked_sub_mul(row[i].second, f, prow[j].second);
          if (v)
            merged.push_back({row[i].first, v});
          else if (row[i].first != c)
            drop(row[i].first);
          ++i;
          ++j;
        }
      }
      stored += static_cast<long long>(merged.size()) - static_cast<long long>(row.size());
      row.swap(merged);
      if (!row.empty()) queue.push({row.size(), r2});
    }
    for (auto& e : prow)
      if (e.first != c) drop(e.first);
    stored -= static_cast<long long>(prow.size());
    rows[r] = Row();
    if (stored > max_entries)
      throw AlgebraError("sparse elimination exceeded its fill-in budget of " + std::to_string(max_entries) +
                         " entries after " + std::to_string(res.rank) + " pivots");
  };
  for (;;) {
    while (!singles.empty()) {
      const int c = singles.back();
      singles.pop_back();
      if (!col_alive[c] || cnt[c] != 1) continue;
      for (int r : colrows[c]) {
        if (!row_alive[r]) continue;
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(),
                                   std::make_pair(c, std::numeric_limits<long long>::min()));
        if (it == rows[r].end() || it->first != c) continue;
        if (is_pivot_value(it->second)) pivot(r, c, it->second);
        break;
      }
    }
    if (queue.empty()) break;
    auto [len, r] = queue.top();
    queue.pop();
    if (!row_alive[r] || rows[r].size() != len || rows[r].empty()) continue;
    // pivot column: a unit entry whose column is shortest
    int best = -1;
    int best_count = 0;
    for (size_t k = 0; k < rows[r].size(); ++k) {
      if (!is_pivot_value(rows[r][k].second)) continue;
      int cc = cnt[rows[r][k].first];
      if (best < 0 || cc < best_count) {
        best = static_cast<int>(k);
        best_count = cc;
      }
    }
    if (best < 0) continue;  // revisited if fill-in changes the row
    pivot(r, rows[r][best].first, rows[r][best].second);
  }
  // residual block
  std::vector<int> rr, cc;
  std::vector<int> cpos(nc, -1);
  for (int r = 0; r < nr; ++r)
    if (row_alive[r] && !rows[r].empty()) {
      rr.push_back(r);
      for (auto& e : rows[r])
        if (cpos[e.first] < 0) {
          cpos[e.first] = static_cast<int>(cc.size());
          cc.push_back(e.first);
        }
    }
  res.residual_rows = static_cast<int>(rr.size());
  res.residual_cols = static_cast<int>(cc.size());
  if (keep)
    for (int r : rr) res.kept.push_back(rows[r]);
  if (rr.empty()) return res;
  if (static_cast<long long>(rr.size()) * static_cast<long long>(cc.size()) > dense_limit)
    throw AlgebraError("sparse elimination left a " + std::to_string(rr.size()) + " x " + std::to_string(cc.size()) +
                       " block without unit pivots");
  if (p) {
    // dense Gaussian elimination mod p
    std::vector<std::vector<long long>> D(rr.size(), std::vector<long long>(cc.size(), 0));
    for (size_t i = 0; i < rr.size(); ++i)
      for (auto& e : rows[rr[i]]) D[i][cpos[e.first]] = e.second;
    size_t rank = 0;
    for (size_t col = 0; col < cc.size() && rank < rr.size(); ++col) {
      size_t piv = rank;
      while (piv < rr.size() && D[piv][col] == 0) ++piv;
      if (piv == rr.size()) continue;
      std::swap(D[piv], D[rank]);
      long long iv = inv_mod(D[rank][col], p);
      for (size_t i = rank + 1; i < rr.size(); ++i) {
        if (!D[i][col]) continue;
        long long f = D[i][col] * iv % p;
        for (size_t k = col; k < cc.size(); ++k) D[i][k] = ((D[i][k] - f * D[rank][k]) % p + p) % p;
      }
      ++rank;
    }
    res.rank += static_cast<long>(rank);
    return res;
  }
  IntMatrix D = IntMatrix::Zero(static_cast<long>(rr.size()), static_cast<long>(cc.size()));
  for (size_t i = 0; i < rr.size(); ++i)
    for (auto& e : rows[rr[i]]) D(static_cast<long>(i), cpos[e.first]) = BigInt(e.second);
  for (auto& d : elementary_divisors(D)) {
    if (d.is_zero()) continue;
    ++res.rank;
    if (abs(d) != BigInt(1)) res.divisors.push_back(abs(d));
  }
  return res;
}

}  // namespace eloday
