#pragma once

#include <utility>
#include <vector>

#include "eloday/exactalg.hpp"

namespace eloday {

// Column-major sparse integer matrix; entries need not be sorted.
struct SparseMatrix {
  int rows = 0;
  std::vector<std::vector<std::pair<int, long long>>> cols;
  int ncols() const { return static_cast<int>(cols.size()); }
  IntMatrix dense() const;
};

inline constexpr long long kDefaultFillBudget = 30'000'000;

struct Elimination {
  long rank = 0;
  std::vector<BigInt> divisors;  // elementary divisors > 1
  long unit_pivots = 0;
  int residual_rows = 0, residual_cols = 0;
  // With `keep`: each pivot row as it stood when pivoted, then the residual rows.
  // Together they span the same row lattice as the input.
  std::vector<std::vector<std::pair<int, long long>>> kept;
};

// Rank and elementary divisors over Z (p = 0) or rank over F_p. Pivots on unit
// entries of the sparsest rows first; what remains is handed to the dense SNF
// when it has at most `dense_limit` entries, else AlgebraError. Fill-in beyond
// `max_entries` stored entries also throws AlgebraError.
Elimination eliminate(const SparseMatrix& M, long long p = 0, long long dense_limit = 4'000'000,
                      long long max_entries = kDefaultFillBudget);
// Same on a list of sparse rows over `ncols` columns.
Elimination eliminate_rows(std::vector<std::vector<std::pair<int, long long>>> rows, int ncols, long long p = 0,
                           long long dense_limit = 4'000'000, bool keep = false,
                           long long max_entries = kDefaultFillBudget);

}  // namespace eloday
