#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eloday/json_io.hpp"

namespace eloday {

struct SuiteParams {
  std::optional<std::string> group;  // default: the suite's own group list
  int m = 0;                         // polygon size for realhh/esigma, 0 = the default range
  std::optional<CoefficientSpec> coeff;
  int max_degree = 3;                // homology degrees compared by realhh/esigma
  bool homology = true;
};

struct SuiteResult {
  std::string suite;
  bool ok = true;
  long checks = 0;
  std::vector<std::string> notes;
  Json witness;  // first failing equation, null on success
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteParams& p = {});
Json suite_to_json(const SuiteResult& r);

// Rank <= 2 coefficient rings with every action of G through {id, conjugation} on Z[i]
// and {id, t -> -t} on Z[t]/(t^2 - 1), plus trivial Z and Z/2.
std::vector<GRingPtr> small_coefficient_rings(const GroupPtr& G);

}  // namespace eloday
