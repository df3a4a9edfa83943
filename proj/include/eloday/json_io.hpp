#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eloday/exactalg.hpp"
#include "eloday/fingroup.hpp"
#include "eloday/gring.hpp"
#include "eloday/loday.hpp"
#include "eloday/ring.hpp"
#include "eloday/simpgset.hpp"

namespace eloday {

using Json = nlohmann::ordered_json;

// Malformed input. The message names the offending location (line and column
// for syntax errors, a JSON pointer otherwise).
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses text; `source` prefixes error messages.
Json parse_json(const std::string& text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& where);
Json abelian_to_json(const FgAbelianGroup& A);
FgAbelianGroup abelian_from_json(const Json& j, const std::string& where = "");

// {order, mult (row-major), names}
Json group_to_json(const FiniteGroup& G);
GroupPtr group_from_json(const Json& j);
// Lattice, classes and Weyl groups; the payload of `group info`.
Json group_info(const GroupPtr& G);

// {name, generators, relations (list of relation vectors), mult[i][j], unit,
//  involution (list of generator images), commutative}
RingPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const RingPresentation& p);

enum class ActionKind { Trivial, Involution, Generators };

// A coefficient file: a ring plus how a group acts on it.
//   "action": "trivial"      every element acts as the identity
//   "action": "involution"   an order-2 subgroup acts through the ring's involution
//   "action": {"group": "c3", "generators": {"1": [[...], ...]}}
//                            named group elements act by the given generator images
struct CoefficientSpec {
  std::string id;
  RingPtr ring;
  ActionKind action = ActionKind::Trivial;
  std::string group;  // Generators only
  std::vector<std::pair<std::string, IntMatrix>> images;
};

CoefficientSpec coefficient_from_json(const Json& j);
CoefficientSpec load_coefficient(const std::string& path);
// The coefficient as an H-ring; element names resolve in H's parent group.
GRingPtr coefficient_ring(const CoefficientSpec& c, const Subgroup& H);

Json space_to_json(const FinSimpGSet& X);
Json wiring_to_json(const Wiring& w);
// Sparse matrix of a wiring on monomials, [[row, col, value], ...]; null past `max_dim` source monomials.
Json wiring_matrix(const Wiring& w, long long max_dim = 1 << 14);
Json simplicial_ring_to_json(const SimplicialGRing& S, bool matrices);

struct HomologyRow {
  std::string space, coefficient, subgroup;
  int degree = 0;
  FgAbelianGroup value;
};

Json rows_to_json(const std::vector<HomologyRow>& rows);
// Header plus one line per row; torsion coefficients are ';'-separated.
std::string rows_to_csv(const std::vector<HomologyRow>& rows);

}  // namespace eloday
