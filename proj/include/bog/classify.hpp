#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bog/rep.hpp"
#include "bog/words.hpp"

namespace bog {

using Json = nlohmann::json;

struct RigidityClass {
  /// 1..7, or empty when no class applies.
  std::optional<int> index;
  std::string reason;
};

RigidityClass rigidity_class(const Representation& rep);

enum class SolidityKind { StronglySolid, NotSolid, Unknown };
const char* to_string(SolidityKind s);

struct Solidity {
  SolidityKind kind = SolidityKind::Unknown;
  std::string witness;
};

Solidity solidity(const Representation& rep);

struct Factoriality {
  bool factor = false;
  std::string center;
};

Factoriality factoriality(const Representation& rep);

enum class VerdictKind { Isomorphic, Distinct, Unknown };
const char* to_string(VerdictKind k);

/// Rule identifiers, in ladder order.
namespace rule {
inline constexpr const char* kFactoriality = "distinct_factoriality";
inline constexpr const char* kSolidity = "distinct_solidity";
inline constexpr const char* kRigidityClass = "distinct_rigidity_class";
inline constexpr const char* kSpectralFiber = "distinct_spectral_fiber";
inline constexpr const char* kLeftRegularFreeGroup = "isomorphic_left_regular_free_group";
inline constexpr const char* kPeriodic = "isomorphic_periodic";
inline constexpr const char* kSameSubgroup = "isomorphic_same_subgroup";
inline constexpr const char* kSingleIrrationalPair = "isomorphic_single_irrational_pair";
inline constexpr const char* kFreeGroupFactorProblem = "unknown_free_group_factor_problem";
inline constexpr const char* kAbstractSubgroup = "unknown_abstract_subgroup";
inline constexpr const char* kNoRule = "unknown_no_rule";
}  // namespace rule

VerdictKind kind_of_rule(const std::string& rule);

/// Unknown obstructions: FreeGroupFactorProblem (periodic parameters differ),
/// AbstractSubgroupConjecture (whether the abstract eigenvalue group is a
/// complete invariant), SolidityConjecture, NoRuleApplies.
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string rule;
  Json certificate;
  std::string human_summary;
  /// Present for same-subgroup verdicts on finite-dimensional ap parts.
  std::optional<RebaseResult> rebase;

  Json to_json() const;
};

struct CompareOptions {
  std::size_t truncate = 64;
};

Verdict compare(const Representation& r1, const Representation& r2,
                const CompareOptions& options = {});

/// Every rule whose hypotheses hold, Distinct and Isomorphic alike, in ladder
/// order. compare() returns the first.
std::vector<std::string> all_matching_rules(const Representation& r1, const Representation& r2);

/// Recomputes the named invariants or hypotheses and replays witnesses.
bool recheck(const Verdict& v, const Representation& r1, const Representation& r2,
             const CompareOptions& options = {});

/// Everything the library knows about one representation.
Json dossier(const Representation& rep, std::size_t truncate = 64);

}  // namespace bog
