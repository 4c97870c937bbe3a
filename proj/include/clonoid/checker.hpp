#pragma once

#include <json.hpp>
#include <variant>

#include "clonoid/absclone.hpp"
#include "clonoid/clonealg.hpp"
#include "clonoid/merge.hpp"
#include "clonoid/mmonoid.hpp"
#include "clonoid/pica.hpp"

namespace clonoid {

using Structure =
    std::variant<PointedMergeAlgebra, MMonoid, CloneAlgebra, AbstractClone, Pica>;

std::string structure_name(const Structure& s);

namespace checker {

enum class SuiteId { MERGE_B, MONOID, MMON_L1, CM_L2, AM_L3, AM_L4, CA_C, ABSCLONE, PICA, NEUMANN_N };

const char* suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(const std::string& name);

enum class VerdictKind { PassExhaustive, PassSampled, Fail };

struct LawResult {
  std::string name;
  VerdictKind verdict = VerdictKind::PassSampled;
  size_t checked = 0;
  size_t skipped = 0;
  bool full_product = true;
  nlohmann::ordered_json witness;  // null unless fail
};

struct Report {
  std::string structure;
  SuiteId suite;
  TestDomain domain;
  bool elements_exhaustive = false;
  std::vector<LawResult> laws;
  uint64_t fingerprint = 0;
  int64_t wall_ms = 0;

  bool any_fail() const;
  nlohmann::ordered_json to_json(bool include_timings = false) const;
};

/// Evaluate every law of the suite over the deterministic assignment stream.
/// A law verdict is pass_exhaustive when the element enumeration covered the
/// whole (finite) carrier fragment; per-instance tuple coverage is reported
/// via `full_product` and `checked`. SignatureMismatch when the suite does
/// not apply to the structure kind.
Report check(const Structure& s, SuiteId suite, const TestDomain& dom);

/// Re-evaluate the single law instance named by a fail witness; true when
/// the failure reproduces.
bool replay(const Structure& s, SuiteId suite, const TestDomain& dom,
            const nlohmann::ordered_json& witness);

/// Deterministic element stream of the structure's carrier fragment.
StreamResult enumerate_structure(const Structure& s, const TestDomain& dom);

}  // namespace checker
}  // namespace clonoid
