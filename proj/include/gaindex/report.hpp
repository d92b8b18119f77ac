#pragma once

#include <optional>
#include <string>

#include "gaindex/indices.hpp"
#include "json.hpp"

namespace gaindex {

/// The asserted relation `lhs REL rhs`.
enum class Relation { kLessEqual, kLess, kGreaterEqual, kGreater, kEqual };

enum class DecisionMode {
  kExact,           // both sides compared in the radical field
  kFloat,           // double evaluation, relative tolerance kFloatTolerance
  kFloatRechecked,  // double said "violated"; verdict re-derived at 256 bits
};

inline constexpr double kFloatTolerance = 1e-9;
inline constexpr int kRecheckBits = 256;

std::string to_string(Relation relation);
std::string to_string(DecisionMode mode);

/// Verdict of one inequality or identity on one input.
struct CheckReport {
  std::string theorem_id;
  Relation relation = Relation::kGreaterEqual;
  IndexValue lhs;
  IndexValue rhs;
  bool holds = false;
  bool equality = false;
  /// Structural equality characterization, when the result states one.
  std::optional<bool> predicted_equality;
  /// equality == predicted_equality; only set when preconditions_met.
  std::optional<bool> characterization_consistent;
  /// Oriented margin: non-negative exactly when the relation holds.
  double slack = 0.0;
  bool preconditions_met = true;
  DecisionMode mode = DecisionMode::kExact;
  std::optional<double> alpha;
  std::string notes;

  bool violated() const { return preconditions_met && !holds; }
  bool mismatch() const {
    return characterization_consistent.has_value() && !*characterization_consistent;
  }
};

/// Report for a precondition failure; nothing is evaluated.
CheckReport unmet(std::string theorem_id, Relation relation, std::string why);

/// Fills holds/equality/slack/characterization from exact lhs and rhs.
void decide_exact(CheckReport& report);

/// Same, given the exact sign of lhs - rhs and an approximation of lhs - rhs.
void decide_by_sign(CheckReport& report, int sign, double difference);

/// Sets predicted_equality and, when applicable, characterization_consistent.
void set_prediction(CheckReport& report, bool predicted);

void append_note(CheckReport& report, const std::string& note);

/// Stable JSON object: exact values as radical-format strings, floats with
/// their error bounds.
nlohmann::ordered_json to_json(const IndexValue& value);
nlohmann::ordered_json to_json(const CheckReport& report);

}  // namespace gaindex
