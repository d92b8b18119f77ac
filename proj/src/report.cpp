#include "gaindex/report.hpp"

#include <cmath>

namespace gaindex {

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kLessEqual: return "<=";
    case Relation::kLess: return "<";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kGreater: return ">";
    case Relation::kEqual: return "==";
  }
  return "?";
}

std::string to_string(DecisionMode mode) {
  switch (mode) {
    case DecisionMode::kExact: return "exact";
    case DecisionMode::kFloat: return "float";
    case DecisionMode::kFloatRechecked: return "float-rechecked-256";
  }
  return "?";
}

CheckReport unmet(std::string theorem_id, Relation relation, std::string why) {
  CheckReport out;
  out.theorem_id = std::move(theorem_id);
  out.relation = relation;
  out.preconditions_met = false;
  out.holds = true;
  out.notes = std::move(why);
  return out;
}

void append_note(CheckReport& report, const std::string& note) {
  if (note.empty()) return;
  if (!report.notes.empty()) report.notes += "; ";
  report.notes += note;
}

void set_prediction(CheckReport& report, bool predicted) {
  report.predicted_equality = predicted;
  if (report.preconditions_met) report.characterization_consistent = report.equality == predicted;
}

void decide_by_sign(CheckReport& report, int sign, double difference) {
  report.equality = sign == 0;
  switch (report.relation) {
    case Relation::kLessEqual:
      report.holds = sign <= 0;
      report.slack = -difference;
      break;
    case Relation::kLess:
      report.holds = sign < 0;
      report.slack = -difference;
      break;
    case Relation::kGreaterEqual:
      report.holds = sign >= 0;
      report.slack = difference;
      break;
    case Relation::kGreater:
      report.holds = sign > 0;
      report.slack = difference;
      break;
    case Relation::kEqual:
      report.holds = sign == 0;
      report.slack = -std::abs(difference);
      break;
  }
  if (report.equality) report.slack = 0.0;
  if (report.predicted_equality && report.preconditions_met) {
    report.characterization_consistent = report.equality == *report.predicted_equality;
  }
}

void decide_exact(CheckReport& report) {
  const RadicalNumber difference = report.lhs.value() - report.rhs.value();
  decide_by_sign(report, difference.sign(), to_float(difference).value);
  report.mode = DecisionMode::kExact;
}

nlohmann::ordered_json to_json(const IndexValue& value) {
  nlohmann::ordered_json out;
  out["exact"] = value.exact ? nlohmann::ordered_json(value.exact->to_string())
                             : nlohmann::ordered_json(nullptr);
  out["approx"] = value.approx;
  out["abs_error"] = value.abs_error;
  return out;
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json out;
  out["theorem_id"] = report.theorem_id;
  out["relation"] = to_string(report.relation);
  if (report.alpha) out["alpha"] = *report.alpha;
  out["preconditions_met"] = report.preconditions_met;
  if (report.preconditions_met) {
    out["lhs"] = to_json(report.lhs);
    out["rhs"] = to_json(report.rhs);
  } else {
    out["lhs"] = nullptr;
    out["rhs"] = nullptr;
  }
  out["holds"] = report.holds;
  out["equality"] = report.equality;
  out["predicted_equality"] = report.predicted_equality
                                  ? nlohmann::ordered_json(*report.predicted_equality)
                                  : nlohmann::ordered_json(nullptr);
  out["characterization_consistent"] =
      report.characterization_consistent
          ? nlohmann::ordered_json(*report.characterization_consistent)
          : nlohmann::ordered_json(nullptr);
  out["slack"] = report.slack;
  out["decision"] = to_string(report.mode);
  out["notes"] = report.notes;
  return out;
}

}  // namespace gaindex
