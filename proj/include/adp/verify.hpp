#pragma once

// Recomputes catalog invariants through the Chow engine and bundle
// arithmetic, cross-checks enumeration output against the catalog, and
// replays the tower constructions.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "adp/catalog.hpp"
#include "json.hpp"

namespace adp {

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct Check {
  std::string name;
  std::string subject;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  std::string citation;
};

struct Report {
  std::vector<Check> checks;
  std::vector<std::string> notes;

  std::size_t count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }
  void append(const Report& o);
  // Integer or string comparison recorded as pass/fail.
  void expect(std::string name, std::string subject, const std::string& expected, const std::string& computed,
              std::string citation, std::string reason = {});
  void expect(std::string name, std::string subject, long long expected, long long computed, std::string citation,
              std::string reason = {});
  void skip(std::string name, std::string subject, std::string reason, std::string citation);
  void fail(std::string name, std::string subject, std::string reason, std::string citation);
};

nlohmann::ordered_json to_json(const Report& r);
void write_report_text(std::ostream& os, const Report& r);

Report verify_family(const FamilyRecord& r, const std::vector<FamilyRecord>& catalog);
Report verify_families(const std::vector<FamilyRecord>& catalog);
Report verify_flops(const std::vector<FamilyRecord>& catalog);
Report verify_smoothings(const std::vector<FamilyRecord>& catalog);
Report verify_constructions();
Report verify_enumeration_matches_catalog(const std::vector<FamilyRecord>& catalog);

// Report names accepted by verify_named: families, flops, smoothings,
// constructions, enumeration.
const std::vector<std::string>& report_names();
Report verify_named(const std::string& name, const std::vector<FamilyRecord>& catalog);
Report verify_all(const std::vector<FamilyRecord>& catalog);

struct Mutation {
  std::string label;
  std::function<void(std::vector<FamilyRecord>&)> apply;
};

// Single-field mutations of the catalog: degree +-1 on every record with a
// computable degree, dropped and redirected flop partners, wrong smoothings.
std::vector<Mutation> mutation_sweep(const std::vector<FamilyRecord>& catalog);

}  // namespace adp
