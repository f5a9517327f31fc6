#pragma once

#include <string>
#include <vector>

namespace skewent {

struct ReferenceRow {
  int k;
  double p_k;        // threshold reported for this family of criteria
  double p_prime_k;  // comparison method, annotation only
  bool asserted;
  std::string note;
};

struct ReferenceTable {
  std::string name;
  std::string title;
  std::string mode;
  std::vector<ReferenceRow> rows;
};

struct ReferenceData {
  std::string family;
  std::string state_target;
  std::string criterion;
  std::string s;
  ReferenceTable table1;
  ReferenceTable table2;

  const ReferenceTable& table(const std::string& name) const;
};

/// Stored published thresholds (compiled in from data/reference_tables.json).
const ReferenceData& reference_data();

}  // namespace skewent
