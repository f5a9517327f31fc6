#include "skewent/reference.hpp"

#include <json.hpp>

#include "skewent/matrix.hpp"
#include "skewent/reference_data.hpp"

namespace skewent {

namespace {

ReferenceTable read_table(const nlohmann::json& j, const std::string& name) {
  ReferenceTable t{name, j.at("title").get<std::string>(), j.at("mode").get<std::string>(), {}};
  for (const auto& r : j.at("rows"))
    t.rows.push_back({r.at("k").get<int>(), r.at("p_k").get<double>(), r.at("p_prime_k").get<double>(),
                      r.at("asserted").get<bool>(), r.value("note", std::string{})});
  return t;
}

ReferenceData load() {
  const auto j = nlohmann::json::parse(detail::kReferenceTablesJson);
  return {j.at("family").get<std::string>(), j.at("state_target").get<std::string>(),
          j.at("criterion").get<std::string>(), j.at("s").get<std::string>(),
          read_table(j.at("table1"), "table1"), read_table(j.at("table2"), "table2")};
}

}  // namespace

const ReferenceTable& ReferenceData::table(const std::string& name) const {
  if (name == "table1") return table1;
  if (name == "table2") return table2;
  throw DomainError("unknown reference table '" + name + "'");
}

const ReferenceData& reference_data() {
  static const ReferenceData data = load();
  return data;
}

}  // namespace skewent
