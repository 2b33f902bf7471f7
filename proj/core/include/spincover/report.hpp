#pragma once

#include <string>

#include "spincover/chars.hpp"
#include "spincover/cover.hpp"
#include "spincover/tgroup.hpp"

namespace spincover {

// JSON emission (nlohmann, ordered keys, schema: 1). Output is byte-stable
// for equal inputs.
std::string to_json(const TGroupReport& r, int indent = 2);
std::string to_json(const TableReport& t, int indent = 2);
std::string to_json(const VanishingCertificate& c, int indent = 2);

struct VerifySummary {
  std::vector<RelationReport> relations;
  std::vector<FuzzReport> fuzz;
  bool ok() const;
};
std::string to_json(const VerifySummary& v, int indent = 2);

// Markdown rendering; table columns follow the source table layout.
std::string to_markdown(const TGroupReport& r);
std::string to_markdown(const TableReport& t);

// Compact single-line text forms.
std::string to_text(const TGroupReport& r);
std::string to_text(const TableReport& t);

}  // namespace spincover
