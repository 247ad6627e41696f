#pragma once

// JSON interchange: instance files in, report files out. Indices are 1-based
// on disk and 0-based in memory; field elements use the canonical integer
// encoding throughout.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "icsi/security.hpp"

namespace icsi::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "icsi-sec";
inline constexpr const char* kToolVersion = "1.0.0";

/// Unreadable or unwritable files; distinct from malformed content.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FieldParams {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::optional<std::vector<std::uint32_t>> poly;

  FieldRef make() const { return Field::make(p, m, poly); }
  static FieldParams of(const Field& f);
};

struct LoadedInstance {
  IcsiInstance instance;
  ChoiceVectors choice;
  std::string policy;                 // "indicator", "zero" or "explicit"
  std::vector<std::string> notices;   // e.g. multi-demand receivers that were split
};

/// Parses an instance document. Unknown keys, bad types and out-of-range
/// indices throw Error(MalformedInstance); field construction errors pass
/// through with their own kind.
LoadedInstance parse_instance(const Json& doc);
LoadedInstance load_instance_file(const std::string& path);

Json field_to_json(const FieldParams& f);
FieldParams field_from_json(const Json& j);

/// Everything a report file carries.
struct ReportFile {
  FieldParams field;
  Matrix generator;
  SecurityReport report;
};

Json report_to_json(const ReportFile& file);
ReportFile report_from_json(const Json& doc);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& doc);

}  // namespace icsi::io
