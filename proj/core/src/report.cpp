#include "ybfox/report.hpp"

#include <json.hpp>

namespace ybfox {

std::string render_report_text(const RelationReport& report) {
  std::string out;
  for (const auto& e : report.entries) {
    out += e.id;
    out += e.holds ? "  PASS  " : "  FAIL  ";
    out += "lhs: " + e.lhs + "  rhs: " + e.rhs;
    if (!e.required) out += "  [info]";
    out += '\n';
  }
  for (const auto& [key, value] : report.notes) out += key + ": " + value + "\n";
  return out;
}

std::string render_report_json(const RelationReport& report) {
  nlohmann::ordered_json doc;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["id"] = e.id;
    entry["holds"] = e.holds;
    entry["required"] = e.required;
    entry["lhs"] = e.lhs;
    entry["rhs"] = e.rhs;
    doc["entries"].push_back(entry);
  }
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.notes) notes[key] = value;
  doc["notes"] = notes;
  doc["ok"] = report.all_required_hold();
  return doc.dump(2);
}

}  // namespace ybfox
