#pragma once

#include <string>
#include <vector>

namespace ybfox {

/// One verified identity: canonical renderings of both sides and whether
/// they are identical. `required` marks entries that gate success;
/// informational entries (like the rack precondition) leave it false.
struct RelationEntry {
  std::string id;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  bool required = true;
};

/// Verification outcome for a batch of identities, plus free-form
/// informational key/value lines (eta/tau renderings and the like).
struct RelationReport {
  std::vector<RelationEntry> entries;
  std::vector<std::pair<std::string, std::string>> notes;

  bool all_hold() const {
    for (const auto& e : entries)
      if (!e.holds) return false;
    return true;
  }

  bool all_required_hold() const {
    for (const auto& e : entries)
      if (e.required && !e.holds) return false;
    return true;
  }

  const RelationEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  void append(const RelationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// Line-oriented human rendering: one line per entry
/// `<id>  <PASS|FAIL>  lhs: <text>  rhs: <text>` followed by note lines.
std::string render_report_text(const RelationReport& report);

/// The same fields as a deterministic JSON document.
std::string render_report_json(const RelationReport& report);

}  // namespace ybfox
