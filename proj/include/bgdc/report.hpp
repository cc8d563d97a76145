#pragma once

// Structured pass/fail reports: validation routines never throw on bad data,
// they name each violated constraint.

#include <string>
#include <vector>

namespace bgdc {

struct ValidationItem {
  std::string constraint;
  bool ok;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool pass = true;

  void record(const std::string& constraint, bool ok, const std::string& detail = "") {
    items.push_back({constraint, ok, detail});
    pass = pass && ok;
  }
  std::string summary() const {
    std::string out;
    for (const auto& it : items)
      if (!it.ok) out += it.constraint + (it.detail.empty() ? "" : " (" + it.detail + ")") + "; ";
    return out.empty() ? "ok" : out;
  }
};

}  // namespace bgdc
