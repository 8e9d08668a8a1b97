#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qdef {

/// Inputs and the two sides of a failed identity, already rendered.
struct Witness {
  std::string input;
  std::string lhs;
  std::string rhs;
};

struct CheckEntry {
  std::string label;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<Witness> witness;
  /// Free-form remark, e.g. why a condition is vacuous.
  std::string note;
};

/// Ordered pass/fail outcome of a condition suite.
class CheckReport {
 public:
  explicit CheckReport(std::string title = {}) : title_(std::move(title)) {}

  /// Returns the entry for `label`, creating it (as passing) on first use.
  CheckEntry& entry(const std::string& label);
  const CheckEntry* find(const std::string& label) const;

  /// Counts one case under `label`; on the first failure stores the witness
  /// produced by `make_witness`.
  template <class F>
  bool expect(const std::string& label, bool ok, F&& make_witness) {
    CheckEntry& e = entry(label);
    ++e.cases;
    if (!ok && e.passed) {
      e.passed = false;
      e.witness = make_witness();
    }
    return ok;
  }

  void fail(const std::string& label, Witness witness);
  /// Appends every entry of `other`, prefixing labels when `prefix` is set.
  void merge(const CheckReport& other, const std::string& prefix = {});

  const std::string& title() const { return title_; }
  const std::vector<CheckEntry>& entries() const { return entries_; }
  bool passed() const;
  bool passed(const std::string& label) const;

  /// One line per entry: `EQU5: PASS` or `EQU5: FAIL witness=... lhs=... rhs=...`.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::string title_;
  std::vector<CheckEntry> entries_;
};

}  // namespace qdef
