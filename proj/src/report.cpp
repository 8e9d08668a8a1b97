#include "qdef/report.hpp"

#include <algorithm>

namespace qdef {

CheckEntry& CheckReport::entry(const std::string& label) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.label == label; });
  if (it != entries_.end()) return *it;
  CheckEntry e;
  e.label = label;
  entries_.push_back(std::move(e));
  return entries_.back();
}

const CheckEntry* CheckReport::find(const std::string& label) const {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.label == label; });
  return it == entries_.end() ? nullptr : &*it;
}

void CheckReport::fail(const std::string& label, Witness witness) {
  expect(label, false, [&] { return std::move(witness); });
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    CheckEntry copy = e;
    copy.label = prefix + e.label;
    entries_.push_back(std::move(copy));
  }
}

bool CheckReport::passed() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.passed; });
}

bool CheckReport::passed(const std::string& label) const {
  const CheckEntry* e = find(label);
  return e != nullptr && e->passed;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& e : entries_) {
    out += e.label + ": " + (e.passed ? "PASS" : "FAIL");
    if (e.witness) out += " witness=" + e.witness->input + " lhs=" + e.witness->lhs + " rhs=" + e.witness->rhs;
    if (!e.note.empty()) out += " (" + e.note + ")";
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["passed"] = passed();
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    item["label"] = e.label;
    item["status"] = e.passed ? "PASS" : "FAIL";
    item["cases"] = e.cases;
    if (e.witness) item["witness"] = {{"input", e.witness->input}, {"lhs", e.witness->lhs}, {"rhs", e.witness->rhs}};
    if (!e.note.empty()) item["note"] = e.note;
    j["entries"].push_back(std::move(item));
  }
  return j;
}

}  // namespace qdef
