#include "crossprod/report.hpp"

#include <algorithm>
#include <sstream>

namespace crossprod {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

CheckEntry& Report::add(std::string name, std::string anchor, bool ok, std::string witness) {
  CheckEntry e;
  e.name = std::move(name);
  e.anchor = std::move(anchor);
  e.verdict = ok ? Verdict::Pass : Verdict::Fail;
  if (!ok) e.witness = std::move(witness);
  checks_.push_back(std::move(e));
  return checks_.back();
}

CheckEntry& Report::add_skip(std::string name, std::string anchor, std::string reason) {
  CheckEntry e;
  e.name = std::move(name);
  e.anchor = std::move(anchor);
  e.verdict = Verdict::Skip;
  e.witness = std::move(reason);
  checks_.push_back(std::move(e));
  return checks_.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto e : other.checks_) {
    if (!prefix.empty()) e.name = prefix + e.name;
    checks_.push_back(std::move(e));
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

bool Report::passed() const { return count(Verdict::Fail) == 0; }

std::size_t Report::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [v](const CheckEntry& e) { return e.verdict == v; }));
}

const CheckEntry* Report::find(const std::string& name) const {
  for (const auto& e : checks_)
    if (e.name == name) return &e;
  return nullptr;
}

const CheckEntry* Report::first_failure() const {
  for (const auto& e : checks_)
    if (e.verdict == Verdict::Fail) return &e;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << " ==\n";
  for (const auto& e : checks_) {
    os << "[" << to_string(e.verdict) << "] " << e.name;
    if (!e.witness.empty()) os << "  -- " << e.witness;
    os << "\n";
  }
  for (const auto& n : notes_) os << "note: " << n << "\n";
  os << "summary: " << count(Verdict::Pass) << " pass, " << count(Verdict::Fail) << " fail, " << count(Verdict::Skip)
     << " skip\n";
  return os.str();
}

}  // namespace crossprod
