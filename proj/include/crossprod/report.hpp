#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace crossprod {

enum class Verdict { Pass, Fail, Skip };

const char* to_string(Verdict v);

struct CheckEntry {
  std::string name;
  std::string anchor;  // the mathematical statement being checked
  Verdict verdict = Verdict::Pass;
  std::string witness;
  double timingMs = 0.0;
};

/// Ordered list of verdicts. Checks appear in the order they were run.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  CheckEntry& add(std::string name, std::string anchor, bool ok, std::string witness = {});
  CheckEntry& add_skip(std::string name, std::string anchor, std::string reason);
  void append(const Report& other, const std::string& prefix = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool passed() const;
  std::size_t count(Verdict v) const;
  const CheckEntry* find(const std::string& name) const;
  /// First failing entry, or nullptr.
  const CheckEntry* first_failure() const;

  const std::string& title() const { return title_; }
  const std::vector<CheckEntry>& checks() const { return checks_; }
  std::vector<CheckEntry>& checks() { return checks_; }
  const std::vector<std::string>& notes() const { return notes_; }

  std::string to_text() const;

 private:
  std::string title_;
  std::vector<CheckEntry> checks_;
  std::vector<std::string> notes_;
};

/// First failure plus a count of the rest, for compact witnesses.
struct Failures {
  std::size_t count = 0;
  std::string first;
  void add(const std::string& w) {
    if (count++ == 0) first = w;
  }
  bool ok() const { return count == 0; }
  std::string text() const {
    if (!count) return {};
    return first + (count > 1 ? " (+" + std::to_string(count - 1) + " more)" : "");
  }
};

}  // namespace crossprod
