#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace globk {

enum class Status { Pass, Fail };

/// One line of a verification report: "CHECK <check> <scope> PASS|FAIL [witness]".
/// A passing check is a single PASS entry; a failing check contributes one
/// FAIL entry per counterexample.
struct ReportEntry {
  std::string check;
  std::string scope;
  Status status = Status::Pass;
  std::string witness;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;

  std::string to_text() const {
    std::string line = "CHECK " + check + " " + scope + (status == Status::Pass ? " PASS" : " FAIL");
    if (!witness.empty()) line += " " + witness;
    return line;
  }
};

class Report {
 public:
  void pass(std::string check, std::string scope) {
    entries_.push_back({std::move(check), std::move(scope), Status::Pass, {}});
  }

  void fail(std::string check, std::string scope, std::string witness) {
    entries_.push_back({std::move(check), std::move(scope), Status::Fail, std::move(witness)});
    ++failures_;
  }

  /// PASS when `witnesses` is empty, otherwise one FAIL per witness.
  void record(const std::string& check, const std::string& scope, const std::vector<std::string>& witnesses) {
    if (witnesses.empty()) pass(check, scope);
    for (const auto& w : witnesses) fail(check, scope, w);
  }

  void add(ReportEntry entry) {
    if (entry.status == Status::Fail) ++failures_;
    entries_.push_back(std::move(entry));
  }

  void append(const Report& other) {
    for (const auto& e : other.entries_) add(e);
  }

  const std::vector<ReportEntry>& entries() const noexcept { return entries_; }
  std::size_t failures() const noexcept { return failures_; }
  bool clean() const noexcept { return failures_ == 0; }

  std::string to_text() const {
    std::string out;
    for (const auto& e : entries_) out += e.to_text() + "\n";
    return out;
  }

  friend bool operator==(const Report& a, const Report& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<ReportEntry> entries_;
  std::size_t failures_ = 0;
};

}  // namespace globk
