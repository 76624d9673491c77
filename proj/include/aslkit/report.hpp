#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace aslkit {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // always set on failure
  double ms = 0.0;
};

// Ordered collection of check outcomes plus the conventions they were run
// under. Timings are informational and never part of the comparison surface.
class Report {
 public:
  void add(std::string name, CheckStatus status, std::string witness = {}, double ms = 0.0);
  void pass(std::string name, std::string note = {}) { add(std::move(name), CheckStatus::Pass, std::move(note)); }
  void fail(std::string name, std::string witness) { add(std::move(name), CheckStatus::Fail, std::move(witness)); }
  void skip(std::string name, std::string why) { add(std::move(name), CheckStatus::Skip, std::move(why)); }
  // Records a pass/fail outcome; the witness is kept only for failures.
  void expect(std::string name, bool ok, std::string witness);
  void note_convention(std::string text);
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t failures() const;
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::string>& conventions() const { return conventions_; }
  const CheckResult* find(const std::string& name) const;
  std::vector<CheckResult>& mutable_checks() { return checks_; }

 private:
  std::vector<CheckResult> checks_;
  std::vector<std::string> conventions_;
};

// Times a block and stamps the elapsed milliseconds onto every check added
// to `report` while the timer was alive.
class CheckTimer {
 public:
  explicit CheckTimer(Report& report);
  ~CheckTimer();
  CheckTimer(const CheckTimer&) = delete;
  CheckTimer& operator=(const CheckTimer&) = delete;

 private:
  Report& report_;
  std::size_t first_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace aslkit
