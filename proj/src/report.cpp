#include "aslkit/report.hpp"

#include <algorithm>

namespace aslkit {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "fail";
}

void Report::add(std::string name, CheckStatus status, std::string witness, double ms) {
  if (status == CheckStatus::Fail && witness.empty()) witness = "(no witness recorded)";
  checks_.push_back(CheckResult{std::move(name), status, std::move(witness), ms});
}

void Report::expect(std::string name, bool ok, std::string witness) {
  if (ok) {
    add(std::move(name), CheckStatus::Pass);
  } else {
    add(std::move(name), CheckStatus::Fail, std::move(witness));
  }
}

void Report::note_convention(std::string text) {
  if (std::find(conventions_.begin(), conventions_.end(), text) == conventions_.end()) {
    conventions_.push_back(std::move(text));
  }
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    auto copy = c;
    if (!prefix.empty()) copy.name = prefix + "." + copy.name;
    checks_.push_back(std::move(copy));
  }
  for (const auto& c : other.conventions_) note_convention(c);
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckTimer::CheckTimer(Report& report)
    : report_(report), first_(report.checks().size()), start_(std::chrono::steady_clock::now()) {}

CheckTimer::~CheckTimer() {
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  auto& checks = report_.mutable_checks();
  for (std::size_t i = first_; i < checks.size(); ++i) checks[i].ms = ms;
}

}  // namespace aslkit
