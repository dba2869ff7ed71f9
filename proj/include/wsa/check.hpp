#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsa {

enum class CheckStatus { Pass, Fail, NotApplicable };

inline std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

/// Outcome of one named assertion. `witnesses` carries failing paths and
/// scalars, and also positive findings worth reporting (e.g. an extra socle
/// element).
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::NotApplicable;
  std::string summary;
  std::vector<std::string> witnesses;

  bool passed() const { return status == CheckStatus::Pass; }
  bool failed() const { return status == CheckStatus::Fail; }
};

/// Accumulates failures for one check; passes if nothing was recorded and at
/// least one instance was examined.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string id) { result_.id = std::move(id); }

  void examined(std::size_t k = 1) { examined_ += k; }
  void fail(std::string witness) {
    ++examined_;
    failures_.push_back(std::move(witness));
  }
  void require(bool ok, const std::string& witness) {
    if (ok) examined();
    else fail(witness);
  }
  void note(std::string line) { notes_.push_back(std::move(line)); }
  std::size_t examined_count() const { return examined_; }

  CheckResult finish(std::string summary = {}) && {
    if (examined_ == 0) {
      result_.status = CheckStatus::NotApplicable;
    } else if (failures_.empty()) {
      result_.status = CheckStatus::Pass;
    } else {
      result_.status = CheckStatus::Fail;
    }
    if (summary.empty()) summary = std::to_string(examined_) + " instance(s) checked";
    result_.summary = std::move(summary);
    result_.witnesses = failures_.empty() ? std::move(notes_) : std::move(failures_);
    return std::move(result_);
  }

 private:
  CheckResult result_;
  std::size_t examined_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

}  // namespace wsa
