#pragma once

#include <algorithm>
#include <deque>
#include <string>
#include <string_view>

namespace bankit {

enum class CheckStatus { not_applicable, verified, violated };

[[nodiscard]] constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::violated: return "violated";
    default: return "not-applicable";
  }
}

/// Outcome of one property over one run. A check stays not_applicable until
/// an instance of its hypothesis is met; the first violation is kept as the
/// witness.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::not_applicable;
  std::size_t instances = 0;
  std::string witness;

  void pass() {
    ++instances;
    if (status == CheckStatus::not_applicable) status = CheckStatus::verified;
  }
  void fail(std::string why) {
    ++instances;
    if (status != CheckStatus::violated) {
      status = CheckStatus::violated;
      witness = std::move(why);
    }
  }
  void expect(bool ok, const std::string& why_not) {
    if (ok) {
      pass();
    } else {
      fail(why_not);
    }
  }
};

struct CheckReport {
  // A deque keeps references returned by add() valid.
  std::deque<Check> checks;

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), CheckStatus::not_applicable, 0, {}});
    return checks.back();
  }
  [[nodiscard]] const Check* find(std::string_view name) const {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }
  [[nodiscard]] bool ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
      return c.status == CheckStatus::violated;
    });
  }
};

}  // namespace bankit
