#ifndef POSTLIE_REPORT_HPP
#define POSTLIE_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace postlie {

struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Outcome of a verification: one entry per assertion made.
class Report
{
  public:
    void add(std::string name, bool passed, std::string detail = {})
    {
        checks_.push_back({std::move(name), passed, std::move(detail)});
    }

    void merge(const Report& other)
    {
        checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    }

    bool passed() const
    {
        return !checks_.empty() &&
               std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    const std::vector<Check>& checks() const { return checks_; }

  private:
    std::vector<Check> checks_;
};

} // namespace postlie

#endif
