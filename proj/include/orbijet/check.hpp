#ifndef ORBIJET_CHECK_HPP
#define ORBIJET_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

namespace orbijet
{

// Outcome of one identity check. On failure the witness holds the exact
// difference (or another concrete counterexample).
struct CheckResult {
    std::string name;
    std::string inputs;
    bool pass = true;
    std::optional<std::string> witness;
};

class CheckReport
{
public:
    void add(CheckResult r)
    {
        results_.push_back(std::move(r));
    }
    void append(const CheckReport &other)
    {
        results_.insert(results_.end(), other.results_.begin(), other.results_.end());
    }
    const std::vector<CheckResult> &results() const
    {
        return results_;
    }
    bool all_passed() const
    {
        for (const auto &r : results_) {
            if (!r.pass) {
                return false;
            }
        }
        return true;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &r : results_) {
            n += r.pass ? 0 : 1;
        }
        return n;
    }

private:
    std::vector<CheckResult> results_;
};

} // namespace orbijet

#endif
