#ifndef ANTIPODE_REPORT_HPP
#define ANTIPODE_REPORT_HPP

#include <string>
#include <vector>

namespace antipode {

struct Violation {
    std::string check;
    std::string witness;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string subject = {}) : subject_(std::move(subject)) {}

    void fail(std::string check, std::string witness) { violations_.push_back({std::move(check), std::move(witness)}); }
    void merge(const VerificationReport& other)
    {
        violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
    }

    bool ok() const noexcept { return violations_.empty(); }
    const std::string& subject() const noexcept { return subject_; }
    const std::vector<Violation>& violations() const noexcept { return violations_; }

    bool failed(const std::string& check) const
    {
        for (const auto& v : violations_)
            if (v.check == check)
                return true;
        return false;
    }

    std::string to_string() const
    {
        if (ok())
            return subject_ + ": ok\n";
        std::string out;
        for (const auto& v : violations_)
            out += subject_ + ": FAIL " + v.check + " " + v.witness + "\n";
        return out;
    }

private:
    std::string subject_;
    std::vector<Violation> violations_;
};

} // namespace antipode

#endif
