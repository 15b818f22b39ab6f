#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rackgraph {

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A single failed identity together with the basis elements that witness it.
struct Violation {
    std::string identity;
    std::string witness;
};

/// Outcome of an exhaustive check. An empty violation list means every
/// instance of every identity held.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    void add(std::string identity, std::string witness)
    {
        violations.push_back({std::move(identity), std::move(witness)});
    }

    void merge(const ValidationReport& other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }

    bool mentions(const std::string& identity) const
    {
        for (const auto& v : violations)
            if (v.identity == identity) return true;
        return false;
    }
};

namespace detail {

template <class... Args>
std::string cat(const Args&... args)
{
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

template <class Seq>
std::string seq_str(const Seq& s)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& v : s) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace detail
}  // namespace rackgraph
