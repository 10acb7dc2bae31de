// errors.hpp

#ifndef EUPROD_ERRORS_HPP
#define EUPROD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace euprod {

/// The computation finished but the certified radius misses the requested
/// number of decimals; partial certified output is still valid.
struct PrecisionShortfall : std::runtime_error {
    explicit PrecisionShortfall(const std::string& what) : std::runtime_error(what) {}
};

/// No admissible parameter (recursion depth, series length) can reach the
/// requested accuracy; the caller should raise P.
struct InsufficientParameters : std::domain_error {
    explicit InsufficientParameters(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedInput : std::domain_error {
    explicit UnsupportedInput(const std::string& what) : std::domain_error(what) {}
};

}  // namespace euprod

#endif  // EUPROD_ERRORS_HPP
