#ifndef WKTAU_ERRORS_HPP
#define WKTAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wktau {

/// Invalid arguments or preconditions violated by the caller.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Arithmetic outside the domain of an operation (division by zero).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A requested coefficient lies above the truncation degree of a series.
class DegreeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A computed quantity contradicts a structural theorem the pipeline relies on
/// (nonzero coefficient on an even variable, a selection-rule violation, a
/// nonreal intersection number).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace wktau

#endif  // WKTAU_ERRORS_HPP
