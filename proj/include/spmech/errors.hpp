#ifndef SPMECH_ERRORS_HPP
#define SPMECH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spmech {

// Requested enumeration exceeds the configured desk-scale budget.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An argument is outside the operation's domain (bad agent, bad object, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A control-rights table has no entry for a submatching the algorithm reached.
class SpecIncompleteError : public std::runtime_error {
public:
    explicit SpecIncompleteError(const std::string& what) : std::runtime_error(what) {}
};

// A configuration the toolkit deliberately rejects (e.g. three brokers).
class UnsupportedConfigError : public std::runtime_error {
public:
    explicit UnsupportedConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed user input (rule files, preference strings, CLI arguments).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spmech

#endif
