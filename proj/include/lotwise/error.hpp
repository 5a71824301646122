#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lotwise {

/// Raised when an operation is called outside its mathematical domain
/// (empty order, non-positive cycle time, undefined threshold, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an input document cannot be turned into domain values.
/// `field` is the dotted path of the offending key, empty when the
/// document itself is malformed.
class InputError : public std::runtime_error {
public:
    InputError(std::string code, std::string field, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)), field_(std::move(field)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& field() const noexcept { return field_; }

private:
    std::string code_;
    std::string field_;
};

}  // namespace lotwise
