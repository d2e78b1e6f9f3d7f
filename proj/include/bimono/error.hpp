#ifndef BIMONO_ERROR_HPP
#define BIMONO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace bimono {

enum class ErrorKind {
    invalid_input,
    resource_limit,
    incomplete_table,
    singular_series,
    unsupported_parameters,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to a stable JSON error object.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace bimono

#endif
