#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsqg {

enum class Errc {
    InvalidArgument,
    SingularAtOrigin,
    Overflow,
    GridTooSmall,
    QuadratureFailure,
    SingularIntegrand,
    ShapeMismatch,
    RangeTooNarrow,
    ZeroModeUndefined,
    EmptyBlock,
    CflViolation,
    Blowup,
    LocalizationViolated,
    ParseError,
    IoError,
    UsageError,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised by the config and expression parsers; positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column);

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Raised when a tracked norm becomes non-finite during time integration.
class BlowupError : public Error {
public:
    BlowupError(const std::string& message, double last_good_time);

    [[nodiscard]] double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

}  // namespace gsqg
