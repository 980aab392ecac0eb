#include "gsqg/error.hpp"

namespace gsqg {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::SingularAtOrigin: return "SingularAtOrigin";
        case Errc::Overflow: return "Overflow";
        case Errc::GridTooSmall: return "GridTooSmall";
        case Errc::QuadratureFailure: return "QuadratureFailure";
        case Errc::SingularIntegrand: return "SingularIntegrand";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::RangeTooNarrow: return "RangeTooNarrow";
        case Errc::ZeroModeUndefined: return "ZeroModeUndefined";
        case Errc::EmptyBlock: return "EmptyBlock";
        case Errc::CflViolation: return "CFLViolation";
        case Errc::Blowup: return "Blowup";
        case Errc::LocalizationViolated: return "LocalizationViolated";
        case Errc::ParseError: return "ParseError";
        case Errc::IoError: return "IOError";
        case Errc::UsageError: return "UsageError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(Errc::ParseError,
            message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

BlowupError::BlowupError(const std::string& message, double last_good_time)
    : Error(Errc::Blowup, message + " (last good time " + std::to_string(last_good_time) + ")"),
      last_good_time_(last_good_time) {}

}  // namespace gsqg
