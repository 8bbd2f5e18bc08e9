#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frc/code.hpp"
#include "frc/orbit.hpp"
#include "frc/parameters.hpp"
#include "frc/verify.hpp"

#include <json.hpp>

namespace frc::io {

/// Parsed contents of an `frc v1` file.
struct CodeDocument {
    Parameters header;
    std::vector<Subset> body;

    FrCode to_code() const { return {header, body}; }
    friend bool operator==(const CodeDocument&, const CodeDocument&) = default;
};

enum class ParseErrorKind {
    MalformedHeader,
    MalformedLine,
    CountMismatch,
    ElementOutOfRange,
    DuplicateElementInLine,
};

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    /// 1-based line number the error refers to.
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

/// `frc v1 n=.. d=.. theta=.. rho=..[ k=..]` followed by one line of
/// ascending 1-based elements per set, every line newline-terminated.
std::string render_code(const FrCode& code);
std::string render_header(const Parameters& params);

/// Strict inverse of render_code. Trailing spaces, tabs and carriage returns
/// on a line, trailing blank lines, and a missing final newline are accepted;
/// anything else raises ParseError.
CodeDocument parse_code(std::string_view text);

std::string render_report(const FeasibilityReport& report);
std::string render_report(const VerificationReport& report);

nlohmann::ordered_json to_json(const Parameters& params);
nlohmann::ordered_json to_json(const FeasibilityReport& report);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const FrCode& code);
nlohmann::ordered_json to_json(const CyclicOrbit& orbit);

}  // namespace frc::io
