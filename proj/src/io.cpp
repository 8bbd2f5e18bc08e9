#include "frc/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace frc::io {

namespace {

const char* flag(bool value) { return value ? "true" : "false"; }

std::string_view rstrip(std::string_view line) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    return line;
}

// Decimal without sign or leading zeros.
bool parse_uint(std::string_view token, std::uint64_t& value) {
    if (token.empty() || (token.size() > 1 && token.front() == '0')) return false;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_spaces(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const auto next = line.find(' ', pos);
        const auto stop = next == std::string_view::npos ? line.size() : next;
        tokens.push_back(line.substr(pos, stop - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto next = text.find('\n', pos);
        if (next == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return lines;
}

Parameters parse_header(std::string_view line) {
    const auto tokens = split_spaces(rstrip(line));
    auto fail = [](const std::string& why) { return ParseError(ParseErrorKind::MalformedHeader, 1, why); };
    if (tokens.size() < 6 || tokens.size() > 7 || tokens[0] != "frc" || tokens[1] != "v1") {
        throw fail("expected 'frc v1 n=<n> d=<d> theta=<theta> rho=<rho> [k=<k>]'");
    }
    constexpr std::string_view keys[] = {"n=", "d=", "theta=", "rho=", "k="};
    std::uint64_t values[5] = {};
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        const auto key = keys[i - 2];
        const auto token = tokens[i];
        if (token.substr(0, key.size()) != key || !parse_uint(token.substr(key.size()), values[i - 2]) ||
            values[i - 2] == 0) {
            throw fail("field " + std::to_string(i - 1) + " must be " + std::string(key) + "<positive integer>");
        }
    }
    Parameters params{values[0], values[1], values[2], values[3], std::nullopt};
    if (tokens.size() == 7) params.k = values[4];
    if (params.theta > 0xffffffffULL) throw fail("theta too large");
    return params;
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) noexcept {
    switch (kind) {
        case ParseErrorKind::MalformedHeader: return "MalformedHeader";
        case ParseErrorKind::MalformedLine: return "MalformedLine";
        case ParseErrorKind::CountMismatch: return "CountMismatch";
        case ParseErrorKind::ElementOutOfRange: return "ElementOutOfRange";
        case ParseErrorKind::DuplicateElementInLine: return "DuplicateElementInLine";
    }
    return "Unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

std::string render_header(const Parameters& params) {
    std::string out = "frc v1 n=" + std::to_string(params.n) + " d=" + std::to_string(params.d) +
                      " theta=" + std::to_string(params.theta) + " rho=" + std::to_string(params.rho);
    if (params.k) out += " k=" + std::to_string(*params.k);
    return out;
}

std::string render_code(const FrCode& code) {
    std::string out = render_header(code.params);
    out += '\n';
    for (const auto& set : code.sets) {
        out += set.to_string();
        out += '\n';
    }
    return out;
}

CodeDocument parse_code(std::string_view text) {
    auto lines = split_lines(text);
    while (!lines.empty() && rstrip(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, 1, "empty input");

    CodeDocument doc;
    doc.header = parse_header(lines[0]);
    const auto theta = static_cast<std::uint32_t>(doc.header.theta);
    const auto n = doc.header.n;

    const std::size_t body_lines = lines.size() - 1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        if (i > n) {
            throw ParseError(ParseErrorKind::CountMismatch, line_no,
                             "header declares n=" + std::to_string(n) + " but the body has more lines");
        }
        const auto content = rstrip(lines[i]);
        std::vector<std::uint64_t> elements;
        for (const auto token : split_spaces(content)) {
            std::uint64_t value = 0;
            if (!parse_uint(token, value)) {
                throw ParseError(ParseErrorKind::MalformedLine, line_no,
                                 "expected single-space-separated positive integers");
            }
            if (value < 1 || value > theta) {
                throw ParseError(ParseErrorKind::ElementOutOfRange, line_no,
                                 "element " + std::to_string(value) + " outside 1.." + std::to_string(theta));
            }
            elements.push_back(value);
        }
        if (elements.size() != doc.header.d) {
            throw ParseError(ParseErrorKind::CountMismatch, line_no,
                             "expected d=" + std::to_string(doc.header.d) + " elements, found " +
                                 std::to_string(elements.size()));
        }
        auto sorted = elements;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParseError(ParseErrorKind::DuplicateElementInLine, line_no, "repeated element");
        }
        if (sorted != elements) {
            throw ParseError(ParseErrorKind::MalformedLine, line_no, "elements must be ascending");
        }
        doc.body.push_back(Subset::from_elements(theta, elements));
    }
    if (body_lines != n) {
        throw ParseError(ParseErrorKind::CountMismatch, lines.size() + 1,
                         "header declares n=" + std::to_string(n) + " but the body has " +
                             std::to_string(body_lines) + " lines");
    }
    return doc;
}

std::string render_report(const FeasibilityReport& report) {
    std::ostringstream out;
    const auto& p = report.params;
    out << "params n=" << p.n << " d=" << p.d << " theta=" << p.theta << " rho=" << p.rho;
    if (p.k) out << " k=" << *p.k;
    out << '\n';
    out << "feasible=" << flag(report.feasible) << " omega=" << report.omega_pair.omega
        << " a=" << report.omega_pair.a << " g=" << report.g << '\n';
    out << "balance_ok=" << flag(report.balance_ok) << " capacity_ok=" << flag(report.capacity_ok) << '\n';
    return out.str();
}

std::string render_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "valid=" << flag(report.valid) << '\n';
    out << "count_ok=" << flag(report.count_ok) << " cardinality_ok=" << flag(report.cardinality_ok)
        << " distinct_ok=" << flag(report.distinct_ok) << " coverage_ok=" << flag(report.coverage_ok) << '\n';
    out << "coverage";
    for (const auto& [element, count] : report.coverage_histogram) out << ' ' << element << '=' << count;
    out << '\n';
    return out.str();
}

nlohmann::ordered_json to_json(const Parameters& params) {
    nlohmann::ordered_json j;
    j["n"] = params.n;
    j["d"] = params.d;
    j["theta"] = params.theta;
    j["rho"] = params.rho;
    if (params.k) j["k"] = *params.k;
    return j;
}

nlohmann::ordered_json to_json(const FeasibilityReport& report) {
    nlohmann::ordered_json j;
    j["params"] = to_json(report.params);
    j["feasible"] = report.feasible;
    j["balance_ok"] = report.balance_ok;
    j["capacity_ok"] = report.capacity_ok;
    j["omega"] = report.omega_pair.omega;
    j["a"] = report.omega_pair.a;
    j["g"] = report.g;
    return j;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["valid"] = report.valid;
    j["count_ok"] = report.count_ok;
    j["cardinality_ok"] = report.cardinality_ok;
    j["distinct_ok"] = report.distinct_ok;
    j["coverage_ok"] = report.coverage_ok;
    auto& histogram = j["coverage_histogram"] = nlohmann::ordered_json::object();
    for (const auto& [element, count] : report.coverage_histogram) histogram[std::to_string(element)] = count;
    return j;
}

nlohmann::ordered_json to_json(const FrCode& code) {
    nlohmann::ordered_json j;
    j["format"] = "frc";
    j["version"] = 1;
    j["params"] = to_json(code.params);
    auto& sets = j["sets"] = nlohmann::ordered_json::array();
    for (const auto& set : code.sets) sets.push_back(set.elements());
    return j;
}

nlohmann::ordered_json to_json(const CyclicOrbit& orbit) {
    nlohmann::ordered_json j;
    j["canonical"] = orbit.canonical.elements();
    j["size"] = orbit.size;
    j["balance"] = orbit.balance();
    return j;
}

}  // namespace frc::io
