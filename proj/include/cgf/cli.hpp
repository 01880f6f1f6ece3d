#pragma once

#include "cgf/certify.hpp"
#include "cgf/conjectures.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace cgf::cli {

// Exit codes of run_command.
inline constexpr int kExitTrue = 0;          // success / verdict true
inline constexpr int kExitFalse = 1;         // verdict false (negative coefficient)
inline constexpr int kExitUndetermined = 2;  // no verdict (e.g. not a polynomial)
inline constexpr int kExitUsage = 3;         // usage or parse error
inline constexpr int kExitCap = 4;           // degree cap exceeded

struct ParseError : std::runtime_error {
    ParseError(std::size_t position, std::string token, const std::string& message)
        : std::runtime_error(message + " at position " + std::to_string(position) +
                             (token.empty() ? "" : " near '" + token + "'")),
          position(position), token(std::move(token)) {}
    std::size_t position;
    std::string token;
};

// Grammar: intlist "/" intlist, intlist = comma-separated positive decimal
// integers, whitespace tolerated, either list may be empty.
QuotientSpec parse_spec(const std::string& text);
std::string render_spec(const QuotientSpec& spec);

struct ReportOptions {
    bool include_coefficients = false;
    bool include_timings = false;
};

// Schema "cgf-report/1". All big integers are decimal strings; timings (behind
// the flag) are integral microseconds, so the document never contains floats.
nlohmann::json report_document(const CertificateReport& report, const ReportOptions& opts = {});

// Throws std::invalid_argument on schema violations or unknown fields.
void validate_report_document(const nlohmann::json& doc);

// Rebuilds spec + certificates from a document (round-trip support).
CertificateReport report_from_document(const nlohmann::json& doc);

nlohmann::json scan_record_document(const ScanRecord& rec, bool include_timings = false);

// Dispatch a full command line (without argv[0]).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cgf::cli
