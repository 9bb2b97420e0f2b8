#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knowpath::csv {

/// Splits one comma-separated record. Double-quoted fields may contain
/// commas and doubled quotes. Throws std::invalid_argument on unbalanced
/// quoting.
std::vector<std::string> split(const std::string& line);

/// Quotes a field when it contains a comma, quote, or newline.
std::string quote(std::string_view field);

/// Strict numeric parsing: the whole token must be consumed.
std::optional<double> parse_number(std::string_view token);

/// Record reader over a CSV file: strips an optional UTF-8 BOM, tolerates
/// CRLF endings and trailing blank lines, tracks line numbers for error
/// context, and throws ParseError on malformed rows.
class Reader {
public:
    explicit Reader(std::filesystem::path path);

    /// Requires the first record to equal `names` exactly.
    void expect_header(std::initializer_list<std::string_view> names);

    /// Reads the next record, requiring `arity` fields when positive.
    /// Returns false at end of input.
    bool next(std::vector<std::string>& fields, int arity = -1);

    /// "path:line: " for the record most recently returned.
    std::string context() const;

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::size_t line_ = 0;
    bool first_ = true;
};

} // namespace knowpath::csv
