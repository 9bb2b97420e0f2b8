#include "csv.hpp"

#include <charconv>
#include <stdexcept>

#include "knowpath/errors.hpp"

namespace knowpath::csv {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"') {
            if (!current.empty()) throw std::invalid_argument("quote inside unquoted field");
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
        ++i;
    }
    if (quoted) throw std::invalid_argument("unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::optional<double> parse_number(std::string_view token) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

Reader::Reader(std::filesystem::path path) : path_(std::move(path)), in_(path_) {
    if (!in_) throw ParseError(path_.string() + ": cannot open file");
}

void Reader::expect_header(std::initializer_list<std::string_view> names) {
    std::vector<std::string> fields;
    if (!next(fields) || fields.size() != names.size() ||
        !std::equal(fields.begin(), fields.end(), names.begin())) {
        std::string expected;
        for (auto name : names) {
            if (!expected.empty()) expected += ',';
            expected += name;
        }
        throw ParseError(path_.string() + ":1: expected header `" + expected + "`");
    }
}

bool Reader::next(std::vector<std::string>& fields, int arity) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first_) {
            first_ = false;
            if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        }
        if (line.empty()) continue;
        try {
            fields = split(line);
        } catch (const std::invalid_argument& e) {
            throw ParseError(context() + e.what());
        }
        if (arity > 0 && fields.size() != static_cast<std::size_t>(arity)) {
            throw ParseError(context() + "expected " + std::to_string(arity) + " fields, got " +
                             std::to_string(fields.size()));
        }
        return true;
    }
    return false;
}

std::string Reader::context() const {
    return path_.string() + ":" + std::to_string(line_) + ": ";
}

} // namespace knowpath::csv
