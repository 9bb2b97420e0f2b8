#include "knowpath/field_table.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "csv.hpp"
#include "knowpath/errors.hpp"

namespace knowpath {

std::string_view division_token(Division d) {
    return d == Division::science ? "science" : "social_science";
}

std::optional<Division> parse_division(std::string_view token) {
    std::string lower(token);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "science") return Division::science;
    if (lower == "social_science") return Division::social_science;
    return std::nullopt;
}

int FieldTable::add(std::string category, std::string cls, Division division) {
    if (category_index_.count(category)) {
        throw std::invalid_argument("duplicate category `" + category + "`");
    }
    int cls_index;
    if (auto it = class_index_.find(cls); it != class_index_.end()) {
        cls_index = it->second;
        if (class_division_[cls_index] != division) {
            throw std::invalid_argument("class `" + cls + "` is already assigned to division `" +
                                        std::string(division_token(class_division_[cls_index])) +
                                        "`");
        }
    } else {
        cls_index = static_cast<int>(class_labels_.size());
        class_index_.emplace(cls, cls_index);
        class_labels_.push_back(cls);
        class_division_.push_back(division);
    }
    int field = static_cast<int>(categories_.size());
    category_index_.emplace(category, field);
    categories_.push_back(std::move(category));
    class_of_.push_back(cls_index);
    division_of_.push_back(division);
    return field;
}

std::optional<int> FieldTable::find(std::string_view category) const {
    auto it = category_index_.find(std::string(category));
    if (it == category_index_.end()) return std::nullopt;
    return it->second;
}

int FieldTable::count_in_division(Division d) const {
    return static_cast<int>(std::count(division_of_.begin(), division_of_.end(), d));
}

FieldTable load_taxonomy(const std::filesystem::path& path) {
    csv::Reader reader(path);
    reader.expect_header({"category", "class", "division"});
    FieldTable table;
    std::vector<std::string> fields;
    while (reader.next(fields, 3)) {
        auto division = parse_division(fields[2]);
        if (!division) {
            throw ParseError(reader.context() + "unknown division `" + fields[2] +
                             "` (expected science or social_science)");
        }
        try {
            table.add(std::move(fields[0]), std::move(fields[1]), *division);
        } catch (const std::invalid_argument& e) {
            throw ParseError(reader.context() + e.what());
        }
    }
    if (table.size() == 0) throw ParseError(path.string() + ": no field rows");
    return table;
}

} // namespace knowpath
