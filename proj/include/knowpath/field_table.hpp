#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace knowpath {

/// Top knowledge division a field belongs to.
enum class Division { science, social_science };

std::string_view division_token(Division d); // "science" / "social_science"
std::optional<Division> parse_division(std::string_view token); // case-insensitive

/// Interned field identifiers with their taxonomy links. Fields get dense
/// indices 0..n-1 in insertion (file) order. A class may hold many fields but
/// always belongs to exactly one division; classes get dense indices in order
/// of first appearance. Immutable once populated; share read-only.
class FieldTable {
public:
    /// Registers a field. Throws std::invalid_argument on a duplicate
    /// category or when `cls` was previously seen under another division.
    int add(std::string category, std::string cls, Division division);

    int size() const { return static_cast<int>(categories_.size()); }

    std::optional<int> find(std::string_view category) const;
    const std::string& category(int field) const { return categories_.at(field); }
    const std::string& field_class(int field) const { return class_labels_.at(class_of_.at(field)); }
    int class_index(int field) const { return class_of_.at(field); }
    Division division(int field) const { return division_of_.at(field); }

    /// Class labels in first-appearance order.
    const std::vector<std::string>& class_labels() const { return class_labels_; }
    Division class_division(int cls) const { return class_division_.at(cls); }

    int count_in_division(Division d) const;

private:
    std::vector<std::string> categories_;
    std::vector<int> class_of_;
    std::vector<Division> division_of_;
    std::vector<std::string> class_labels_;
    std::vector<Division> class_division_;
    std::unordered_map<std::string, int> category_index_;
    std::unordered_map<std::string, int> class_index_;
};

/// Loads a taxonomy CSV with header `category,class,division`. Division
/// tokens are `science` or `social_science`, case-insensitive. Throws
/// ParseError with the offending line number on duplicates, unknown division
/// tokens, or a class assigned to two divisions.
FieldTable load_taxonomy(const std::filesystem::path& path);

} // namespace knowpath
