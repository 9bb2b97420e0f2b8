#include "knowpath/citation_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "csv.hpp"
#include "knowpath/errors.hpp"

namespace knowpath {

void CitationMatrix::add(int citing, int cited, double count) {
    if (citing < 0 || citing >= n_ || cited < 0 || cited >= n_) {
        throw std::invalid_argument("citation cell index out of range");
    }
    if (!(count >= 0.0)) {
        throw std::invalid_argument("citation count must be non-negative");
    }
    cells_[static_cast<std::size_t>(citing) * n_ + cited] += count;
}

double CitationMatrix::total() const {
    double sum = 0.0;
    for (double c : cells_) sum += c;
    return sum;
}

bool CitationMatrix::empty() const {
    return std::all_of(cells_.begin(), cells_.end(), [](double c) { return c == 0.0; });
}

void CitationMatrix::scale(double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be positive");
    for (double& c : cells_) c *= factor;
}

namespace {

double parse_count(const csv::Reader& reader, const std::string& token) {
    auto value = csv::parse_number(token);
    if (!value || std::isnan(*value)) {
        throw ParseError(reader.context() + "invalid count `" + token + "`");
    }
    if (*value < 0.0) {
        throw ParseError(reader.context() + "negative count `" + token + "`");
    }
    return *value;
}

int require_field(const csv::Reader& reader, const FieldTable& fields, const std::string& id) {
    auto index = fields.find(id);
    if (!index) throw ParseError(reader.context() + "unknown field `" + id + "`");
    return *index;
}

} // namespace

CitationMatrix load_category_citations(const std::filesystem::path& path,
                                       const FieldTable& fields, const IngestOptions& options) {
    csv::Reader reader(path);
    reader.expect_header({"citing", "cited", "count"});
    CitationMatrix matrix(fields.size());
    std::vector<std::string> row;
    while (reader.next(row, 3)) {
        double count = parse_count(reader, row[2]);
        if (count == 0.0) continue;
        if (options.drop_self && row[0] == row[1]) continue;
        int citing = require_field(reader, fields, row[0]);
        int cited = require_field(reader, fields, row[1]);
        matrix.add(citing, cited, count);
    }
    return matrix;
}

CitationMatrix collapse_journal_citations(const std::filesystem::path& journal_citations,
                                          const std::filesystem::path& assignments,
                                          const FieldTable& fields, const IngestOptions& options) {
    std::unordered_map<std::string, std::vector<int>> assigned;
    {
        csv::Reader reader(assignments);
        reader.expect_header({"journal", "category"});
        std::vector<std::string> row;
        while (reader.next(row, 2)) {
            int category = require_field(reader, fields, row[1]);
            auto& list = assigned[row[0]];
            if (std::find(list.begin(), list.end(), category) != list.end()) {
                throw ParseError(reader.context() + "duplicate assignment of journal `" + row[0] +
                                 "` to category `" + row[1] + "`");
            }
            list.push_back(category);
        }
    }

    struct Record {
        const std::vector<int>* citing;
        const std::vector<int>* cited;
        double count;
    };
    std::vector<Record> records;
    std::set<std::string> unassigned;
    {
        csv::Reader reader(journal_citations);
        reader.expect_header({"citing_journal", "cited_journal", "count"});
        std::vector<std::string> row;
        while (reader.next(row, 3)) {
            double count = parse_count(reader, row[2]);
            if (count == 0.0) continue;
            if (options.drop_self && row[0] == row[1]) continue;
            const std::vector<int>* citing = nullptr;
            const std::vector<int>* cited = nullptr;
            if (auto it = assigned.find(row[0]); it != assigned.end()) citing = &it->second;
            else unassigned.insert(row[0]);
            if (auto it = assigned.find(row[1]); it != assigned.end()) cited = &it->second;
            else unassigned.insert(row[1]);
            if (citing && cited) records.push_back({citing, cited, count});
        }
        if (!unassigned.empty()) {
            std::string list;
            for (const auto& journal : unassigned) {
                if (!list.empty()) list += ", ";
                list += '`' + journal + '`';
            }
            throw ParseError(journal_citations.string() + ": journals without assignment: " + list);
        }
    }

    CitationMatrix matrix(fields.size());
    for (const Record& record : records) {
        for (int citing : *record.citing) {
            for (int cited : *record.cited) {
                matrix.add(citing, cited, record.count);
            }
        }
    }
    return matrix;
}

} // namespace knowpath
