#pragma once

#include <filesystem>
#include <vector>

#include "knowpath/field_table.hpp"

namespace knowpath {

/// Directed citing -> cited counts between fields, stored dense. Counts are
/// non-negative reals; a zero cell means "no record". Self-citation cells are
/// kept (they never become flow edges).
class CitationMatrix {
public:
    CitationMatrix() = default;
    explicit CitationMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }

    double at(int citing, int cited) const {
        return cells_[static_cast<std::size_t>(citing) * n_ + cited];
    }
    /// Accumulates `count` onto the (citing, cited) cell. Throws
    /// std::invalid_argument on a negative count or out-of-range index.
    void add(int citing, int cited, double count);

    /// Sum of all cells.
    double total() const;
    /// True when every cell is zero.
    bool empty() const;

    /// Multiplies every cell by `factor` (> 0).
    void scale(double factor);

private:
    int n_ = 0;
    std::vector<double> cells_;
};

struct IngestOptions {
    /// Drop self-citation records at load: rows with citing == cited for
    /// category-level input, citing_journal == cited_journal for
    /// journal-level input. Category self-cells produced by overlapping
    /// journal assignments are always kept.
    bool drop_self = false;
};

/// Loads a field-to-field citation CSV with header `citing,cited,count`.
/// Counts must be non-negative; zero-count rows are dropped; repeated
/// (citing, cited) rows accumulate. Throws ParseError (with line number) on
/// unknown field ids, negative counts, or malformed rows.
CitationMatrix load_category_citations(const std::filesystem::path& path,
                                       const FieldTable& fields,
                                       const IngestOptions& options = {});

/// Collapses journal-level citations into field-level counts via multiple
/// counting: a count for (J1, J2) is added to every (c1, c2) in
/// assignments(J1) x assignments(J2). Journal citation CSV header is
/// `citing_journal,cited_journal,count`; assignment CSV header is
/// `journal,category`. Throws ParseError when a referenced journal has no
/// assignment (listing the offending journals), on duplicate
/// (journal, category) pairs, or on unknown categories.
CitationMatrix collapse_journal_citations(const std::filesystem::path& journal_citations,
                                          const std::filesystem::path& assignments,
                                          const FieldTable& fields,
                                          const IngestOptions& options = {});

} // namespace knowpath
