#pragma once

// Sparse GF(2) row reduction. Rows are sorted vectors of column indices; each
// stored pivot row is keyed by its largest column.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <vector>

namespace rimfloer::grid::detail {

using SparseRow = std::vector<std::uint32_t>;

class Gf2Eliminator {
  public:
    explicit Gf2Eliminator(std::size_t columns) : pivot_of_(columns, -1) {}

    /// Reduces row against the stored pivots and keeps it if it survives.
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        pivot_of_[row.back()] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    [[nodiscard]] bool in_span(SparseRow row) const {
        reduce(row);
        return row.empty();
    }

    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }

  private:
    void reduce(SparseRow &row) const {
        SparseRow buf;
        while (!row.empty()) {
            const std::int32_t p = pivot_of_[row.back()];
            if (p < 0) return;
            const SparseRow &pivot = rows_[static_cast<std::size_t>(p)];
            buf.clear();
            std::set_symmetric_difference(row.begin(), row.end(), pivot.begin(), pivot.end(), std::back_inserter(buf));
            row.swap(buf);
        }
    }

    std::vector<std::int32_t> pivot_of_;
    std::vector<SparseRow> rows_;
};

/// Sorts and cancels repeated entries in pairs.
inline void normalize_mod2(SparseRow &row) {
    std::sort(row.begin(), row.end());
    SparseRow out;
    for (std::size_t i = 0; i < row.size();) {
        std::size_t j = i;
        while (j < row.size() && row[j] == row[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(row[i]);
        i = j;
    }
    row.swap(out);
}

}  // namespace rimfloer::grid::detail
