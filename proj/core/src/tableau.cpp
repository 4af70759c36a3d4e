#include "shuffle/tableau.hpp"

#include <stdexcept>

namespace shuffle {

StandardYoungTableau::StandardYoungTableau(Partition shape,
                                           std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    const int n = shape_.size();
    if (rows_.size() != static_cast<std::size_t>(shape_.length()))
        throw std::invalid_argument("row count must match the shape");
    std::vector<char> seen(n + 1, 0);
    for (int r = 0; r < shape_.length(); ++r) {
        if (rows_[r].size() != static_cast<std::size_t>(shape_.parts()[r]))
            throw std::invalid_argument("row length must match the shape");
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            const int v = rows_[r][c];
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("entries must be a permutation of 1..n");
            seen[v] = 1;
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("rows must increase left to right");
            if (r > 0 && rows_[r - 1][c] >= v)
                throw std::invalid_argument("columns must increase top to bottom");
        }
    }
}

namespace {

void emit_tableaux(const Partition& shape, int next_entry,
                   std::vector<std::vector<int>>& rows,
                   std::vector<int>& fill_counts,
                   std::vector<StandardYoungTableau>& out) {
    const int n = shape.size();
    if (next_entry > n) {
        out.push_back(StandardYoungTableau(shape, rows));
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        const bool row_open = fill_counts[r] < shape.parts()[r];
        const bool stays_standard = r == 0 || fill_counts[r] < fill_counts[r - 1];
        if (row_open && stays_standard) {
            rows[r].push_back(next_entry);
            ++fill_counts[r];
            emit_tableaux(shape, next_entry + 1, rows, fill_counts, out);
            --fill_counts[r];
            rows[r].pop_back();
        }
    }
}

}  // namespace

std::vector<StandardYoungTableau> syt_enumerate(const Partition& shape) {
    if (shape.size() < 1 || shape.size() > kMaxTableauSize)
        throw std::invalid_argument("syt_enumerate supports 1 <= |shape| <= " +
                                    std::to_string(kMaxTableauSize));
    std::vector<StandardYoungTableau> out;
    std::vector<std::vector<int>> rows(shape.length());
    std::vector<int> fill_counts(shape.length(), 0);
    emit_tableaux(shape, 1, rows, fill_counts, out);
    return out;
}

SubsetMask descent_set(const StandardYoungTableau& tableau) {
    const int n = tableau.size();
    std::vector<int> column_of(n + 1, 0);
    for (const auto& row : tableau.rows())
        for (std::size_t c = 0; c < row.size(); ++c)
            column_of[row[c]] = static_cast<int>(c);
    SubsetMask mask = 0;
    for (int i = 1; i < n; ++i)
        if (column_of[i + 1] <= column_of[i]) mask |= SubsetMask{1} << (i - 1);
    return mask;
}

}  // namespace shuffle
