#include "shuffle/parking_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "shuffle/checked.hpp"

namespace shuffle {

ParkingFunction::ParkingFunction(DyckPath path, std::vector<int> cars)
    : path_(std::move(path)), cars_(std::move(cars)) {
    const int n = path_.order();
    if (static_cast<int>(cars_.size()) != n)
        throw std::invalid_argument("need one car per row");
    std::vector<char> seen(n + 1, 0);
    for (int c : cars_) {
        if (c < 1 || c > n || seen[c])
            throw std::invalid_argument("cars must be a permutation of 1..n");
        seen[c] = 1;
    }
    const std::vector<int> columns = path_.row_columns();
    for (int r = 1; r < n; ++r)
        if (columns[r] == columns[r - 1] && cars_[r] < cars_[r - 1])
            throw std::invalid_argument("cars in a column must increase bottom to top");
}

std::vector<CarPosition> car_positions(const ParkingFunction& pf) {
    const std::vector<int> columns = pf.path().row_columns();
    std::vector<CarPosition> positions;
    positions.reserve(columns.size());
    for (std::size_t r = 0; r < columns.size(); ++r) {
        const int row = static_cast<int>(r) + 1;
        positions.push_back({row, columns[r], row - 1 - columns[r]});
    }
    return positions;
}

int area(const ParkingFunction& pf) { return pf.path().area(); }

DinvPairs dinv_pairs(const ParkingFunction& pf) {
    const auto positions = car_positions(pf);
    const auto& cars = pf.cars();
    const int n = pf.order();
    DinvPairs pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = positions[i];
            const auto& b = positions[j];
            const int small = std::min(cars[i], cars[j]);
            const int large = std::max(cars[i], cars[j]);
            const auto& large_pos = (cars[i] == large) ? a : b;
            const auto& small_pos = (cars[i] == large) ? b : a;
            if (a.diagonal == b.diagonal) {
                if (large_pos.column > small_pos.column)
                    pairs.primary.emplace_back(small, large);
            } else if (a.diagonal == b.diagonal + 1 || b.diagonal == a.diagonal + 1) {
                if (large_pos.diagonal == small_pos.diagonal + 1 &&
                    large_pos.column < small_pos.column)
                    pairs.secondary.emplace_back(small, large);
            }
        }
    }
    std::sort(pairs.primary.begin(), pairs.primary.end());
    std::sort(pairs.secondary.begin(), pairs.secondary.end());
    return pairs;
}

int dinv(const ParkingFunction& pf) {
    const DinvPairs pairs = dinv_pairs(pf);
    return static_cast<int>(pairs.primary.size() + pairs.secondary.size());
}

std::vector<int> word(const ParkingFunction& pf) {
    const std::vector<int> diagonals = pf.path().row_diagonals();
    const std::vector<int> columns = pf.path().row_columns();
    const int n = pf.order();
    std::vector<int> rows(n);
    for (int r = 0; r < n; ++r) rows[r] = r;
    // Within one diagonal the columns are distinct, so this order is total.
    std::sort(rows.begin(), rows.end(), [&](int a, int b) {
        if (diagonals[a] != diagonals[b]) return diagonals[a] > diagonals[b];
        return columns[a] > columns[b];
    });
    std::vector<int> out(n);
    for (int k = 0; k < n; ++k) out[k] = pf.cars()[rows[k]];
    return out;
}

SubsetMask ides(const ParkingFunction& pf) {
    const std::vector<int> w = word(pf);
    const int n = pf.order();
    std::vector<int> position(n + 2, 0);
    for (int k = 0; k < n; ++k) position[w[k]] = k;
    SubsetMask mask = 0;
    for (int i = 1; i < n; ++i)
        if (position[i + 1] < position[i]) mask |= SubsetMask{1} << (i - 1);
    return mask;
}

Composition touch(const DyckPath& path) {
    const std::vector<int> diagonals = path.row_diagonals();
    const int n = path.order();
    // Row 1 has column 0, so the list of diagonal-0 rows always starts at 1.
    std::vector<int> zero_rows;
    for (int r = 0; r < n; ++r)
        if (diagonals[r] == 0) zero_rows.push_back(r + 1);
    std::vector<int> parts;
    parts.reserve(zero_rows.size());
    for (std::size_t k = 1; k < zero_rows.size(); ++k)
        parts.push_back(zero_rows[k] - zero_rows[k - 1]);
    parts.push_back(n + 1 - zero_rows.back());
    return Composition(std::move(parts));
}

Composition touch(const ParkingFunction& pf) { return touch(pf.path()); }

bool is_shuffle(const std::vector<int>& w, const Partition& blocks) {
    const int n = blocks.size();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("word length must equal the partition size");
    std::vector<char> seen(n + 1, 0);
    for (int v : w) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("word must be a permutation of 1..n");
        seen[v] = 1;
    }
    // block_of[v] and the next value each block expects; a shuffle shows every
    // block as exactly its increasing run.
    std::vector<int> block_of(n + 1, 0);
    std::vector<int> expected;
    int start = 1;
    for (int part : blocks.parts()) {
        for (int v = start; v < start + part; ++v)
            block_of[v] = static_cast<int>(expected.size());
        expected.push_back(start);
        start += part;
    }
    for (int v : w) {
        if (v != expected[block_of[v]]) return false;
        ++expected[block_of[v]];
    }
    return true;
}

ParkingFunction parse_parking_function(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw std::invalid_argument("expected 'path=...;cars=...'");
    std::string_view path_field = text.substr(0, semi);
    std::string_view cars_field = text.substr(semi + 1);
    if (!path_field.starts_with("path="))
        throw std::invalid_argument("missing 'path=' field");
    if (!cars_field.starts_with("cars="))
        throw std::invalid_argument("missing 'cars=' field");
    path_field.remove_prefix(5);
    cars_field.remove_prefix(5);

    std::vector<int> cars;
    std::size_t pos = 0;
    while (pos <= cars_field.size()) {
        std::size_t comma = cars_field.find(',', pos);
        if (comma == std::string_view::npos) comma = cars_field.size();
        std::string_view item = cars_field.substr(pos, comma - pos);
        if (item.empty()) throw std::invalid_argument("empty car label");
        int value = 0;
        for (char c : item) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("car labels must be integers");
            value = value * 10 + (c - '0');
            if (value > 1 << 20) throw std::invalid_argument("car label too large");
        }
        cars.push_back(value);
        pos = comma + 1;
    }
    return ParkingFunction(DyckPath::from_string(path_field), std::move(cars));
}

std::string format_parking_function(const ParkingFunction& pf) {
    std::string out = "path=" + pf.path().to_string() + ";cars=";
    for (int r = 0; r < pf.order(); ++r) {
        if (r) out += ',';
        out += std::to_string(pf.cars()[r]);
    }
    return out;
}

std::vector<ColumnGroup> column_groups(const DyckPath& path) {
    const std::vector<int> columns = path.row_columns();
    std::vector<ColumnGroup> groups;
    for (int r = 0; r < path.order(); ++r) {
        if (r == 0 || columns[r] != columns[r - 1])
            groups.push_back({r + 1, 1});
        else
            ++groups.back().count;
    }
    return groups;
}

LabelingOdometer::LabelingOdometer(const DyckPath& path)
    : groups_(column_groups(path)), cars_(path.order()) {
    const int n = path.order();
    pools_.resize(groups_.size());
    combs_.resize(groups_.size());
    pools_[0].resize(n);
    for (int v = 0; v < n; ++v) pools_[0][v] = v + 1;
    refill_from(0);
}

// Lexicographically next ascending index vector into 0..pool_size-1.
bool LabelingOdometer::next_combination(std::vector<int>& comb, int pool_size) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < pool_size - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void LabelingOdometer::write_group(std::size_t level) {
    const ColumnGroup& group = groups_[level];
    for (int k = 0; k < group.count; ++k)
        cars_[group.first_row - 1 + k] = pools_[level][combs_[level][k]];
}

// Resets every level from `level` on: pool = previous pool minus the labels
// the previous group selected, combination back to the first one.
void LabelingOdometer::refill_from(std::size_t level) {
    for (std::size_t g = level; g < groups_.size(); ++g) {
        if (g > 0) {
            pools_[g].clear();
            std::size_t pick = 0;
            const auto& prev_pool = pools_[g - 1];
            const auto& prev_comb = combs_[g - 1];
            for (int idx = 0; idx < static_cast<int>(prev_pool.size()); ++idx) {
                if (pick < prev_comb.size() && prev_comb[pick] == idx)
                    ++pick;
                else
                    pools_[g].push_back(prev_pool[idx]);
            }
        }
        combs_[g].resize(groups_[g].count);
        for (int k = 0; k < groups_[g].count; ++k) combs_[g][k] = k;
        write_group(g);
    }
}

bool LabelingOdometer::advance() {
    for (int g = static_cast<int>(groups_.size()) - 1; g >= 0; --g) {
        if (next_combination(combs_[g], static_cast<int>(pools_[g].size()))) {
            write_group(g);
            refill_from(g + 1);
            return true;
        }
    }
    return false;
}

ParkingFunctionStream::ParkingFunctionStream(int n)
    : ParkingFunctionStream(n, 0, SIZE_MAX) {}

ParkingFunctionStream::ParkingFunctionStream(int n, std::size_t path_begin,
                                             std::size_t path_end) {
    if (n < 1 || n > kMaxParkingOrder)
        throw std::invalid_argument("parking function enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxParkingOrder));
    paths_ = enumerate_dyck_paths(n);
    if (path_end == SIZE_MAX) path_end = paths_.size();
    if (path_begin > path_end || path_end > paths_.size())
        throw std::invalid_argument("invalid path index range");
    path_index_ = path_begin;
    path_end_ = path_end;
}

std::optional<ParkingFunction> ParkingFunctionStream::next() {
    while (true) {
        if (!odometer_) {
            if (path_index_ >= path_end_) return std::nullopt;
            odometer_.emplace(paths_[path_index_]);
            return ParkingFunction(paths_[path_index_], odometer_->cars());
        }
        if (odometer_->advance())
            return ParkingFunction(paths_[path_index_], odometer_->cars());
        odometer_.reset();
        ++path_index_;
    }
}

std::vector<ParkingFunction> enumerate_parking_functions(int n) {
    ParkingFunctionStream stream(n);
    std::vector<ParkingFunction> out;
    while (auto pf = stream.next()) out.push_back(std::move(*pf));
    return out;
}

std::int64_t parking_function_count(int n) {
    if (n < 1) throw std::invalid_argument("parking_function_count needs n >= 1");
    return checked_pow(n + 1, n - 1);
}

}  // namespace shuffle
