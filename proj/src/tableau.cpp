#include "kdyck/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kdyck {

FillingTableau::FillingTableau(KVector kvec, std::vector<std::vector<int>> columns,
                               FillVariant variant)
    : kvec_(std::move(kvec)), columns_(std::move(columns)), variant_(variant) {
    int n = kvec_.letters();
    if (static_cast<int>(columns_.size()) != kvec_.length())
        throw std::invalid_argument("expected one column per part of k");
    position_.assign(static_cast<size_t>(n) + 1, {0, 0});
    int prev_top = 0;
    for (int c = 1; c <= kvec_.length(); ++c) {
        const auto& column = columns_[static_cast<size_t>(c - 1)];
        if (static_cast<int>(column.size()) != kvec_.part(c) + 1)
            throw std::invalid_argument("column " + std::to_string(c) + " must hold " +
                                        std::to_string(kvec_.part(c) + 1) + " labels");
        if (column.front() <= prev_top)
            throw std::invalid_argument("first-row entries must increase left to right");
        prev_top = column.front();
        int prev = 0;
        for (int r = 1; r <= static_cast<int>(column.size()); ++r) {
            int label = column[static_cast<size_t>(r - 1)];
            if (label < 1 || label > n)
                throw std::invalid_argument("label " + std::to_string(label) + " out of range");
            if (r > 1 && label <= prev)
                throw std::invalid_argument("column " + std::to_string(c) +
                                            " must increase top to bottom");
            if (position_[static_cast<size_t>(label)].first != 0)
                throw std::invalid_argument("label " + std::to_string(label) + " repeated");
            position_[static_cast<size_t>(label)] = {c, r};
            prev = label;
        }
    }
    // Sizes sum to n and labels are distinct in 1..n, so they partition it.
}

std::vector<int> FillingTableau::first_row() const {
    std::vector<int> row;
    row.reserve(columns_.size());
    for (const auto& column : columns_) row.push_back(column.front());
    return row;
}

std::pair<int, int> FillingTableau::position_of(int label) const {
    if (label < 1 || label > letters())
        throw std::invalid_argument("label out of range");
    return position_[static_cast<size_t>(label)];
}

namespace {

std::string grid_to_string(const std::vector<std::vector<int>>& columns) {
    size_t rows = 0;
    int widest = 1;
    for (const auto& column : columns) {
        rows = std::max(rows, column.size());
        for (int v : column) widest = std::max(widest, static_cast<int>(std::to_string(v).size()));
    }
    std::ostringstream out;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < columns.size(); ++c) {
            std::string cell = r < columns[c].size() ? std::to_string(columns[c][r]) : "-";
            if (c > 0) out << ' ';
            out << std::string(static_cast<size_t>(widest) - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

FillingTableau fill(const DyckPath& path, FillVariant variant) {
    const KVector& kvec = path.kvec();
    auto word = path.letter_word();
    std::vector<std::vector<int>> columns(static_cast<size_t>(kvec.length()));
    for (int c = 1; c <= kvec.length(); ++c)
        columns[static_cast<size_t>(c - 1)].reserve(static_cast<size_t>(kvec.part(c)) + 1);

    for (int i = 1; i <= path.letters(); ++i) {
        int s_index = word[static_cast<size_t>(i)];
        if (s_index > 0) {
            // The first empty column is exactly the s_index-th one, since S
            // letters arrive in index order.
            columns[static_cast<size_t>(s_index - 1)].push_back(i);
            continue;
        }
        // Active entries: bottom of every started, not-yet-full column.
        int chosen = -1;
        int chosen_label = 0;
        for (int c = 1; c <= kvec.length(); ++c) {
            const auto& column = columns[static_cast<size_t>(c - 1)];
            if (column.empty() || static_cast<int>(column.size()) == kvec.part(c) + 1) continue;
            int label = column.back();
            bool better = chosen < 0 || (variant == FillVariant::Min ? label < chosen_label
                                                                     : label > chosen_label);
            if (better) {
                chosen = c;
                chosen_label = label;
            }
        }
        if (chosen < 0) throw std::logic_error("no active entry for a W letter");
        columns[static_cast<size_t>(chosen - 1)].push_back(i);
    }
    return FillingTableau(kvec, std::move(columns), variant);
}

}  // namespace

std::string FillingTableau::to_string() const { return grid_to_string(columns_); }

std::vector<int> RankingTableau::first_row() const {
    std::vector<int> row;
    row.reserve(columns.size());
    for (const auto& column : columns) row.push_back(column.front());
    return row;
}

std::string RankingTableau::to_string() const { return grid_to_string(columns); }

FillingTableau fill_min(const DyckPath& path) { return fill(path, FillVariant::Min); }

FillingTableau fill_max(const DyckPath& path) { return fill(path, FillVariant::Max); }

RankingTableau rank_tableau(const FillingTableau& tableau) {
    const KVector& kvec = tableau.kvec();
    RankingTableau ranking;
    ranking.columns.resize(static_cast<size_t>(kvec.length()));
    for (int c = 1; c <= kvec.length(); ++c) {
        int start = 0;
        if (c > 1) {
            // The top entry of column c follows some label directly; the
            // column starts at that label's rank.
            int top = tableau.columns()[static_cast<size_t>(c - 1)].front();
            auto [host_col, host_row] = tableau.position_of(top - 1);
            start = ranking.columns[static_cast<size_t>(host_col - 1)]
                                   [static_cast<size_t>(host_row - 1)];
        }
        auto& column = ranking.columns[static_cast<size_t>(c - 1)];
        column.resize(static_cast<size_t>(kvec.part(c)) + 1);
        for (int r = 0; r <= kvec.part(c); ++r) column[static_cast<size_t>(r)] = start + r;
    }
    return ranking;
}

ValidationResult validate(const FillingTableau& tableau) {
    const auto& columns = tableau.columns();
    int n = tableau.letters();

    if (tableau.variant() == FillVariant::Min) {
        // Every row must increase left to right (over the cells present).
        size_t rows = 0;
        for (const auto& column : columns) rows = std::max(rows, column.size());
        for (size_t r = 0; r < rows; ++r) {
            int prev = 0;
            for (const auto& column : columns) {
                if (r >= column.size()) continue;
                if (column[r] <= prev)
                    return {false,
                            "row " + std::to_string(r + 1) + " is not increasing at label " +
                                std::to_string(column[r]),
                            std::nullopt};
                prev = column[r];
            }
        }
        // For d immediately below a, no column may hold two labels strictly
        // between a and d.
        for (const auto& column : columns) {
            for (size_t r = 0; r + 1 < column.size(); ++r) {
                int a = column[r], d = column[r + 1];
                for (size_t c2 = 0; c2 < columns.size(); ++c2) {
                    int inside = 0;
                    int first_inside = 0;
                    for (int label : columns[c2]) {
                        if (label > a && label < d) {
                            if (inside == 1)
                                return {false,
                                        "labels " + std::to_string(first_inside) + " and " +
                                            std::to_string(label) + " between " +
                                            std::to_string(a) + " and " + std::to_string(d) +
                                            " share column " + std::to_string(c2 + 1),
                                        std::make_pair(a, d)};
                            first_inside = label;
                            ++inside;
                        }
                    }
                }
            }
        }
        return {};
    }

    // Max: for d immediately below a with d > a+1, the labels a+1..d-1 must
    // cover entire columns.
    std::vector<int> column_of(static_cast<size_t>(n) + 1, 0);
    for (size_t c = 0; c < columns.size(); ++c)
        for (int label : columns[c]) column_of[static_cast<size_t>(label)] = static_cast<int>(c);
    for (const auto& column : columns) {
        for (size_t r = 0; r + 1 < column.size(); ++r) {
            int a = column[r], d = column[r + 1];
            std::vector<bool> checked(columns.size(), false);
            for (int x = a + 1; x < d; ++x) {
                int c2 = column_of[static_cast<size_t>(x)];
                if (checked[static_cast<size_t>(c2)]) continue;
                checked[static_cast<size_t>(c2)] = true;
                for (int label : columns[static_cast<size_t>(c2)]) {
                    if (label <= a || label >= d)
                        return {false,
                                "label " + std::to_string(x) + " between " + std::to_string(a) +
                                    " and " + std::to_string(d) +
                                    " does not fill an entire column",
                                std::make_pair(a, d)};
                }
            }
        }
    }
    return {};
}

DyckPath unfill(const FillingTableau& tableau) {
    ValidationResult check = validate(tableau);
    if (!check.ok) throw std::invalid_argument("invalid filling tableau: " + check.message);
    return DyckPath(tableau.kvec(), tableau.first_row());
}

StatSequence bounce(const DyckPath& path) {
    StatSequence result;
    result.sequence = rank_tableau(fill_min(path)).first_row();
    for (int v : result.sequence) result.total += v;
    return result;
}

StatSequence depth(const DyckPath& path) {
    StatSequence result;
    result.sequence = rank_tableau(fill_max(path)).first_row();
    for (int v : result.sequence) result.total += v;
    return result;
}

}  // namespace kdyck
