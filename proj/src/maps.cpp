#include "kdyck/maps.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "kdyck/branch_tree.hpp"

namespace kdyck {

StatSequence area(const DyckPath& path) {
    RankSequences ranks = rank_sequences(path);
    StatSequence result;
    result.sequence.reserve(path.south_positions().size());
    for (int pos : path.south_positions()) {
        int r = ranks.start[static_cast<size_t>(pos - 1)];
        result.sequence.push_back(r);
        result.total += r;
    }
    return result;
}

int dinv(const DyckPath& path) {
    auto word = path.letter_word();
    RankSequences ranks = rank_sequences(path);
    int n = path.letters();
    int total = 0;

    // Sweep pairs: W left of S with rank gap inside [0, k_j].
    for (int i = 1; i <= n; ++i) {
        if (word[static_cast<size_t>(i)] != 0) continue;
        int rw = ranks.start[static_cast<size_t>(i - 1)];
        for (int j = i + 1; j <= n; ++j) {
            int s_index = word[static_cast<size_t>(j)];
            if (s_index == 0) continue;
            int gap = rw - ranks.start[static_cast<size_t>(j - 1)];
            if (gap >= 0 && gap <= path.kvec().part(s_index)) ++total;
        }
    }

    // Red pairs, weighted by the ending-rank gap.
    const auto& souths = path.south_positions();
    for (size_t i = 0; i < souths.size(); ++i) {
        int ri = ranks.start[static_cast<size_t>(souths[i] - 1)];
        int ei = ranks.end[static_cast<size_t>(souths[i] - 1)];
        for (size_t j = i + 1; j < souths.size(); ++j) {
            int rj = ranks.start[static_cast<size_t>(souths[j] - 1)];
            int ej = ranks.end[static_cast<size_t>(souths[j] - 1)];
            if (ri >= rj && ej > ei) total += ej - ei;
            if (ri < rj && ej < ei) total += ei - ej;
        }
    }
    return total;
}

DyckPath sweep_map(const DyckPath& path) {
    auto word = path.letter_word();
    RankSequences ranks = rank_sequences(path);
    int n = path.letters();
    std::vector<std::pair<int, int>> order;  // (rank, position)
    order.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) order.emplace_back(ranks.start[static_cast<size_t>(i - 1)], i);
    // Ranks ascending, equal ranks right to left.
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    });

    std::vector<int> parts;
    std::vector<int> positions;
    for (int i = 1; i <= n; ++i) {
        int s_index = word[static_cast<size_t>(order[static_cast<size_t>(i - 1)].second)];
        if (s_index > 0) {
            parts.push_back(path.kvec().part(s_index));
            positions.push_back(i);
        }
    }
    return DyckPath(KVector(std::move(parts)), std::move(positions));
}

DyckPath omega(const DyckPath& path) {
    return unfill(tableau_from_tree(dual(tree_from_tableau(fill_max(path)))));
}

DyckPath theta(const DyckPath& path) {
    if (path.kvec().length() != 3)
        throw std::invalid_argument("theta is defined on paths with exactly three parts");
    int a = path.kvec().part(1);
    int b = path.kvec().part(2);
    int c = path.kvec().part(3);
    int gap1 = path.south_positions()[1] - 2;                            // l1
    int gap2 = path.south_positions()[2] - path.south_positions()[1] - 1;  // l2

    int new_gap1, new_gap2;
    if (gap2 <= b) {
        new_gap1 = a - gap1;
        new_gap2 = b - gap2;
    } else {
        new_gap1 = a + b - gap1 - gap2;
        new_gap2 = gap2;
    }
    return DyckPath(KVector({a, b, c}), {1, 2 + new_gap1, 3 + new_gap1 + new_gap2});
}

int run(const DyckPath& path) {
    auto word = path.letter_word();
    int n = path.letters();
    int first_ww = 0;
    for (int i = 1; i < n; ++i) {
        if (word[static_cast<size_t>(i)] == 0 && word[static_cast<size_t>(i + 1)] == 0) {
            first_ww = i;
            break;
        }
    }
    if (first_ww == 0) return path.kvec().size();
    int total = 0;
    for (int pos : path.south_positions())
        if (pos < first_ww) total += path.kvec().part(word[static_cast<size_t>(pos)]);
    return total;
}

int ret(const DyckPath& path) {
    RankSequences ranks = rank_sequences(path);
    int touches = 0;
    for (int r : ranks.end)
        if (r == 0) ++touches;
    return touches;
}

std::vector<int> classical_depth_labeling(const DyckPath& path) {
    for (int p : path.kvec().parts())
        if (p != 1)
            throw std::invalid_argument("classical depth labeling requires all parts equal to 1");
    int n = path.kvec().length();
    // The i-th north step sits in grid column (east steps before it) + 1,
    // row i.
    std::vector<int> column_of_row(static_cast<size_t>(n) + 1, 0);
    std::vector<std::vector<int>> rows_in_column(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        int col = path.south_positions()[static_cast<size_t>(i - 1)] - i + 1;
        column_of_row[static_cast<size_t>(i)] = col;
        rows_in_column[static_cast<size_t>(col)].push_back(i);
    }

    std::vector<int> label(static_cast<size_t>(n) + 1, -1);
    for (int col = 1; col <= n; ++col) {
        const auto& rows = rows_in_column[static_cast<size_t>(col)];
        if (rows.empty()) continue;
        int value = 0;
        if (col > 1) {
            // From the bottommost labeled cell of this column, walk
            // southwest until hitting a labeled cell.
            int row = rows.front();
            int step = 1;
            while (true) {
                int r = row - step, c = col - step;
                if (r < 1 || c < 1)
                    throw std::logic_error("depth labeling walked off the grid");
                if (column_of_row[static_cast<size_t>(r)] == c) {
                    value = label[static_cast<size_t>(r)] + 1;
                    break;
                }
                ++step;
            }
        }
        for (int row : rows) label[static_cast<size_t>(row)] = value;
    }
    return std::vector<int>(label.begin() + 1, label.end());
}

}  // namespace kdyck
