#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kdyck/path.hpp"

namespace kdyck {

// Which filling algorithm a tableau claims to come from. Min places each W
// label below the smallest active entry, Max below the largest. Tableaux of
// different variants never compare equal, even with identical columns.
enum class FillVariant { Min, Max };

// Columnar label tableau: column i holds k_i + 1 labels strictly increasing
// top to bottom, the first row strictly increases left to right, and the
// labels partition {1, ..., size(k)+length(k)}. The constructor enforces
// exactly this shape; membership in the Min/Max image is checked separately
// by validate().
class FillingTableau {
public:
    FillingTableau(KVector kvec, std::vector<std::vector<int>> columns,
                   FillVariant variant);

    const KVector& kvec() const { return kvec_; }
    const std::vector<std::vector<int>>& columns() const { return columns_; }
    FillVariant variant() const { return variant_; }
    int letters() const { return kvec_.letters(); }

    std::vector<int> first_row() const;

    // (column, row) of a label, both 1-based.
    std::pair<int, int> position_of(int label) const;

    // One line per row, columns aligned, '-' for absent cells.
    std::string to_string() const;

    bool operator==(const FillingTableau&) const = default;

private:
    KVector kvec_;
    std::vector<std::vector<int>> columns_;
    FillVariant variant_;
    std::vector<std::pair<int, int>> position_;  // label -> (col, row)
};

// Ranks assigned by the ranking algorithm, same shape as the source
// filling tableau.
struct RankingTableau {
    std::vector<std::vector<int>> columns;

    std::vector<int> first_row() const;
    std::string to_string() const;
};

struct ValidationResult {
    bool ok = true;
    std::string message;  // empty when ok
    // The witnessing vertically adjacent pair (a, d) when the membership
    // condition fails.
    std::optional<std::pair<int, int>> witness;
};

// A statistic given as a per-column sequence together with its sum.
struct StatSequence {
    std::vector<int> sequence;
    int total = 0;
};

FillingTableau fill_min(const DyckPath& path);
FillingTableau fill_max(const DyckPath& path);

// Ranking algorithm: column 1 gets 0..k_1 top to bottom; column i starts at
// the rank of the label preceding its top entry.
RankingTableau rank_tableau(const FillingTableau& tableau);

// Membership test for the image of the tableau's filling algorithm.
// Min: every row increases left to right, and for a < b < c < d with d
// immediately below a, the labels b and c are not in one column.
// Max: for every d immediately below a with d > a+1, the labels
// a+1, ..., d-1 fill entire columns.
ValidationResult validate(const FillingTableau& tableau);

// Inverse of both filling algorithms: the j-th S letter goes to word
// position first_row()[j]. Throws if validate() fails.
DyckPath unfill(const FillingTableau& tableau);

// bounce: first row of rank_tableau(fill_min(path)) and its sum.
StatSequence bounce(const DyckPath& path);

// depth labeling sequence: first row of rank_tableau(fill_max(path)) and
// its sum.
StatSequence depth(const DyckPath& path);

}  // namespace kdyck
