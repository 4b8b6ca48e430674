#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "kdyck/kvector.hpp"

namespace kdyck {

// A k-Dyck path in SW-word form: a word of size(k)+length(k) letters where
// the j-th S letter carries height gain k_j and every W is a unit
// down-step. The running height stays nonnegative and ends at zero.
//
// Since the S letters occur in index order, a path is stored as its k
// vector plus the 1-based word positions of the S letters.
class DyckPath {
public:
    DyckPath(KVector kvec, std::vector<int> south_positions);

    // Parses whitespace-separated tokens `S<int>` / `W`,
    // e.g. "S4 W S2 W W W W S3 W W S1 W W W".
    static DyckPath parse(std::string_view text);

    const KVector& kvec() const { return kvec_; }
    int letters() const { return kvec_.letters(); }
    const std::vector<int>& south_positions() const { return south_; }

    // word[i] = 0 if letter i is W, j >= 1 if it is the j-th S letter.
    // 1-based; word[0] is unused.
    std::vector<int> letter_word() const;

    std::string to_string() const;

    auto operator<=>(const DyckPath&) const = default;

private:
    KVector kvec_;
    std::vector<int> south_;
};

// Starting and ending rank sequences: start[i] is the height before
// letter i, end[i] the height after it; end is start shifted left with a
// trailing 0. Both are 0-based vectors of length letters().
struct RankSequences {
    std::vector<int> start;
    std::vector<int> end;
};

RankSequences rank_sequences(const DyckPath& path);

}  // namespace kdyck
