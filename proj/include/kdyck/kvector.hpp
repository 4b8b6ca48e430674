#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kdyck {

// Composition k = (k_1,...,k_l) of positive integers; the shape parameter
// for every path family in the library.
class KVector {
public:
    explicit KVector(std::vector<int> parts);

    // Parses the comma-separated form, e.g. "4,2,3,1".
    static KVector parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }  // 1-based
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }          // k_1 + ... + k_l
    int letters() const { return size_ + length(); }

    // Parts sorted decreasingly: the partition shape shared by a whole
    // rearrangement class.
    std::vector<int> sorted_decreasing() const;

    std::string to_string() const;

    auto operator<=>(const KVector&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

}  // namespace kdyck
