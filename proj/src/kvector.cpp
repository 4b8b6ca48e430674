#include "kdyck/kvector.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace kdyck {

namespace {
constexpr int kMaxPart = 1000000;
}

KVector::KVector(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("k vector must have at least one part");
    long long total = 0;
    for (int p : parts_) {
        if (p < 1)
            throw std::invalid_argument("k vector parts must be positive");
        if (p > kMaxPart)
            throw std::invalid_argument("k vector part too large");
        total += p;
    }
    if (total + static_cast<long long>(parts_.size()) > kMaxPart)
        throw std::invalid_argument("k vector too large");
    size_ = static_cast<int>(total);
}

KVector KVector::parse(std::string_view text) {
    std::vector<int> parts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string_view token = text.substr(
            start, comma == std::string_view::npos ? text.size() - start : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed k vector part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return KVector(std::move(parts));
}

std::vector<int> KVector::sorted_decreasing() const {
    std::vector<int> sorted = parts_;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

std::string KVector::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

}  // namespace kdyck
