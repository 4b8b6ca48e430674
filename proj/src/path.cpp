#include "kdyck/path.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace kdyck {

DyckPath::DyckPath(KVector kvec, std::vector<int> south_positions)
    : kvec_(std::move(kvec)), south_(std::move(south_positions)) {
    int n = kvec_.letters();
    if (static_cast<int>(south_.size()) != kvec_.length())
        throw std::invalid_argument("expected one S position per part of k");
    int prev = 0;
    for (int pos : south_) {
        if (pos <= prev || pos > n)
            throw std::invalid_argument("S positions must be strictly increasing within the word");
        prev = pos;
    }
    // Running height must stay nonnegative; it ends at 0 automatically
    // because the S gains sum to the W count.
    int height = 0;
    int next_s = 0;
    for (int i = 1; i <= n; ++i) {
        if (next_s < kvec_.length() && south_[static_cast<size_t>(next_s)] == i) {
            height += kvec_.part(next_s + 1);
            ++next_s;
        } else {
            --height;
        }
        if (height < 0)
            throw std::invalid_argument("path goes below the axis after letter " +
                                        std::to_string(i));
    }
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<int> parts;
    std::vector<int> positions;
    int letter = 0;
    int height = 0;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        ++letter;
        if (token == "W") {
            --height;
        } else if (token.size() >= 2 && token[0] == 'S') {
            int value = 0;
            const char* begin = token.data() + 1;
            const char* end = token.data() + token.size();
            auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{} || ptr != end) {
                // Distinguish an explicit negative exponent from garbage.
                if (token[1] == '-')
                    throw std::invalid_argument("S exponent must be positive in token '" +
                                                token + "'");
                throw std::invalid_argument("malformed token '" + token + "'");
            }
            if (value < 1)
                throw std::invalid_argument("S exponent must be positive in token '" + token +
                                            "'");
            parts.push_back(value);
            positions.push_back(letter);
            height += value;
        } else {
            throw std::invalid_argument("malformed token '" + token + "'");
        }
        if (height < 0)
            throw std::invalid_argument("path goes below the axis after letter " +
                                        std::to_string(letter));
    }
    if (letter == 0) throw std::invalid_argument("empty word");
    if (height != 0) throw std::invalid_argument("path does not end at height 0");
    return DyckPath(KVector(std::move(parts)), std::move(positions));
}

std::vector<int> DyckPath::letter_word() const {
    std::vector<int> word(static_cast<size_t>(letters()) + 1, 0);
    for (size_t j = 0; j < south_.size(); ++j)
        word[static_cast<size_t>(south_[j])] = static_cast<int>(j) + 1;
    return word;
}

std::string DyckPath::to_string() const {
    std::string out;
    int next_s = 0;
    for (int i = 1; i <= letters(); ++i) {
        if (i > 1) out += ' ';
        if (next_s < kvec_.length() && south_[static_cast<size_t>(next_s)] == i) {
            out += 'S';
            out += std::to_string(kvec_.part(next_s + 1));
            ++next_s;
        } else {
            out += 'W';
        }
    }
    return out;
}

RankSequences rank_sequences(const DyckPath& path) {
    int n = path.letters();
    auto word = path.letter_word();
    RankSequences ranks;
    ranks.start.resize(static_cast<size_t>(n));
    ranks.end.resize(static_cast<size_t>(n));
    int height = 0;
    for (int i = 1; i <= n; ++i) {
        ranks.start[static_cast<size_t>(i - 1)] = height;
        height += word[static_cast<size_t>(i)] > 0
                      ? path.kvec().part(word[static_cast<size_t>(i)])
                      : -1;
        ranks.end[static_cast<size_t>(i - 1)] = height;
    }
    return ranks;
}

}  // namespace kdyck
