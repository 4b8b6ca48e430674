#include "kdyck/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace kdyck {

std::vector<DyckPath> enumerate_paths(const KVector& kvec, const EnumerationOptions& opts) {
    if (kvec.letters() > opts.max_letters)
        throw std::invalid_argument("enumeration cap exceeded: " + std::to_string(kvec.letters()) +
                                    " letters > " + std::to_string(opts.max_letters));
    std::vector<DyckPath> paths;
    std::vector<int> positions;
    positions.reserve(static_cast<size_t>(kvec.length()));
    int n = kvec.letters();

    // Depth-first placement, S before W at each position, so the output is
    // lexicographic by S-position vectors.
    std::function<void(int, int, int)> place = [&](int pos, int placed_s, int height) {
        if (pos > n) {
            paths.emplace_back(kvec, positions);
            return;
        }
        if (placed_s < kvec.length()) {
            positions.push_back(pos);
            place(pos + 1, placed_s + 1, height + kvec.part(placed_s + 1));
            positions.pop_back();
        }
        if (height > 0) place(pos + 1, placed_s, height - 1);
    };
    place(1, 0, 0);
    return paths;
}

std::vector<KVector> rearrangements(const KVector& kvec) {
    std::vector<int> parts = kvec.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<KVector> out;
    // next_permutation on the sorted run yields each distinct rearrangement
    // exactly once, in lexicographic order.
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

std::vector<std::pair<KVector, std::vector<DyckPath>>> enumerate_class(
    const KVector& kvec, const EnumerationOptions& opts) {
    std::vector<std::pair<KVector, std::vector<DyckPath>>> out;
    for (const KVector& rearranged : rearrangements(kvec))
        out.emplace_back(rearranged, enumerate_paths(rearranged, opts));
    return out;
}

mpz_class count_paths(const KVector& kvec, bool class_mode) {
    if (class_mode) {
        // multinomial(size + l; size, m_1, ..., m_size) / (size + 1) where
        // m_i is the multiplicity of part i and the m_i sum to l.
        std::map<int, unsigned long> multiplicity;
        for (int p : kvec.parts()) ++multiplicity[p];
        unsigned long total = static_cast<unsigned long>(kvec.letters());
        mpz_class numerator;
        mpz_fac_ui(numerator.get_mpz_t(), total);
        mpz_class divisor;
        mpz_fac_ui(divisor.get_mpz_t(), static_cast<unsigned long>(kvec.size()));
        for (const auto& [part, count] : multiplicity) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), count);
            divisor *= f;
        }
        divisor *= kvec.size() + 1;
        if (!mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t()))
            throw std::logic_error("class count is not an integer");
        mpz_class result;
        mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
        return result;
    }

    int k = kvec.part(1);
    for (int p : kvec.parts())
        if (p != k)
            throw std::invalid_argument(
                "no closed-form count for a single non-constant k vector; enumerate instead");
    // Fuss-Catalan: binom((k+1)n, n) / (kn + 1).
    unsigned long n = static_cast<unsigned long>(kvec.length());
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), (static_cast<unsigned long>(k) + 1) * n, n);
    mpz_class divisor = mpz_class(k) * static_cast<long>(n) + 1;
    if (!mpz_divisible_p(binom.get_mpz_t(), divisor.get_mpz_t()))
        throw std::logic_error("Fuss-Catalan count is not an integer");
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), binom.get_mpz_t(), divisor.get_mpz_t());
    return result;
}

std::vector<KVector> partitions_of(int m) {
    if (m < 1) throw std::invalid_argument("partitions_of expects a positive integer");
    std::vector<KVector> out;
    std::vector<int> current;
    std::function<void(int, int)> descend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            descend(remaining - part, part);
            current.pop_back();
        }
    };
    descend(m, m);
    return out;
}

}  // namespace kdyck
