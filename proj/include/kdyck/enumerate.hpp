#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "kdyck/path.hpp"

namespace kdyck {

struct EnumerationOptions {
    // Upper bound on size(k)+length(k); path counts grow super-exponentially.
    int max_letters = 40;
};

// All k-Dyck paths for exactly this k vector, in lexicographic order of
// their S-letter position vectors. Throws when the letter cap is exceeded.
std::vector<DyckPath> enumerate_paths(const KVector& kvec,
                                      const EnumerationOptions& opts = {});

// The distinct rearrangements of k (multiset permutations, no duplicates)
// in lexicographic order.
std::vector<KVector> rearrangements(const KVector& kvec);

// One entry per distinct rearrangement of k, each with its full path list.
std::vector<std::pair<KVector, std::vector<DyckPath>>> enumerate_class(
    const KVector& kvec, const EnumerationOptions& opts = {});

// Closed-form counting. With class_mode the rearrangement-class count
//   |D_K| = multinomial(size+m_1+...+m_size; size, m_1, ..., m_size) / (size+1)
// where m_i is the multiplicity of part i. Without class_mode only the
// constant vector (k,...,k) has a closed form, the Fuss-Catalan number
// binom((k+1)n, n) / (kn+1); any other single vector throws.
mpz_class count_paths(const KVector& kvec, bool class_mode);

// All partitions of m as decreasing KVectors, in reverse lexicographic
// order starting from (m). Helper for the exhaustive suites.
std::vector<KVector> partitions_of(int m);

}  // namespace kdyck
