#pragma once

#include <string>
#include <vector>

namespace kdyck::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // failure reason, or the observation text
};

using Report = std::vector<Check>;

bool all_pass(const Report& report);

// The (4,2,3,1) path alone: rank sequences, area/dinv/bounce/depth with
// their sequences, both filling tableaux and both rankings cell for cell,
// and the sweep image.
Report golden_path_checks();

// Reproduces every worked example: golden_path_checks plus the 16-letter
// classical path, the branch-tree example with its dual, the three-run
// involution sample, and the known asymmetric differences and symmetric
// sums.
Report figures();

// The classical column labeling agrees with the tableau depth labeling on
// every all-ones path of length n <= max_n.
Report classical_cross_oracle(int max_n);

// (area, depth) class polynomials are q,t-symmetric for every partition of
// m <= max_size.
Report symmetry_class(int max_size);

// Same with a fixed first part a = 1..max_a prepended to every
// rearrangement, partitions of m <= max_size.
Report symmetry_prefixed(int max_a, int max_size);

// omega^2 = id with the area/depth swap and first-part preservation on
// every class with size+length <= max_letters; dual^2 = id on the induced
// trees; theta^2 = id with the swap on D_(a,b,c) for a,b,c <= theta_max.
Report involutions(int max_letters, int theta_max);

// dinv = area after sweep, area = bounce after sweep, sweep bijective per
// class, and the (dinv,area) and (area,bounce) class polynomials coincide,
// for every class with size+length <= max_letters.
Report sweep(int max_letters);

// Enumerated class sizes match the closed-form counts for partitions of
// m <= max_size; Catalan and Fuss-Catalan specializations up to 16 letters.
Report counting(int max_size);

// The frozen asymmetric differences for (1,1,2,1) and (1,2,1,1) and the
// symmetric sums (1,1,3,1)+(1,3,1,1) (+(1,1,1,3)).
Report asymmetry_goldens();

// Series coefficients of the closed-form rational function equal the
// enumerated (area, depth) polynomials for 1 <= a,b,c <= max_abc, and are
// independent of c.
Report closed_form(int max_abc);

// depth == bounce on every path with length(k) <= 2 (parts <= max_part)
// and with k = (a,1,c) (a,c <= a1c_max); last-part invariance of the
// (area, depth) polynomial over 20 fixed prefixes with last parts 1..5.
Report depth_bounce(int max_part, int a1c_max);

// Observational suite: (bounce, depth) symmetry for the shapes (a,2,c),
// (a,1,1,d), (a,2,1,d), (a,1,1,1,e), a long-vector counterexample probe,
// and appended-part symmetry samples. Every check passes by construction;
// the observation lives in the detail string.
Report conjectures();

}  // namespace kdyck::verify
