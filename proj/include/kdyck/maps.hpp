#pragma once

#include "kdyck/tableau.hpp"

namespace kdyck {

// Area sequence: the starting rank of each S letter, in order; area is the
// sum (the number of complete squares under the up-arrows).
StatSequence area(const DyckPath& path);

// dinv = sweep pairs + red pairs. A pair (W, S) with W left of S counts 1
// when 0 <= rank(W) - rank(S) <= k(S). A pair (S_i, S_j) with i < j
// contributes |end(S_i) - end(S_j)| when one arrow nests inside the other:
// either start(S_i) >= start(S_j) and end(S_j) > end(S_i), or
// start(S_i) < start(S_j) and end(S_j) < end(S_i).
int dinv(const DyckPath& path);

// Sweep map: stable sort of the letters by starting rank, equal ranks taken
// right to left. A bijection on the rearrangement class taking dinv to area
// and area to bounce.
DyckPath sweep_map(const DyckPath& path);

// The composite involution unfill . tableau_from_tree . dual .
// tree_from_tableau . fill_max. Swaps area and depth and keeps the first
// part of k.
DyckPath omega(const DyckPath& path);

// Explicit involution on D_(a,b,c). With the path written as
// S^a W^l1 S^b W^l2 S^c W^rest:
//   l2 <= b: image has gaps (a-l1, b-l2); otherwise (a+b-l1-l2, l2).
// Swaps area and depth and stays inside D_(a,b,c). Throws unless
// length(k) == 3.
DyckPath theta(const DyckPath& path);

// run: total height gain of the S letters occurring before the first
// adjacent WW; when no WW exists this is size(k) (interpretation: every S
// segment precedes the missing WW).
int run(const DyckPath& path);

// ret: number of returns to the axis, i.e. letters with ending rank 0
// (the terminal touch counts, the origin does not).
int ret(const DyckPath& path);

// The column-by-column grid labeling of classical Dyck paths, read bottom
// to top; an independent oracle for the depth labeling sequence. Requires
// every part of k to equal 1.
std::vector<int> classical_depth_labeling(const DyckPath& path);

}  // namespace kdyck
