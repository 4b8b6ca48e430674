#pragma once

#include <string>
#include <vector>

#include "kdyck/tableau.hpp"

namespace kdyck {

// One branch of a branch-decomposed plane tree. Branches are kept in
// red-label order; parent is a 0-based index into the same list (-1 for the
// initial branch) and offset is the edge distance from this branch's top
// vertex down to its attachment vertex on the parent, so
// 0 <= offset <= length(parent). Offset 0 means the two branches share
// their top vertex (the chaining case); offset == length(parent) attaches
// at the parent's leaf.
struct Branch {
    int length = 0;
    int parent = -1;
    int offset = 0;

    bool operator==(const Branch&) const = default;
};

class BranchTreeStructure {
public:
    explicit BranchTreeStructure(std::vector<Branch> branches);

    const std::vector<Branch>& branches() const { return branches_; }
    const Branch& branch(int i) const { return branches_[static_cast<size_t>(i)]; }
    int branch_count() const { return static_cast<int>(branches_.size()); }
    std::vector<int> type() const;  // branch lengths in order

    bool operator==(const BranchTreeStructure&) const = default;

private:
    std::vector<Branch> branches_;
};

// A branch tree carrying the labels of the traversal algorithm: one red
// label per branch, one blue label per edge (top-down). Instances are
// always canonical -- branches sorted by red label, labels derived from the
// structure -- because the only constructors are relabel() and
// tree_from_tableau().
class LabeledBranchTree {
public:
    const BranchTreeStructure& structure() const { return structure_; }
    const std::vector<int>& red_labels() const { return red_; }
    const std::vector<std::vector<int>>& blue_labels() const { return blue_; }
    std::vector<int> type() const { return structure_.type(); }
    int branch_count() const { return structure_.branch_count(); }

    // One branch per line:
    // #<idx> len=<k> parent=<p> offset=<m> red=<r> blues=<list>
    std::string to_string() const;

    bool operator==(const LabeledBranchTree&) const = default;

private:
    friend LabeledBranchTree relabel(const BranchTreeStructure&);

    LabeledBranchTree(BranchTreeStructure structure, std::vector<int> red,
                      std::vector<std::vector<int>> blue);

    BranchTreeStructure structure_;
    std::vector<int> red_;
    std::vector<std::vector<int>> blue_;
};

// Runs the labeling traversal: entering a branch assigns its red label,
// an offset-0 child is entered before any edge of the host is marked, each
// edge is marked top-down and the child hanging at its end vertex is
// entered immediately after. The result is canonicalized to red-label
// order.
LabeledBranchTree relabel(const BranchTreeStructure& structure);

// Column i of a Max filling tableau becomes the labeled path graph with
// red = first entry and blues = the rest top-down; parent and offset of
// branch j are recovered from the cell holding first_row()[j] - 1. Throws
// if the tableau is not Max-variant or fails validation.
LabeledBranchTree tree_from_tableau(const FillingTableau& tableau);

// Inverse of tree_from_tableau.
FillingTableau tableau_from_tree(const LabeledBranchTree& tree);

// Reattaches every non-initial branch at offset length(parent) - offset and
// relabels. An involution; swaps the tree's area and depth.
LabeledBranchTree dual(const LabeledBranchTree& tree);

// Tree-level statistics: a_1 = d_1 = 0, and for branch j with parent i,
// a_j = a_i + (length(i) - offset(j)) and d_j = d_i + offset(j). These are
// exactly the area sequence and depth labeling sequence of the underlying
// path.
struct TreeStats {
    std::vector<int> area_seq;
    std::vector<int> depth_seq;
    int area = 0;
    int depth = 0;
};

TreeStats tree_stats(const LabeledBranchTree& tree);

}  // namespace kdyck
