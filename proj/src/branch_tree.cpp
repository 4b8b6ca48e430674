#include "kdyck/branch_tree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kdyck {

BranchTreeStructure::BranchTreeStructure(std::vector<Branch> branches)
    : branches_(std::move(branches)) {
    if (branches_.empty())
        throw std::invalid_argument("branch tree must have at least one branch");
    if (branches_.front().parent != -1 || branches_.front().offset != 0)
        throw std::invalid_argument("the initial branch has no parent");
    std::map<std::pair<int, int>, bool> attachment;  // (parent, offset) uniqueness
    for (int j = 0; j < branch_count(); ++j) {
        const Branch& b = branches_[static_cast<size_t>(j)];
        if (b.length < 0) throw std::invalid_argument("branch length must be nonnegative");
        if (j == 0) continue;
        if (b.parent < 0 || b.parent >= j)
            throw std::invalid_argument("branch parent must precede the branch");
        int parent_length = branches_[static_cast<size_t>(b.parent)].length;
        if (b.offset < 0 || b.offset > parent_length)
            throw std::invalid_argument("branch offset must lie on the parent");
        if (!attachment.emplace(std::make_pair(b.parent, b.offset), true).second)
            throw std::invalid_argument("each vertex of a branch connects to at most one child");
    }
}

std::vector<int> BranchTreeStructure::type() const {
    std::vector<int> lengths;
    lengths.reserve(branches_.size());
    for (const Branch& b : branches_) lengths.push_back(b.length);
    return lengths;
}

LabeledBranchTree::LabeledBranchTree(BranchTreeStructure structure, std::vector<int> red,
                                     std::vector<std::vector<int>> blue)
    : structure_(std::move(structure)), red_(std::move(red)), blue_(std::move(blue)) {}

std::string LabeledBranchTree::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < branch_count(); ++i) {
        const Branch& b = structure_.branch(i);
        out << '#' << i + 1 << " len=" << b.length;
        if (b.parent < 0)
            out << " parent=- offset=-";
        else
            out << " parent=" << b.parent + 1 << " offset=" << b.offset;
        out << " red=" << red_[static_cast<size_t>(i)] << " blues=";
        const auto& blues = blue_[static_cast<size_t>(i)];
        for (size_t m = 0; m < blues.size(); ++m) {
            if (m > 0) out << ',';
            out << blues[m];
        }
        out << '\n';
    }
    return out.str();
}

LabeledBranchTree relabel(const BranchTreeStructure& structure) {
    int count = structure.branch_count();
    // child_at[b] : offset -> child index, iterated in offset order.
    std::vector<std::map<int, int>> child_at(static_cast<size_t>(count));
    for (int j = 1; j < count; ++j)
        child_at[static_cast<size_t>(structure.branch(j).parent)]
            .emplace(structure.branch(j).offset, j);

    std::vector<int> red(static_cast<size_t>(count), 0);
    std::vector<std::vector<int>> blue(static_cast<size_t>(count));
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<size_t>(count));
    int counter = 0;

    std::function<void(int)> visit = [&](int b) {
        red[static_cast<size_t>(b)] = ++counter;
        visit_order.push_back(b);
        const auto& children = child_at[static_cast<size_t>(b)];
        // A child sharing the top vertex is entered before any edge is
        // marked; after marking edge m the child hanging at its end vertex
        // is entered.
        auto it = children.find(0);
        if (it != children.end()) visit(it->second);
        for (int m = 1; m <= structure.branch(b).length; ++m) {
            blue[static_cast<size_t>(b)].push_back(++counter);
            it = children.find(m);
            if (it != children.end()) visit(it->second);
        }
    };
    visit(0);
    if (static_cast<int>(visit_order.size()) != count)
        throw std::logic_error("labeling traversal missed a branch");

    // Canonicalize: branches in visit (red-label) order, parents remapped.
    std::vector<int> new_index(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) new_index[static_cast<size_t>(visit_order[static_cast<size_t>(i)])] = i;
    std::vector<Branch> branches;
    std::vector<int> red_out;
    std::vector<std::vector<int>> blue_out;
    branches.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        int old = visit_order[static_cast<size_t>(i)];
        Branch b = structure.branch(old);
        if (b.parent >= 0) b.parent = new_index[static_cast<size_t>(b.parent)];
        branches.push_back(b);
        red_out.push_back(red[static_cast<size_t>(old)]);
        blue_out.push_back(blue[static_cast<size_t>(old)]);
    }
    return LabeledBranchTree(BranchTreeStructure(std::move(branches)), std::move(red_out),
                             std::move(blue_out));
}

LabeledBranchTree tree_from_tableau(const FillingTableau& tableau) {
    if (tableau.variant() != FillVariant::Max)
        throw std::invalid_argument("branch trees are built from Max filling tableaux");
    ValidationResult check = validate(tableau);
    if (!check.ok) throw std::invalid_argument("invalid filling tableau: " + check.message);

    const KVector& kvec = tableau.kvec();
    std::vector<Branch> branches(static_cast<size_t>(kvec.length()));
    branches[0] = {kvec.part(1), -1, 0};
    for (int j = 2; j <= kvec.length(); ++j) {
        // The red label of branch j follows the label at (parent, offset+1)
        // in the traversal, so its predecessor's cell recovers both.
        int top = tableau.columns()[static_cast<size_t>(j - 1)].front();
        auto [col, row] = tableau.position_of(top - 1);
        branches[static_cast<size_t>(j - 1)] = {kvec.part(j), col - 1, row - 1};
    }
    LabeledBranchTree tree = relabel(BranchTreeStructure(std::move(branches)));

    for (int i = 0; i < kvec.length(); ++i) {
        const auto& column = tableau.columns()[static_cast<size_t>(i)];
        if (tree.red_labels()[static_cast<size_t>(i)] != column.front() ||
            tree.blue_labels()[static_cast<size_t>(i)] !=
                std::vector<int>(column.begin() + 1, column.end()))
            throw std::logic_error("tableau labels disagree with the labeling traversal");
    }
    return tree;
}

FillingTableau tableau_from_tree(const LabeledBranchTree& tree) {
    std::vector<std::vector<int>> columns;
    columns.reserve(static_cast<size_t>(tree.branch_count()));
    for (int i = 0; i < tree.branch_count(); ++i) {
        std::vector<int> column;
        column.push_back(tree.red_labels()[static_cast<size_t>(i)]);
        const auto& blues = tree.blue_labels()[static_cast<size_t>(i)];
        column.insert(column.end(), blues.begin(), blues.end());
        columns.push_back(std::move(column));
    }
    return FillingTableau(KVector(tree.type()), std::move(columns), FillVariant::Max);
}

LabeledBranchTree dual(const LabeledBranchTree& tree) {
    std::vector<Branch> branches = tree.structure().branches();
    for (size_t j = 1; j < branches.size(); ++j) {
        int parent_length = branches[static_cast<size_t>(branches[j].parent)].length;
        branches[j].offset = parent_length - branches[j].offset;
    }
    return relabel(BranchTreeStructure(std::move(branches)));
}

TreeStats tree_stats(const LabeledBranchTree& tree) {
    TreeStats stats;
    int count = tree.branch_count();
    stats.area_seq.resize(static_cast<size_t>(count), 0);
    stats.depth_seq.resize(static_cast<size_t>(count), 0);
    for (int j = 1; j < count; ++j) {
        const Branch& b = tree.structure().branch(j);
        int parent_length = tree.structure().branch(b.parent).length;
        stats.area_seq[static_cast<size_t>(j)] =
            stats.area_seq[static_cast<size_t>(b.parent)] + parent_length - b.offset;
        stats.depth_seq[static_cast<size_t>(j)] =
            stats.depth_seq[static_cast<size_t>(b.parent)] + b.offset;
    }
    for (int j = 0; j < count; ++j) {
        stats.area += stats.area_seq[static_cast<size_t>(j)];
        stats.depth += stats.depth_seq[static_cast<size_t>(j)];
    }
    return stats;
}

}  // namespace kdyck
