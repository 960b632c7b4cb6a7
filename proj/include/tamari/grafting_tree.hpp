#pragma once

#include <vector>

#include "tamari/catalan.hpp"
#include "tamari/interval_poset.hpp"

namespace tamari {

struct GraftingTree {
    BinaryTree tree;
    std::vector<int> labels;

    int size() const { return tree.size(); }
    int label(int v) const { return labels[v - 1]; }
    bool operator==(const GraftingTree&) const = default;
    auto operator<=>(const GraftingTree&) const = default;
};

int budget_violation(const GraftingTree& g);
void check_grafting_tree(const GraftingTree& g);

GraftingTree to_grafting_tree(const IntervalPoset& p);
GraftingTree to_grafting_tree_recursive(const IntervalPoset& p);
IntervalPoset from_grafting_tree(const GraftingTree& g);

int gt_contacts(const GraftingTree& g);
std::vector<int> gt_distance_terms(const GraftingTree& g);
int gt_distance(const GraftingTree& g);

GraftingTree left_branch_involution(const GraftingTree& g);
GraftingTree left_branch_involution_recursive(const GraftingTree& g);
IntervalPoset left_branch_involution(const IntervalPoset& p);

}
