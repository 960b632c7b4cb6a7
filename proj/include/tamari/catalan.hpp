#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamari/interval_poset.hpp"

namespace tamari {

class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<bool> steps);
    static DyckPath parse(std::string_view word);

    int size() const { return static_cast<int>(steps_.size() / 2); }
    int length() const { return static_cast<int>(steps_.size()); }
    bool operator[](int i) const { return steps_[i]; }
    const std::vector<bool>& steps() const { return steps_; }
    std::string str() const;
    bool is_primitive() const;

    bool operator==(const DyckPath&) const = default;
    auto operator<=>(const DyckPath& o) const { return steps_ <=> o.steps_; }

private:
    std::vector<bool> steps_;
};

class BinaryTree {
public:
    BinaryTree() = default;
    static BinaryTree leaf();
    static BinaryTree node(const BinaryTree& l, const BinaryTree& r);
    static BinaryTree parse(std::string_view text);
    static BinaryTree from_links(int root, const std::vector<int>& left, const std::vector<int>& right,
                                 std::vector<int>* order = nullptr);

    int size() const { return static_cast<int>(left_.size()) - 1; }
    bool empty() const { return root_ == 0; }
    int root() const { return root_; }
    int left(int v) const { return left_[v]; }
    int right(int v) const { return right_[v]; }
    std::vector<int> parents() const;
    int subtree_size(int v) const;
    BinaryTree left_subtree() const;
    BinaryTree right_subtree() const;
    std::string str() const;

    bool operator==(const BinaryTree&) const = default;
    auto operator<=>(const BinaryTree&) const = default;

private:
    int root_ = 0;
    std::vector<int> left_{0};
    std::vector<int> right_{0};
};

BinaryTree left_comb(int n);
BinaryTree right_comb(int n);

BinaryTree dyck_to_tree(const DyckPath& d);
DyckPath tree_to_dyck(const BinaryTree& t);

Forest dyck_final_forest(const DyckPath& d);
Forest dyck_initial_forest(const DyckPath& d);
Forest tree_final_forest(const BinaryTree& t);
Forest tree_initial_forest(const BinaryTree& t);
BinaryTree tree_from_forest(const Forest& f);
DyckPath dyck_from_final_forest(const Forest& f);

IntervalPoset interval_from_bounds(const BinaryTree& t1, const BinaryTree& t2);
std::pair<BinaryTree, BinaryTree> bounds_from_interval(const IntervalPoset& p);
std::pair<DyckPath, DyckPath> dyck_bounds(const IntervalPoset& p);

BinaryTree rotate_right(const BinaryTree& t, int v);
std::vector<BinaryTree> tree_covers(const BinaryTree& t);

std::vector<bool> rotate_word(const std::vector<bool>& word, int pos, int m);
std::vector<int> rotation_positions(const std::vector<bool>& word);
DyckPath rotate_dyck(const DyckPath& d, int pos);
std::vector<DyckPath> dyck_covers(const DyckPath& d);

std::vector<BinaryTree> all_trees(int n);
std::vector<DyckPath> all_dyck_paths(int n);

}
