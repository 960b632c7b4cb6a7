#include "tamari/grafting_tree.hpp"

#include <functional>
#include <numeric>

namespace tamari {

namespace {

struct SubtreeSums {
    std::vector<int> size, labels;
};

SubtreeSums subtree_sums(const GraftingTree& g)
{
    int n = g.size();
    SubtreeSums s{std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
    std::function<void(int)> rec = [&](int v) {
        if (!v)
            return;
        int l = g.tree.left(v), r = g.tree.right(v);
        rec(l);
        rec(r);
        s.size[v] = 1 + s.size[l] + s.size[r];
        s.labels[v] = g.label(v) + s.labels[l] + s.labels[r];
    };
    rec(g.tree.root());
    return s;
}

GraftingTree relabeled(const GraftingTree& g, int root, const std::vector<int>& l, const std::vector<int>& r)
{
    std::vector<int> order;
    GraftingTree out{BinaryTree::from_links(root, l, r, &order), {}};
    for (int old : order)
        out.labels.push_back(g.label(old));
    return out;
}

}

int budget_violation(const GraftingTree& g)
{
    if (static_cast<int>(g.labels.size()) != g.size())
        return -1;
    auto s = subtree_sums(g);
    for (int v = 1; v <= g.size(); ++v) {
        int r = g.tree.right(v);
        if (g.label(v) < 0 || g.label(v) > s.size[r] - s.labels[r])
            return v;
    }
    return 0;
}

void check_grafting_tree(const GraftingTree& g)
{
    if (int v = budget_violation(g))
        throw InvalidLabels(v);
}

GraftingTree to_grafting_tree(const IntervalPoset& p)
{
    GraftingTree g{bounds_from_interval(p).second, std::vector<int>(p.size(), 0)};
    auto f = final_forest(p);
    for (int c = 1; c <= p.size(); ++c)
        if (f.parent[c])
            ++g.labels[f.parent[c] - 1];
    return g;
}

GraftingTree to_grafting_tree_recursive(const IntervalPoset& p)
{
    if (p.size() == 0)
        return {};
    auto t = grafting_decomposition(p);
    auto l = to_grafting_tree_recursive(t.left);
    auto r = to_grafting_tree_recursive(t.right);
    GraftingTree g{BinaryTree::node(l.tree, r.tree), l.labels};
    g.labels.push_back(t.r);
    g.labels.insert(g.labels.end(), r.labels.begin(), r.labels.end());
    return g;
}

IntervalPoset from_grafting_tree(const GraftingTree& g)
{
    check_grafting_tree(g);
    std::function<IntervalPoset(int)> rec = [&](int v) -> IntervalPoset {
        if (!v)
            return IntervalPoset();
        auto right = right_graft(IntervalPoset(1), g.label(v), rec(g.tree.right(v)));
        return left_graft(rec(g.tree.left(v)), right);
    };
    return rec(g.tree.root());
}

int gt_contacts(const GraftingTree& g)
{
    return g.size() - std::accumulate(g.labels.begin(), g.labels.end(), 0);
}

std::vector<int> gt_distance_terms(const GraftingTree& g)
{
    auto s = subtree_sums(g);
    std::vector<int> d(g.size(), 0);
    for (int v = 1; v <= g.size(); ++v) {
        int r = g.tree.right(v);
        d[v - 1] = s.size[r] - s.labels[r] - g.label(v);
    }
    return d;
}

int gt_distance(const GraftingTree& g)
{
    auto d = gt_distance_terms(g);
    return std::accumulate(d.begin(), d.end(), 0);
}

GraftingTree left_branch_involution(const GraftingTree& g)
{
    int n = g.size();
    if (n == 0)
        return g;
    std::vector<int> l(n + 1, 0), r(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        r[v] = g.tree.right(v);
    auto reverse_branch = [&](int start) {
        std::vector<int> chain;
        for (int v = start; v; v = g.tree.left(v))
            chain.push_back(v);
        for (size_t j = chain.size(); j-- > 1;)
            l[chain[j]] = chain[j - 1];
        l[chain.front()] = 0;
        return chain.back();
    };
    int root = reverse_branch(g.tree.root());
    for (int v = 1; v <= n; ++v)
        if (g.tree.right(v))
            r[v] = reverse_branch(g.tree.right(v));
    return relabeled(g, root, l, r);
}

GraftingTree left_branch_involution_recursive(const GraftingTree& g)
{
    int n = g.size();
    std::vector<int> l(n + 1, 0), r(n + 1, 0);
    std::function<int(int)> rec = [&](int v) -> int {
        if (!v)
            return 0;
        int top = rec(g.tree.left(v));
        l[v] = 0;
        r[v] = rec(g.tree.right(v));
        if (!top)
            return v;
        int x = top;
        while (l[x])
            x = l[x];
        l[x] = v;
        return top;
    };
    int root = rec(g.tree.root());
    return relabeled(g, root, l, r);
}

IntervalPoset left_branch_involution(const IntervalPoset& p)
{
    return from_grafting_tree(left_branch_involution(to_grafting_tree(p)));
}

}
