#include "tamari/catalan.hpp"

#include <algorithm>
#include <functional>

namespace tamari {

DyckPath::DyckPath(std::vector<bool> steps) : steps_(std::move(steps))
{
    int h = 0;
    for (bool up : steps_) {
        h += up ? 1 : -1;
        if (h < 0)
            throw ParseError("Dyck word goes below the ground line");
    }
    if (h != 0)
        throw ParseError("Dyck word does not end on the ground line");
}

DyckPath DyckPath::parse(std::string_view word)
{
    std::vector<bool> steps;
    for (char c : word) {
        if (c == '1')
            steps.push_back(true);
        else if (c == '0')
            steps.push_back(false);
        else
            throw ParseError(std::string("unexpected character '") + c + "' in Dyck word");
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::str() const
{
    std::string s;
    for (bool up : steps_)
        s += up ? '1' : '0';
    return s;
}

bool DyckPath::is_primitive() const
{
    int h = 0;
    for (int i = 0; i + 1 < length(); ++i) {
        h += steps_[i] ? 1 : -1;
        if (h == 0)
            return false;
    }
    return !steps_.empty();
}

BinaryTree BinaryTree::leaf()
{
    return node(BinaryTree(), BinaryTree());
}

BinaryTree BinaryTree::node(const BinaryTree& l, const BinaryTree& r)
{
    int nl = l.size(), nr = r.size();
    int k = nl + 1;
    BinaryTree t;
    t.left_.assign(nl + nr + 2, 0);
    t.right_.assign(nl + nr + 2, 0);
    for (int v = 1; v <= nl; ++v) {
        t.left_[v] = l.left_[v];
        t.right_[v] = l.right_[v];
    }
    for (int v = 1; v <= nr; ++v) {
        t.left_[v + k] = r.left_[v] ? r.left_[v] + k : 0;
        t.right_[v + k] = r.right_[v] ? r.right_[v] + k : 0;
    }
    t.root_ = k;
    t.left_[k] = l.root_;
    t.right_[k] = r.root_ ? r.root_ + k : 0;
    return t;
}

BinaryTree BinaryTree::from_links(int root, const std::vector<int>& left, const std::vector<int>& right,
                                  std::vector<int>* order)
{
    std::vector<int> seq;
    std::function<void(int)> walk = [&](int v) {
        if (!v)
            return;
        walk(left[v]);
        seq.push_back(v);
        walk(right[v]);
    };
    walk(root);
    std::vector<int> label(left.size(), 0);
    for (size_t i = 0; i < seq.size(); ++i)
        label[seq[i]] = static_cast<int>(i) + 1;
    BinaryTree t;
    int n = static_cast<int>(seq.size());
    t.left_.assign(n + 1, 0);
    t.right_.assign(n + 1, 0);
    for (int v : seq) {
        t.left_[label[v]] = left[v] ? label[left[v]] : 0;
        t.right_[label[v]] = right[v] ? label[right[v]] : 0;
    }
    t.root_ = root ? label[root] : 0;
    if (order)
        *order = seq;
    return t;
}

std::vector<int> BinaryTree::parents() const
{
    std::vector<int> p(left_.size(), 0);
    for (int v = 1; v <= size(); ++v) {
        if (left_[v])
            p[left_[v]] = v;
        if (right_[v])
            p[right_[v]] = v;
    }
    return p;
}

int BinaryTree::subtree_size(int v) const
{
    return v ? 1 + subtree_size(left_[v]) + subtree_size(right_[v]) : 0;
}

BinaryTree BinaryTree::left_subtree() const
{
    return empty() ? BinaryTree() : from_links(left_[root_], left_, right_);
}

BinaryTree BinaryTree::right_subtree() const
{
    return empty() ? BinaryTree() : from_links(right_[root_], left_, right_);
}

std::string BinaryTree::str() const
{
    std::function<std::string(int)> rec = [&](int v) -> std::string {
        if (!v)
            return ".";
        return "(" + rec(left_[v]) + "," + rec(right_[v]) + ")";
    };
    return rec(root_);
}

BinaryTree BinaryTree::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n')
            s += c;
    size_t pos = 0;
    std::function<BinaryTree()> rec = [&]() -> BinaryTree {
        if (pos >= s.size())
            throw ParseError("unexpected end of tree text");
        if (s[pos] == '.') {
            ++pos;
            return BinaryTree();
        }
        if (s[pos] != '(')
            throw ParseError("expected '(' or '.' in tree text");
        ++pos;
        BinaryTree l = rec();
        if (pos >= s.size() || s[pos] != ',')
            throw ParseError("expected ',' in tree text");
        ++pos;
        BinaryTree r = rec();
        if (pos >= s.size() || s[pos] != ')')
            throw ParseError("expected ')' in tree text");
        ++pos;
        return node(l, r);
    };
    BinaryTree t = rec();
    if (pos != s.size())
        throw ParseError("trailing characters in tree text");
    return t;
}

BinaryTree left_comb(int n)
{
    BinaryTree t;
    for (int i = 0; i < n; ++i)
        t = BinaryTree::node(t, BinaryTree());
    return t;
}

BinaryTree right_comb(int n)
{
    BinaryTree t;
    for (int i = 0; i < n; ++i)
        t = BinaryTree::node(BinaryTree(), t);
    return t;
}

BinaryTree dyck_to_tree(const DyckPath& d)
{
    const auto& w = d.steps();
    std::function<BinaryTree(int, int)> rec = [&](int lo, int hi) -> BinaryTree {
        if (lo == hi)
            return BinaryTree();
        int h = 0, split = lo;
        for (int i = lo; i < hi; ++i) {
            if (h == 0)
                split = i;
            h += w[i] ? 1 : -1;
        }
        return BinaryTree::node(rec(lo, split), rec(split + 1, hi - 1));
    };
    return rec(0, d.length());
}

DyckPath tree_to_dyck(const BinaryTree& t)
{
    std::vector<bool> w;
    std::function<void(int)> rec = [&](int v) {
        if (!v)
            return;
        rec(t.left(v));
        w.push_back(true);
        rec(t.right(v));
        w.push_back(false);
    };
    rec(t.root());
    return DyckPath(std::move(w));
}

Forest dyck_final_forest(const DyckPath& d)
{
    int n = d.size();
    Forest f{n, false, std::vector<int>(n + 1, 0)};
    std::vector<int> open;
    int label = 0;
    for (int i = 0; i < d.length(); ++i) {
        if (d[i]) {
            ++label;
            f.parent[label] = open.empty() ? 0 : open.back();
            open.push_back(label);
        } else {
            open.pop_back();
        }
    }
    return f;
}

Forest dyck_initial_forest(const DyckPath& d)
{
    int n = d.size();
    Forest f{n, true, std::vector<int>(n + 1, 0)};
    std::vector<int> open, waiting;
    int label = 0;
    for (int i = 0; i < d.length(); ++i) {
        if (d[i]) {
            ++label;
            for (int a : waiting)
                f.parent[a] = label;
            waiting.clear();
            open.push_back(label);
        } else {
            waiting.push_back(open.back());
            open.pop_back();
        }
    }
    return f;
}

static Forest tree_forest(const BinaryTree& t, bool increasing)
{
    int n = t.size();
    Forest f{n, increasing, std::vector<int>(n + 1, 0)};
    auto par = t.parents();
    for (int v = 1; v <= n; ++v) {
        int c = v;
        while (par[c]) {
            int p = par[c];
            bool from_left = t.left(p) == c;
            if (from_left == increasing) {
                f.parent[v] = p;
                break;
            }
            c = p;
        }
    }
    return f;
}

Forest tree_final_forest(const BinaryTree& t)
{
    return tree_forest(t, false);
}

Forest tree_initial_forest(const BinaryTree& t)
{
    return tree_forest(t, true);
}

static BinaryTree lower_tree(const IntervalPoset& p, int lo, int hi)
{
    if (lo > hi)
        return BinaryTree();
    int k = hi;
    for (int v = lo; v <= hi; ++v) {
        bool all = true;
        for (int b = v + 1; b <= hi && all; ++b)
            all = p.precedes(b, v);
        if (all) {
            k = v;
            break;
        }
    }
    return BinaryTree::node(lower_tree(p, lo, k - 1), lower_tree(p, k + 1, hi));
}

static BinaryTree upper_tree(const IntervalPoset& p, int lo, int hi)
{
    if (lo > hi)
        return BinaryTree();
    int k = lo;
    for (int v = hi; v >= lo; --v) {
        bool all = true;
        for (int a = lo; a < v && all; ++a)
            all = p.precedes(a, v);
        if (all) {
            k = v;
            break;
        }
    }
    return BinaryTree::node(upper_tree(p, lo, k - 1), upper_tree(p, k + 1, hi));
}

static std::vector<Edge> forest_relations(const Forest& f)
{
    std::vector<Edge> out;
    for (int v = 1; v <= f.size; ++v)
        for (int p = f.parent[v]; p; p = f.parent[p])
            out.emplace_back(v, p);
    return out;
}

BinaryTree tree_from_forest(const Forest& f)
{
    auto p = validate(f.size, forest_relations(f));
    return f.increasing ? upper_tree(p, 1, f.size) : lower_tree(p, 1, f.size);
}

DyckPath dyck_from_final_forest(const Forest& f)
{
    std::vector<bool> w;
    std::vector<std::vector<int>> kids(f.size + 1);
    for (int v = 1; v <= f.size; ++v)
        kids[f.parent[v]].push_back(v);
    std::function<void(int)> rec = [&](int v) {
        w.push_back(true);
        for (int c : kids[v])
            rec(c);
        w.push_back(false);
    };
    for (int r : kids[0])
        rec(r);
    return DyckPath(std::move(w));
}

IntervalPoset interval_from_bounds(const BinaryTree& t1, const BinaryTree& t2)
{
    if (t1.size() != t2.size())
        throw Error("bounds have different sizes");
    int n = t1.size();
    std::vector<std::vector<char>> r(n + 1, std::vector<char>(n + 1, 0));
    for (auto [a, b] : forest_relations(tree_final_forest(t1)))
        r[a][b] = 1;
    for (auto [a, b] : forest_relations(tree_initial_forest(t2)))
        r[a][b] = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (r[a][b] && r[b][a])
                throw NotComparable(a, b);
    std::vector<Edge> pairs;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (!r[x][y])
                continue;
            pairs.emplace_back(x, y);
            for (int z = 1; z <= n; ++z)
                if (r[y][z] && !r[x][z])
                    throw NotComparable(std::min(x, z), std::max(x, z));
        }
    try {
        return validate(n, pairs);
    } catch (const TamariAxiomViolated& e) {
        throw NotComparable(e.a, e.c);
    }
}

std::pair<BinaryTree, BinaryTree> bounds_from_interval(const IntervalPoset& p)
{
    return {lower_tree(p, 1, p.size()), upper_tree(p, 1, p.size())};
}

std::pair<DyckPath, DyckPath> dyck_bounds(const IntervalPoset& p)
{
    auto [lo, hi] = bounds_from_interval(p);
    return {tree_to_dyck(lo), tree_to_dyck(hi)};
}

BinaryTree rotate_right(const BinaryTree& t, int v)
{
    int x = t.left(v);
    if (!x)
        throw Error("node has no left child to rotate");
    int n = t.size();
    std::vector<int> l(n + 1), r(n + 1);
    for (int u = 1; u <= n; ++u) {
        l[u] = t.left(u);
        r[u] = t.right(u);
    }
    auto par = t.parents();
    int root = t.root();
    l[v] = r[x];
    r[x] = v;
    int p = par[v];
    if (!p)
        root = x;
    else if (l[p] == v)
        l[p] = x;
    else
        r[p] = x;
    return BinaryTree::from_links(root, l, r);
}

std::vector<BinaryTree> tree_covers(const BinaryTree& t)
{
    std::vector<BinaryTree> out;
    for (int v = 1; v <= t.size(); ++v)
        if (t.left(v))
            out.push_back(rotate_right(t, v));
    return out;
}

std::vector<bool> rotate_word(const std::vector<bool>& word, int pos, int m)
{
    int len = static_cast<int>(word.size());
    if (pos < 0 || pos + 1 >= len || word[pos] || !word[pos + 1])
        throw Error("no rotation at position " + std::to_string(pos));
    int level = 0, j = pos + 1;
    do {
        level += word[j] ? m : -1;
        ++j;
    } while (level != 0);
    std::vector<bool> out(word.begin(), word.begin() + pos);
    out.insert(out.end(), word.begin() + pos + 1, word.begin() + j);
    out.push_back(false);
    out.insert(out.end(), word.begin() + j, word.end());
    return out;
}

std::vector<int> rotation_positions(const std::vector<bool>& word)
{
    std::vector<int> out;
    for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i)
        if (!word[i] && word[i + 1])
            out.push_back(i);
    return out;
}

DyckPath rotate_dyck(const DyckPath& d, int pos)
{
    return DyckPath(rotate_word(d.steps(), pos, 1));
}

std::vector<DyckPath> dyck_covers(const DyckPath& d)
{
    std::vector<DyckPath> out;
    for (int pos : rotation_positions(d.steps()))
        out.push_back(rotate_dyck(d, pos));
    return out;
}

std::vector<BinaryTree> all_trees(int n)
{
    if (n == 0)
        return {BinaryTree()};
    std::vector<BinaryTree> out;
    for (int l = 0; l < n; ++l) {
        auto ls = all_trees(l);
        auto rs = all_trees(n - 1 - l);
        for (const auto& a : ls)
            for (const auto& b : rs)
                out.push_back(BinaryTree::node(a, b));
    }
    return out;
}

std::vector<DyckPath> all_dyck_paths(int n)
{
    std::vector<DyckPath> out;
    std::vector<bool> w;
    std::function<void(int, int)> rec = [&](int ups, int downs) {
        if (downs == n) {
            out.emplace_back(w);
            return;
        }
        if (ups < n) {
            w.push_back(true);
            rec(ups + 1, downs);
            w.pop_back();
        }
        if (downs < ups) {
            w.push_back(false);
            rec(ups, downs + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}
