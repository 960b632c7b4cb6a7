#include "tamari/enumeration.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "tamari/mtamari.hpp"

namespace tamari {

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

BigInt count_formula(int n)
{
    return m_count_formula(n, 1);
}

BigInt m_count_formula(int n, int m)
{
    if (n < 1 || m < 1)
        throw Error("counting formula needs n >= 1 and m >= 1");
    BigInt num = BigInt(m + 1) * binomial((m + 1) * (m + 1) * n + m, n - 1);
    return num / (BigInt(n) * (BigInt(m) * n + 1));
}

static std::vector<std::vector<IntervalPoset>> interval_tables(int upto)
{
    std::vector<std::vector<IntervalPoset>> t(upto + 1);
    t[0].emplace_back();
    IntervalPoset u(1);
    for (int n = 1; n <= upto; ++n)
        for (int a = 0; a < n; ++a)
            for (const auto& left : t[a])
                for (const auto& right : t[n - 1 - a])
                    for (int r = 0, c = contacts(right); r <= c; ++r)
                        t[n].push_back(left_graft(left, right_graft(u, r, right)));
    return t;
}

void for_each_interval(int n, const IntervalVisitor& visit)
{
    if (n == 0) {
        visit(IntervalPoset());
        return;
    }
    auto t = interval_tables(n - 1);
    IntervalPoset u(1);
    for (int a = 0; a < n; ++a)
        for (const auto& left : t[a])
            for (const auto& right : t[n - 1 - a])
                for (int r = 0, c = contacts(right); r <= c; ++r)
                    visit(left_graft(left, right_graft(u, r, right)));
}

std::vector<IntervalPoset> enumerate_intervals(int n)
{
    std::vector<IntervalPoset> out;
    for_each_interval(n, [&](const IntervalPoset& p) { out.push_back(p); });
    return out;
}

std::vector<GraftingTree> m_grafting_trees(int n, int m)
{
    int size = n * m;
    std::vector<GraftingTree> out;
    for (const auto& tree : all_trees(size)) {
        GraftingTree g{tree, std::vector<int>(size, 0)};
        std::vector<int> rsize(size + 1, 0);
        for (int v = 1; v <= size; ++v)
            rsize[v] = tree.subtree_size(tree.right(v));
        auto labels_in = [&](int v) {
            int s = 0;
            std::function<void(int)> rec = [&](int x) {
                if (!x)
                    return;
                s += g.label(x);
                rec(tree.left(x));
                rec(tree.right(x));
            };
            rec(v);
            return s;
        };
        std::function<void(int)> rec = [&](int v) {
            if (v == 0) {
                out.push_back(g);
                return;
            }
            int budget = rsize[v] - labels_in(tree.right(v));
            for (int l = (v % m == 0 ? 0 : 1); l <= budget; ++l) {
                g.labels[v - 1] = l;
                rec(v - 1);
            }
            g.labels[v - 1] = 0;
        };
        rec(size);
    }
    return out;
}

void for_each_m_interval(int n, int m, const IntervalVisitor& visit)
{
    for (const auto& g : m_grafting_trees(n, m))
        visit(from_grafting_tree(g));
}

std::vector<IntervalPoset> enumerate_m_intervals(int n, int m)
{
    std::vector<IntervalPoset> out;
    for_each_m_interval(n, m, [&](const IntervalPoset& p) { out.push_back(p); });
    return out;
}

std::vector<StatBundle> phi_multiset(int n)
{
    std::vector<StatBundle> out;
    for_each_interval(n, [&](const IntervalPoset& p) { out.push_back(interval_stats(p)); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StatBundle> m_phi_multiset(int n, int m)
{
    std::vector<StatBundle> out;
    for_each_m_interval(n, m, [&](const IntervalPoset& p) { out.push_back(m_interval_stats(p, m)); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using PhiTerm = std::tuple<int, int, int, ExponentMultiset, ExponentMultiset, int>;

PhiTerm phi_term(const StatBundle& b)
{
    int c = b.contacts.empty() ? 0 : b.contacts[0];
    int r = b.rises.empty() ? 0 : b.rises[0];
    return {b.size, c, r, b.contactsP, b.risesP, b.distance};
}

}

bool is_swap_invariant(std::vector<StatBundle> bundles)
{
    std::vector<PhiTerm> terms, swapped;
    for (const auto& b : bundles) {
        terms.push_back(phi_term(b));
        swapped.push_back(phi_term(b.swapped()));
    }
    std::sort(terms.begin(), terms.end());
    std::sort(swapped.begin(), swapped.end());
    return terms == swapped;
}

int longest_rotation_chain(const std::vector<bool>& lower, const std::vector<bool>& upper, int m)
{
    std::map<std::vector<bool>, int> memo;
    std::function<int(const std::vector<bool>&)> rec = [&](const std::vector<bool>& w) -> int {
        if (w == upper)
            return 0;
        auto it = memo.find(w);
        if (it != memo.end())
            return it->second;
        int best = -1;
        for (int pos : rotation_positions(w)) {
            int d = rec(rotate_word(w, pos, m));
            if (d >= 0)
                best = std::max(best, d + 1);
        }
        memo[w] = best;
        return best;
    };
    return rec(lower);
}

int brute_force_distance(const IntervalPoset& p)
{
    auto [lo, hi] = dyck_bounds(p);
    return longest_rotation_chain(lo.steps(), hi.steps(), 1);
}

int brute_force_m_distance(const IntervalPoset& p, int m)
{
    auto [lo, hi] = ballot_bounds(p, m);
    return longest_rotation_chain(lo.steps(), hi.steps(), m);
}

bool tamari_leq_bfs(const BinaryTree& t1, const BinaryTree& t2)
{
    std::set<BinaryTree> seen{t1};
    std::queue<BinaryTree> q;
    q.push(t1);
    while (!q.empty()) {
        auto t = q.front();
        q.pop();
        if (t == t2)
            return true;
        for (auto& c : tree_covers(t))
            if (seen.insert(c).second)
                q.push(c);
    }
    return false;
}

std::vector<IntervalPoset> intervals_by_rotation_oracle(int n)
{
    std::vector<IntervalPoset> out;
    auto trees = all_trees(n);
    for (const auto& t1 : trees)
        for (const auto& t2 : trees)
            if (tamari_leq_bfs(t1, t2)) {
                std::vector<Edge> pairs;
                for (auto [a, b] : tree_final_forest(t1).edges())
                    pairs.emplace_back(a, b);
                for (auto [a, b] : tree_initial_forest(t2).edges())
                    pairs.emplace_back(a, b);
                out.push_back(validate(n, pairs));
            }
    return out;
}

}
