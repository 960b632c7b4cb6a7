#include "tamari/mtamari.hpp"

#include <algorithm>
#include <functional>

#include "tamari/involutions.hpp"

namespace tamari {

BallotPath::BallotPath(int m, std::vector<bool> steps) : m_(m), steps_(std::move(steps))
{
    if (m_ < 1)
        throw ParseError("m must be at least 1");
    int v = 0, h = 0;
    for (bool up : steps_) {
        (up ? v : h) += 1;
        if (m_ * v < h)
            throw ParseError("ballot word crosses below the line y = x/m");
    }
    if (h != m_ * v)
        throw ParseError("ballot word does not end at (nm, n)");
    n_ = v;
}

BallotPath BallotPath::parse(std::string_view word, int m)
{
    std::vector<bool> steps;
    for (char c : word) {
        if (c != '0' && c != '1')
            throw ParseError(std::string("unexpected character '") + c + "' in ballot word");
        steps.push_back(c == '1');
    }
    return BallotPath(m, std::move(steps));
}

std::string BallotPath::str() const
{
    std::string s;
    for (bool up : steps_)
        s += up ? '1' : '0';
    return s;
}

MGraftingTree::MGraftingTree(GraftingTree g, int m_) : tree(std::move(g)), m(m_)
{
    check_grafting_tree(tree);
    if (!is_m_grafting_tree(tree, m))
        throw NotMInterval("grafting tree violates the m-condition for m = " + std::to_string(m));
}

DyckPath ballot_to_mdyck(const BallotPath& b)
{
    std::vector<bool> w;
    for (bool up : b.steps()) {
        if (up)
            w.insert(w.end(), b.m(), true);
        else
            w.push_back(false);
    }
    return DyckPath(std::move(w));
}

BallotPath mdyck_to_ballot(const DyckPath& d, int m)
{
    if (m < 1)
        throw ParseError("m must be at least 1");
    std::vector<bool> w;
    const auto& s = d.steps();
    for (size_t i = 0; i < s.size();) {
        if (!s[i]) {
            w.push_back(false);
            ++i;
            continue;
        }
        size_t j = i;
        while (j < s.size() && s[j])
            ++j;
        if ((j - i) % m != 0)
            throw NotRiseDivisible("Dyck path " + d.str() + " has a rise not divisible by " + std::to_string(m));
        w.insert(w.end(), (j - i) / m, true);
        i = j;
    }
    return BallotPath(m, std::move(w));
}

StatVector m_contact_vector(const BallotPath& b)
{
    auto c = contact_vector(ballot_to_mdyck(b));
    for (size_t k = 1; k < c.size(); ++k)
        if (k % b.m() != 0)
            c[k] -= 1;
    return c;
}

StatVector m_rise_vector(const BallotPath& b)
{
    auto r = rise_vector(ballot_to_mdyck(b));
    for (auto& x : r)
        x /= b.m();
    return r;
}

StatBundle m_stats(const BallotPath& b)
{
    return make_bundle(b.size(), m_contact_vector(b), m_rise_vector(b), 0);
}

std::vector<int> area_vector(const BallotPath& b)
{
    std::vector<int> a;
    int x = 0, y = 0;
    for (bool up : b.steps()) {
        if (up) {
            a.push_back(b.m() * y - x);
            ++y;
        } else {
            ++x;
        }
    }
    return a;
}

std::vector<int> area_partition(const BallotPath& b)
{
    auto a = area_vector(b);
    std::vector<bool> taken(a.size(), false);
    std::vector<int> lambda;
    for (size_t i = 0; i < a.size(); ++i) {
        if (taken[i])
            continue;
        int block = 1;
        for (size_t j = i + 1; j < a.size() && a[j] >= a[i]; ++j)
            if (a[j] == a[i]) {
                taken[j] = true;
                ++block;
            }
        lambda.push_back(block);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

ExponentMultiset area_monomial(const BallotPath& b)
{
    return exponent_multiset(area_partition(b));
}

bool is_m_interval_poset(const IntervalPoset& p, int m)
{
    if (m < 1 || p.size() % m != 0)
        throw SizeNotDivisible("size " + std::to_string(p.size()) + " is not divisible by m = " + std::to_string(m));
    for (int i = 1; i <= p.size() / m; ++i)
        for (int j = 0; j + 1 < m; ++j)
            if (!p.precedes(i * m - j, i * m - j - 1))
                return false;
    return true;
}

bool is_m_grafting_tree(const GraftingTree& g, int m)
{
    if (m < 1 || g.size() % m != 0 || budget_violation(g) != 0)
        return false;
    for (int v = 1; v <= g.size(); ++v)
        if (v % m != 0 && g.label(v) < 1)
            return false;
    return true;
}

bool is_rise_contact_m_divisible(const IntervalPoset& p, int m)
{
    auto s = interval_stats(p);
    auto divisible = [m](int x) { return x % m == 0; };
    return std::all_of(s.contacts.begin(), s.contacts.end(), divisible) &&
           std::all_of(s.rises.begin(), s.rises.end(), divisible);
}

std::pair<BallotPath, BallotPath> ballot_bounds(const IntervalPoset& p, int m)
{
    auto [lo, hi] = dyck_bounds(p);
    return {mdyck_to_ballot(lo, m), mdyck_to_ballot(hi, m)};
}

StatBundle m_interval_stats(const IntervalPoset& p, int m)
{
    if (!is_m_interval_poset(p, m))
        throw NotMInterval("interval-poset is not an m-interval-poset for m = " + std::to_string(m));
    auto [lo, hi] = ballot_bounds(p, m);
    return make_bundle(p.size() / m, m_contact_vector(lo), m_rise_vector(hi), distance(p));
}

GraftingTree expand(const MGraftingTree& g)
{
    GraftingTree out = g.tree;
    for (int v = 1; v <= out.size(); ++v) {
        int l = g.tree.label(v);
        out.labels[v - 1] = v % g.m == 0 ? g.m * l : g.m * (l - 1);
    }
    return out;
}

MGraftingTree contract(const GraftingTree& g, int m)
{
    if (m < 1 || g.size() % m != 0)
        throw SizeNotDivisible("size " + std::to_string(g.size()) + " is not divisible by m = " + std::to_string(m));
    check_grafting_tree(g);
    for (int v = 1; v <= g.size(); ++v)
        if (g.label(v) % m != 0)
            throw NotMDivisible("label of node " + std::to_string(v) + " is not divisible by " + std::to_string(m));
    if (!is_rise_contact_m_divisible(from_grafting_tree(g), m))
        throw NotMDivisible("interval is not rise-contact-" + std::to_string(m) + "-divisible");
    GraftingTree out = g;
    for (int v = 1; v <= g.size(); ++v)
        out.labels[v - 1] = g.label(v) / m + (v % m == 0 ? 0 : 1);
    return MGraftingTree(std::move(out), m);
}

IntervalPoset m_rise_contact(const IntervalPoset& p, int m)
{
    if (!is_m_interval_poset(p, m))
        throw NotMInterval("interval-poset is not an m-interval-poset for m = " + std::to_string(m));
    MGraftingTree g(to_grafting_tree(p), m);
    auto j = rise_contact(from_grafting_tree(expand(g)));
    return from_grafting_tree(contract(to_grafting_tree(j), m).tree);
}

BallotPath rotate_ballot(const BallotPath& b, int pos)
{
    return BallotPath(b.m(), rotate_word(b.steps(), pos, b.m()));
}

std::vector<BallotPath> ballot_covers(const BallotPath& b)
{
    std::vector<BallotPath> out;
    for (int pos : rotation_positions(b.steps()))
        out.push_back(rotate_ballot(b, pos));
    return out;
}

std::vector<BallotPath> all_ballot_paths(int n, int m)
{
    std::vector<BallotPath> out;
    std::vector<bool> w;
    std::function<void(int, int)> rec = [&](int v, int h) {
        if (v == n && h == n * m) {
            out.emplace_back(m, w);
            return;
        }
        if (v < n) {
            w.push_back(true);
            rec(v + 1, h);
            w.pop_back();
        }
        if (h < m * v) {
            w.push_back(false);
            rec(v, h + 1);
            w.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}
