#include "tamari/interval_poset.hpp"

#include <algorithm>

namespace tamari {

std::vector<int> Forest::roots() const
{
    std::vector<int> out;
    for (int v = 1; v <= size; ++v)
        if (parent[v] == 0)
            out.push_back(v);
    return out;
}

std::vector<int> Forest::children(int v) const
{
    std::vector<int> out;
    for (int c = 1; c <= size; ++c)
        if (parent[c] == v)
            out.push_back(c);
    return out;
}

std::vector<Edge> Forest::edges() const
{
    std::vector<Edge> out;
    for (int v = 1; v <= size; ++v)
        if (parent[v] != 0)
            out.emplace_back(v, parent[v]);
    return out;
}

IntervalPoset::IntervalPoset(int n) : n_(n), rel_(static_cast<size_t>(n) * n, 0) {}

std::vector<Edge> IntervalPoset::relations() const
{
    std::vector<Edge> out;
    for (int a = 1; a <= n_; ++a)
        for (int b = 1; b <= n_; ++b)
            if (precedes(a, b))
                out.emplace_back(a, b);
    return out;
}

std::vector<Edge> IntervalPoset::increasing_edges() const
{
    return initial_forest(*this).edges();
}

std::vector<Edge> IntervalPoset::decreasing_edges() const
{
    return final_forest(*this).edges();
}

IntervalPoset IntervalPoset::restrict(int lo, int hi) const
{
    std::vector<Edge> pairs;
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b)
            if (precedes(a, b))
                pairs.emplace_back(a - lo + 1, b - lo + 1);
    return validate(std::max(0, hi - lo + 1), pairs);
}

IntervalPoset validate(int n, const std::vector<Edge>& pairs)
{
    if (n < 0)
        throw ParseError("negative size");
    IntervalPoset p(n);
    auto at = [&](int a, int b) -> unsigned char& { return p.rel_[(a - 1) * n + (b - 1)]; };
    for (auto [a, b] : pairs) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("vertex out of range 1.." + std::to_string(n));
        if (a == b)
            throw CycleOrSymmetry(a, b);
        at(a, b) = 1;
    }
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i)
            if (at(i, k))
                for (int j = 1; j <= n; ++j)
                    if (at(k, j))
                        at(i, j) = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b)
            if (at(a, b) && at(b, a))
                throw CycleOrSymmetry(a, b);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                if ((at(a, c) && !at(b, c)) || (at(c, a) && !at(b, a)))
                    throw TamariAxiomViolated(a, b, c);
    return p;
}

Forest final_forest(const IntervalPoset& p)
{
    int n = p.size();
    Forest f{n, false, std::vector<int>(n + 1, 0)};
    for (int b = 2; b <= n; ++b)
        for (int a = b - 1; a >= 1; --a)
            if (p.precedes(b, a)) {
                f.parent[b] = a;
                break;
            }
    return f;
}

Forest initial_forest(const IntervalPoset& p)
{
    int n = p.size();
    Forest f{n, true, std::vector<int>(n + 1, 0)};
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (p.precedes(a, b)) {
                f.parent[a] = b;
                break;
            }
    return f;
}

std::vector<int> decreasing_roots(const IntervalPoset& p)
{
    return final_forest(p).roots();
}

std::vector<int> increasing_roots(const IntervalPoset& p)
{
    return initial_forest(p).roots();
}

int contacts(const IntervalPoset& p)
{
    return static_cast<int>(decreasing_roots(p).size());
}

IntervalPoset complement(const IntervalPoset& p)
{
    int n = p.size();
    std::vector<Edge> pairs;
    for (auto [a, b] : p.relations())
        pairs.emplace_back(n + 1 - a, n + 1 - b);
    return validate(n, pairs);
}

std::vector<Edge> tamari_inversions(const IntervalPoset& p)
{
    int n = p.size();
    std::vector<Edge> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            bool blocked = false;
            for (int k = a; k < b && !blocked; ++k)
                blocked = p.precedes(b, k);
            for (int k = a + 1; k <= b && !blocked; ++k)
                blocked = p.precedes(a, k);
            if (!blocked)
                out.emplace_back(a, b);
        }
    return out;
}

int distance(const IntervalPoset& p)
{
    return static_cast<int>(tamari_inversions(p).size());
}

IntervalPoset add_inversion_step(const IntervalPoset& p)
{
    auto inv = tamari_inversions(p);
    if (inv.empty())
        throw NoInversions();
    auto pairs = p.relations();
    pairs.emplace_back(inv.front().second, inv.front().first);
    return validate(p.size(), pairs);
}

static std::vector<Edge> concatenated(const IntervalPoset& i1, const IntervalPoset& i2)
{
    auto pairs = i1.relations();
    int shift = i1.size();
    for (auto [a, b] : i2.relations())
        pairs.emplace_back(a + shift, b + shift);
    return pairs;
}

IntervalPoset left_graft(const IntervalPoset& i1, const IntervalPoset& i2)
{
    if (i1.size() == 0)
        return i2;
    if (i2.size() == 0)
        throw EmptyInput("left grafting onto an empty interval-poset");
    int n1 = i1.size();
    auto pairs = concatenated(i1, i2);
    for (int y = 1; y <= n1; ++y)
        pairs.emplace_back(y, n1 + 1);
    return validate(n1 + i2.size(), pairs);
}

IntervalPoset right_graft(const IntervalPoset& i1, int r, const IntervalPoset& i2)
{
    if (i1.size() == 0)
        throw EmptyInput("right grafting from an empty interval-poset");
    if (i2.size() == 0) {
        if (r != 0)
            throw RParameterOutOfRange(r, 0);
        return i1;
    }
    auto roots = decreasing_roots(i2);
    if (r < 0 || r > static_cast<int>(roots.size()))
        throw RParameterOutOfRange(r, static_cast<int>(roots.size()));
    int n1 = i1.size();
    auto pairs = concatenated(i1, i2);
    for (int i = 0; i < r; ++i)
        pairs.emplace_back(roots[i] + n1, n1);
    return validate(n1 + i2.size(), pairs);
}

GraftingTriple grafting_decomposition(const IntervalPoset& p)
{
    int n = p.size();
    if (n == 0)
        throw EmptyInput();
    int k = 1;
    for (int v = n; v >= 1; --v) {
        bool all = true;
        for (int y = 1; y < v && all; ++y)
            all = p.precedes(y, v);
        if (all) {
            k = v;
            break;
        }
    }
    int r = 0;
    auto dec = final_forest(p);
    for (int c = k + 1; c <= n; ++c)
        if (dec.parent[c] == k)
            ++r;
    return {p.restrict(1, k - 1), p.restrict(k + 1, n), r};
}

IntervalPoset recompose(const GraftingTriple& t)
{
    return left_graft(t.left, right_graft(IntervalPoset(1), t.r, t.right));
}

bool is_extension_of(const IntervalPoset& ext, const IntervalPoset& base)
{
    if (ext.size() != base.size())
        return false;
    for (auto [a, b] : base.relations())
        if (!ext.precedes(a, b))
            return false;
    return true;
}

static bool added_relations_all(const IntervalPoset& ext, const IntervalPoset& base, bool decreasing)
{
    if (!is_extension_of(ext, base))
        return false;
    for (auto [a, b] : ext.relations())
        if (!base.precedes(a, b) && ((a > b) != decreasing))
            return false;
    return true;
}

bool is_decreasing_extension_of(const IntervalPoset& ext, const IntervalPoset& base)
{
    return added_relations_all(ext, base, true);
}

bool is_increasing_extension_of(const IntervalPoset& ext, const IntervalPoset& base)
{
    return added_relations_all(ext, base, false);
}

}
