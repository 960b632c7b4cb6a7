#include "tamari/statistics.hpp"

#include <algorithm>

namespace tamari {

StatBundle StatBundle::swapped() const
{
    return {size, rises, contacts, distance, risesP, contactsP};
}

ExponentMultiset exponent_multiset(const StatVector& v)
{
    ExponentMultiset e(v);
    std::sort(e.begin(), e.end());
    return e;
}

StatBundle make_bundle(int size, StatVector contacts, StatVector rises, int distance)
{
    auto cp = exponent_multiset(contacts);
    auto rp = exponent_multiset(rises);
    return {size, std::move(contacts), std::move(rises), distance, std::move(cp), std::move(rp)};
}

static std::vector<int> heights(const DyckPath& d)
{
    std::vector<int> h(d.length() + 1, 0);
    for (int i = 0; i < d.length(); ++i)
        h[i + 1] = h[i] + (d[i] ? 1 : -1);
    return h;
}

StatVector contact_vector(const DyckPath& d)
{
    int n = d.size();
    if (n == 0)
        return {};
    auto h = heights(d);
    StatVector v(n, 0);
    for (int q = 0; q < d.length(); ++q)
        if (h[q] == 0)
            ++v[0];
    int label = 0;
    for (int s = 0; s < d.length() && label < n - 1; ++s) {
        if (!d[s])
            continue;
        ++label;
        int base = h[s + 1], count = 0;
        for (int q = s + 1; q < d.length() && h[q] >= base; ++q)
            if (h[q] == base && h[q + 1] >= base)
                ++count;
        v[label] = count;
    }
    return v;
}

StatVector rise_vector(const DyckPath& d)
{
    int n = d.size();
    if (n == 0)
        return {};
    auto run_from = [&](int i) {
        int run = 0;
        while (i < d.length() && d[i]) {
            ++run;
            ++i;
        }
        return run;
    };
    StatVector v{run_from(0)};
    for (int i = 0; i < d.length() && static_cast<int>(v.size()) < n; ++i)
        if (!d[i])
            v.push_back(run_from(i + 1));
    return v;
}

DyckPath dyck_from_rise_vector(const StatVector& rises)
{
    std::vector<bool> w;
    for (int r : rises) {
        w.insert(w.end(), r, true);
        w.push_back(false);
    }
    return DyckPath(std::move(w));
}

StatVector dc_vector(const IntervalPoset& p)
{
    int n = p.size();
    if (n == 0)
        return {};
    auto f = final_forest(p);
    StatVector v(n, 0);
    v[0] = static_cast<int>(f.roots().size());
    for (int c = 1; c <= n; ++c)
        if (f.parent[c] && f.parent[c] < n)
            ++v[f.parent[c]];
    return v;
}

StatVector ic_vector(const IntervalPoset& p)
{
    int n = p.size();
    if (n == 0)
        return {};
    auto f = initial_forest(p);
    StatVector v(n, 0);
    v[0] = static_cast<int>(f.roots().size());
    for (int c = 1; c <= n; ++c)
        if (f.parent[c] && f.parent[c] >= 2)
            ++v[n + 1 - f.parent[c]];
    return v;
}

StatBundle interval_stats(const IntervalPoset& p)
{
    auto [lo, hi] = dyck_bounds(p);
    return make_bundle(p.size(), contact_vector(lo), rise_vector(hi), distance(p));
}

}
