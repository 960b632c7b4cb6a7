#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <sstream>

#include "tamari/enumeration.hpp"
#include "tamari/grafting_tree.hpp"
#include "tamari/involutions.hpp"
#include "tamari/io.hpp"
#include "tamari/mtamari.hpp"

namespace tamari {

namespace {

using Predicate = std::function<bool(const IntervalPoset&)>;

std::string first_failure(const std::vector<IntervalPoset>& items, const Predicate& pred, int jobs)
{
    jobs = std::max(1, jobs);
    std::vector<std::future<long>> parts;
    size_t chunk = (items.size() + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
        size_t lo = j * chunk, hi = std::min(items.size(), lo + chunk);
        parts.push_back(std::async(std::launch::async, [&, lo, hi]() -> long {
            for (size_t i = lo; i < hi; ++i)
                if (!pred(items[i]))
                    return static_cast<long>(i);
            return -1;
        }));
    }
    long bad = -1;
    for (auto& f : parts) {
        long i = f.get();
        if (i >= 0 && (bad < 0 || i < bad))
            bad = i;
    }
    return bad < 0 ? "" : to_json(items[bad]).dump();
}

CheckResult check_all(const std::string& name, int n, const std::vector<IntervalPoset>& items,
                      const Predicate& pred, int jobs)
{
    auto bad = first_failure(items, pred, jobs);
    return {name, n, bad.empty(), bad.empty() ? std::to_string(items.size()) + " checked" : "fails on " + bad};
}

CheckResult check_value(const std::string& name, int n, bool ok, const std::string& detail)
{
    return {name, n, ok, detail};
}

std::string str(const BigInt& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

bool same_set(std::vector<IntervalPoset> a, std::vector<IntervalPoset> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}

std::vector<CheckResult> verify_classical(int max_n, int jobs)
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) {
        auto all = enumerate_intervals(n);
        auto expected = count_formula(n);
        out.push_back(check_value("count", n, BigInt(all.size()) == expected,
                                  std::to_string(all.size()) + " vs " + str(expected)));
        out.push_back(check_value("distinct", n, std::set<IntervalPoset>(all.begin(), all.end()).size() == all.size(),
                                  std::to_string(all.size()) + " intervals"));
        out.push_back(check_all("rise-contact", n, all, [](const IntervalPoset& p) {
            auto j = rise_contact(p);
            auto s = interval_stats(p), t = interval_stats(j);
            return rise_contact(j) == p && s.rises[0] == t.contacts[0] && s.contacts[0] == t.rises[0] &&
                   s.risesP == t.contactsP && s.contactsP == t.risesP && s.distance == t.distance;
        }, jobs));
        out.push_back(check_value("phi-symmetry", n, is_swap_invariant(phi_multiset(n)), "multiset swap"));
        out.push_back(check_all("complement", n, all, [](const IntervalPoset& p) {
            auto c = complement(p);
            std::vector<Edge> mapped;
            for (auto [a, b] : tamari_inversions(p))
                mapped.emplace_back(p.size() + 1 - b, p.size() + 1 - a);
            std::sort(mapped.begin(), mapped.end());
            return complement(c) == p && mapped == tamari_inversions(c);
        }, jobs));
        out.push_back(check_all("decomposition", n, all, [](const IntervalPoset& p) {
            return recompose(grafting_decomposition(p)) == p;
        }, jobs));
        out.push_back(check_all("grafting-tree", n, all, [](const IntervalPoset& p) {
            auto g = to_grafting_tree(p);
            return g == to_grafting_tree_recursive(p) && from_grafting_tree(g) == p &&
                   gt_contacts(g) == contacts(p) && gt_distance(g) == distance(p);
        }, jobs));
        out.push_back(check_all("left-branch", n, all, [](const IntervalPoset& p) {
            auto l = left_branch_involution(p);
            auto s = interval_stats(p), t = interval_stats(l);
            return left_branch_involution(l) == p && s.contacts[0] == t.contacts[0] &&
                   s.contactsP == t.contactsP && s.distance == t.distance && s.rises == ic_vector(l);
        }, jobs));
    }
    return out;
}

std::vector<CheckResult> verify_mtamari(int max_n, int m, int jobs)
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) {
        auto all = enumerate_m_intervals(n, m);
        auto expected = m_count_formula(n, m);
        out.push_back(check_value("m-count", n, BigInt(all.size()) == expected,
                                  std::to_string(all.size()) + " vs " + str(expected)));
        out.push_back(check_all("m-rise-contact", n, all, [m](const IntervalPoset& p) {
            auto j = m_rise_contact(p, m);
            auto s = m_interval_stats(p, m), t = m_interval_stats(j, m);
            return m_rise_contact(j, m) == p && s.rises[0] == t.contacts[0] && s.risesP == t.contactsP &&
                   s.contactsP == t.risesP && s.distance == t.distance;
        }, jobs));
        out.push_back(check_value("m-phi-symmetry", n, is_swap_invariant(m_phi_multiset(n, m)), "multiset swap"));
        out.push_back(check_all("expand-distance", n, all, [n, m](const IntervalPoset& p) {
            MGraftingTree g(to_grafting_tree(p), m);
            auto e = expand(g);
            return gt_distance(e) == m * distance(p) + n * m * (m - 1) / 2 && contract(e, m) == g &&
                   gt_contacts(e) == m * contacts(p);
        }, jobs));
    }
    return out;
}

std::vector<CheckResult> verify_oracles(int max_n, int m, int jobs)
{
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) {
        auto all = enumerate_intervals(n);
        out.push_back(check_all("brute-distance", n, all, [](const IntervalPoset& p) {
            return distance(p) == brute_force_distance(p);
        }, jobs));
        out.push_back(check_value("rotation-oracle", n, same_set(all, intervals_by_rotation_oracle(n)),
                                  "enumeration vs comparable tree pairs"));
        auto trees = all_trees(n);
        bool agree = true;
        for (const auto& t1 : trees)
            for (const auto& t2 : trees) {
                bool ok = true;
                try {
                    auto p = interval_from_bounds(t1, t2);
                    ok = bounds_from_interval(p) == std::make_pair(t1, t2);
                } catch (const NotComparable&) {
                    ok = false;
                }
                agree = agree && ok == tamari_leq_bfs(t1, t2);
            }
        out.push_back(check_value("comparability", n, agree, std::to_string(trees.size() * trees.size()) + " pairs"));
        if (m >= 2) {
            auto ms = enumerate_m_intervals(n, m);
            out.push_back(check_all("brute-m-distance", n, ms, [m](const IntervalPoset& p) {
                return distance(p) == brute_force_m_distance(p, m);
            }, jobs));
        }
    }
    return out;
}

}
