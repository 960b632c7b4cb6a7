#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "tamari/enumeration.hpp"
#include "tamari/involutions.hpp"
#include "tamari/mtamari.hpp"

using namespace tamari;

namespace {

const char* sample_ballot = "101011000011001000000100";

std::vector<int> nonzero(std::vector<int> v)
{
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return v;
}

}

TEST_SUITE("mtamari") {

TEST_CASE("ballot path parsing")
{
    auto b = BallotPath::parse(sample_ballot, 2);
    CHECK(b.size() == 8);
    CHECK(b.str() == sample_ballot);
    CHECK_THROWS_AS(BallotPath::parse("1000", 2), ParseError);
    CHECK_THROWS_AS(BallotPath::parse("0100", 2), ParseError);
    CHECK_THROWS_AS(BallotPath::parse("100", 0), ParseError);
}

TEST_CASE("ballot paths and m-Dyck paths")
{
    auto b = BallotPath::parse(sample_ballot, 2);
    auto d = ballot_to_mdyck(b);
    CHECK(d.size() == 16);
    CHECK(contact_vector(d) == std::vector<int>{2, 2, 0, 3, 0, 1, 1, 1, 0, 1, 2, 1, 0, 1, 0, 1});
    CHECK(rise_vector(d) == std::vector<int>{2, 2, 4, 0, 0, 0, 4, 0, 2, 0, 0, 0, 0, 0, 2, 0});
    CHECK(mdyck_to_ballot(d, 2) == b);
    CHECK(ballot_to_mdyck(BallotPath::parse("100100100", 2)).str() == "110011001100");
    CHECK(mdyck_to_ballot(DyckPath::parse("11001100"), 2).str() == "100100");
    CHECK(ballot_to_mdyck(BallotPath::parse("110100", 1)).str() == "110100");
    CHECK_THROWS_AS(mdyck_to_ballot(DyckPath::parse("110100"), 2), NotRiseDivisible);
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 4; ++n)
            for (const auto& p : all_ballot_paths(n, m))
                CHECK(mdyck_to_ballot(ballot_to_mdyck(p), m) == p);
}

TEST_CASE("m-statistics")
{
    auto b = BallotPath::parse(sample_ballot, 2);
    auto s = m_stats(b);
    CHECK(s.contacts == std::vector<int>{2, 1, 0, 2, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0});
    CHECK(s.rises == std::vector<int>{1, 1, 2, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0});
    CHECK(std::count(s.contactsP.begin(), s.contactsP.end(), 0) == 11);
    CHECK(std::count(s.contactsP.begin(), s.contactsP.end(), 1) == 2);
    CHECK(std::count(s.contactsP.begin(), s.contactsP.end(), 2) == 3);
    CHECK(s.rises[0] == 1);
    CHECK(std::count(s.risesP.begin(), s.risesP.end(), 0) == 10);
    CHECK(std::count(s.risesP.begin(), s.risesP.end(), 1) == 4);
    CHECK(std::count(s.risesP.begin(), s.risesP.end(), 2) == 2);
    auto low = m_stats(BallotPath::parse("100100100", 2));
    CHECK(low.contacts == std::vector<int>{3, 0, 0, 0, 0, 0});
}

TEST_CASE("area partition")
{
    auto b = BallotPath::parse(sample_ballot, 2);
    CHECK(area_vector(b) == std::vector<int>{0, 1, 2, 4, 2, 4, 4, 0});
    CHECK(area_partition(b) == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(area_monomial(b) == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(area_partition(BallotPath::parse("100100100", 2)) == std::vector<int>{3});
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& p : all_ballot_paths(n, m))
                CHECK(area_monomial(p) == nonzero(m_stats(p).contactsP));
}

TEST_CASE("m-interval-posets")
{
    CHECK(is_m_interval_poset(fixtures::m_two_sample(), 2));
    CHECK(is_m_interval_poset(fixtures::m_two_sample_image(), 2));
    CHECK_FALSE(is_m_interval_poset(IntervalPoset(4), 2));
    CHECK_FALSE(is_m_interval_poset(IntervalPoset(6), 3));
    CHECK_THROWS_AS(is_m_interval_poset(IntervalPoset(5), 2), SizeNotDivisible);
    for (int m = 2; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            if (n % m)
                continue;
            for (const auto& p : enumerate_intervals(n))
                CHECK(is_m_interval_poset(p, m) == is_m_grafting_tree(to_grafting_tree(p), m));
        }
}

TEST_CASE("m-statistics of the large sample and its image")
{
    auto i = fixtures::m_two_sample(), j = fixtures::m_two_sample_image();
    auto s = m_interval_stats(i, 2), t = m_interval_stats(j, 2);
    CHECK(s.contacts == std::vector<int>{5, 0, 0, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0});
    CHECK(s.rises == std::vector<int>{1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 0, 1, 1, 0, 0, 2, 0, 0, 0, 0, 0});
    CHECK(t.contacts == std::vector<int>{1, 0, 2, 0, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1, 2, 0, 0, 0, 0, 0, 0, 0});
    CHECK(t.rises == std::vector<int>{5, 1, 2, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(s.distance == 7);
    CHECK(t.distance == 7);
    CHECK(s.contactsP == t.risesP);
    CHECK(s.risesP == t.contactsP);
    CHECK(m_rise_contact(i, 2) == j);
    CHECK(m_rise_contact(j, 2) == i);
}

TEST_CASE("expand and contract")
{
    MGraftingTree g(to_grafting_tree(fixtures::m_two_sample()), 2);
    auto e = expand(g);
    CHECK(contract(e, 2) == g);
    CHECK(gt_contacts(e) == 2 * gt_contacts(g.tree));
    CHECK(gt_distance(e) == 2 * gt_distance(g.tree) + 11);
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : enumerate_intervals(n)) {
            MGraftingTree one(to_grafting_tree(p), 1);
            CHECK(expand(one) == one.tree);
            CHECK(contract(one.tree, 1) == one);
        }
    CHECK_THROWS_AS(MGraftingTree(to_grafting_tree(IntervalPoset(2)), 2), NotMInterval);
    CHECK_THROWS_AS(contract(to_grafting_tree(validate(2, {{2, 1}})), 2), NotMDivisible);
}

TEST_CASE("contract inverts expand on divisible trees")
{
    for (int m = 2; m <= 3; ++m) {
        for (int n = 1; n * m <= 6; ++n)
            for (const auto& g : m_grafting_trees(n, m)) {
                MGraftingTree mg(g, m);
                CHECK(contract(expand(mg), m) == mg);
            }
        for (int size = m; size <= 6; size += m)
            for (const auto& p : enumerate_intervals(size)) {
                auto g = to_grafting_tree(p);
                bool divisible = is_rise_contact_m_divisible(p, m) &&
                                 std::all_of(g.labels.begin(), g.labels.end(), [m](int l) { return l % m == 0; });
                if (divisible)
                    CHECK(expand(contract(g, m)) == g);
                else
                    CHECK_THROWS_AS(contract(g, m), NotMDivisible);
            }
    }
}

TEST_CASE("m-rise-contact involution")
{
    CHECK_THROWS_AS(m_rise_contact(IntervalPoset(4), 2), NotMInterval);
    for (auto [m, max_n] : {std::pair{2, 3}, std::pair{3, 2}})
        for (int n = 1; n <= max_n; ++n) {
            auto all = enumerate_m_intervals(n, m);
            if (n == 1)
                CHECK(m_rise_contact(all.front(), m) == all.front());
            for (const auto& p : all) {
                auto j = m_rise_contact(p, m);
                CHECK(m_rise_contact(j, m) == p);
                auto s = m_interval_stats(p, m), t = m_interval_stats(j, m);
                CHECK(s.rises[0] == t.contacts[0]);
                CHECK(s.risesP == t.contactsP);
                CHECK(s.contactsP == t.risesP);
                CHECK(s.distance == t.distance);
            }
        }
}

TEST_CASE("ballot rotations")
{
    auto b = BallotPath::parse("101000110100000100", 2);
    CHECK(rotate_ballot(b, 5).str() == "101001101000000100");
    CHECK(ballot_covers(BallotPath::parse("111000000", 2)).empty());
    auto all = all_ballot_paths(3, 2);
    CHECK(all.size() == 12);
    std::set<BallotPath> seen(all.begin(), all.end());
    size_t edges = 0;
    for (const auto& p : all)
        for (const auto& q : ballot_covers(p)) {
            CHECK(seen.count(q) == 1);
            ++edges;
        }
    CHECK(edges == 16);
}

}
