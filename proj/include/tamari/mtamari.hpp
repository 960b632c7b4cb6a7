#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tamari/catalan.hpp"
#include "tamari/grafting_tree.hpp"
#include "tamari/statistics.hpp"

namespace tamari {

class BallotPath {
public:
    BallotPath() = default;
    BallotPath(int m, std::vector<bool> steps);
    static BallotPath parse(std::string_view word, int m);

    int m() const { return m_; }
    int size() const { return n_; }
    const std::vector<bool>& steps() const { return steps_; }
    std::string str() const;

    bool operator==(const BallotPath&) const = default;
    auto operator<=>(const BallotPath&) const = default;

private:
    int m_ = 1;
    int n_ = 0;
    std::vector<bool> steps_;
};

struct MGraftingTree {
    GraftingTree tree;
    int m = 1;

    MGraftingTree() = default;
    MGraftingTree(GraftingTree g, int m);
    bool operator==(const MGraftingTree&) const = default;
};

DyckPath ballot_to_mdyck(const BallotPath& b);
BallotPath mdyck_to_ballot(const DyckPath& d, int m);

StatVector m_contact_vector(const BallotPath& b);
StatVector m_rise_vector(const BallotPath& b);
StatBundle m_stats(const BallotPath& b);

std::vector<int> area_vector(const BallotPath& b);
std::vector<int> area_partition(const BallotPath& b);
ExponentMultiset area_monomial(const BallotPath& b);

bool is_m_interval_poset(const IntervalPoset& p, int m);
bool is_m_grafting_tree(const GraftingTree& g, int m);
bool is_rise_contact_m_divisible(const IntervalPoset& p, int m);
std::pair<BallotPath, BallotPath> ballot_bounds(const IntervalPoset& p, int m);
StatBundle m_interval_stats(const IntervalPoset& p, int m);

GraftingTree expand(const MGraftingTree& g);
MGraftingTree contract(const GraftingTree& g, int m);
IntervalPoset m_rise_contact(const IntervalPoset& p, int m);

BallotPath rotate_ballot(const BallotPath& b, int pos);
std::vector<BallotPath> ballot_covers(const BallotPath& b);
std::vector<BallotPath> all_ballot_paths(int n, int m);

}
