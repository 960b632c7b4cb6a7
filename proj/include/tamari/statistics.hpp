#pragma once

#include <compare>
#include <vector>

#include "tamari/catalan.hpp"
#include "tamari/interval_poset.hpp"

namespace tamari {

using StatVector = std::vector<int>;
using ExponentMultiset = std::vector<int>;

struct StatBundle {
    int size = 0;
    StatVector contacts;
    StatVector rises;
    int distance = 0;
    ExponentMultiset contactsP;
    ExponentMultiset risesP;

    StatBundle swapped() const;
    bool operator==(const StatBundle&) const = default;
    auto operator<=>(const StatBundle&) const = default;
};

ExponentMultiset exponent_multiset(const StatVector& v);
StatBundle make_bundle(int size, StatVector contacts, StatVector rises, int distance);

StatVector contact_vector(const DyckPath& d);
StatVector rise_vector(const DyckPath& d);
DyckPath dyck_from_rise_vector(const StatVector& rises);

StatVector dc_vector(const IntervalPoset& p);
StatVector ic_vector(const IntervalPoset& p);

StatBundle interval_stats(const IntervalPoset& p);

}
