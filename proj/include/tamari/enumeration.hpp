#pragma once

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tamari/catalan.hpp"
#include "tamari/grafting_tree.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/statistics.hpp"

namespace tamari {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);
BigInt count_formula(int n);
BigInt m_count_formula(int n, int m);

using IntervalVisitor = std::function<void(const IntervalPoset&)>;

void for_each_interval(int n, const IntervalVisitor& visit);
std::vector<IntervalPoset> enumerate_intervals(int n);
std::vector<GraftingTree> m_grafting_trees(int n, int m);
void for_each_m_interval(int n, int m, const IntervalVisitor& visit);
std::vector<IntervalPoset> enumerate_m_intervals(int n, int m);

std::vector<StatBundle> phi_multiset(int n);
std::vector<StatBundle> m_phi_multiset(int n, int m);
bool is_swap_invariant(std::vector<StatBundle> bundles);

int longest_rotation_chain(const std::vector<bool>& lower, const std::vector<bool>& upper, int m);
int brute_force_distance(const IntervalPoset& p);
int brute_force_m_distance(const IntervalPoset& p, int m);
bool tamari_leq_bfs(const BinaryTree& t1, const BinaryTree& t2);
std::vector<IntervalPoset> intervals_by_rotation_oracle(int n);

}
