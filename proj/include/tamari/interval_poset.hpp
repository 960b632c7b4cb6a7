#pragma once

#include <utility>
#include <vector>

#include "tamari/errors.hpp"

namespace tamari {

using Edge = std::pair<int, int>;

struct Forest {
    int size = 0;
    bool increasing = false;
    std::vector<int> parent;

    bool has_parent(int v) const { return parent[v] != 0; }
    std::vector<int> roots() const;
    std::vector<int> children(int v) const;
    std::vector<Edge> edges() const;

    bool operator==(const Forest&) const = default;
};

class IntervalPoset {
public:
    IntervalPoset() = default;
    explicit IntervalPoset(int n);

    int size() const { return n_; }
    bool precedes(int a, int b) const { return rel_[(a - 1) * n_ + (b - 1)] != 0; }

    std::vector<Edge> relations() const;
    std::vector<Edge> increasing_edges() const;
    std::vector<Edge> decreasing_edges() const;
    IntervalPoset restrict(int lo, int hi) const;

    bool operator==(const IntervalPoset&) const = default;
    auto operator<=>(const IntervalPoset& o) const
    {
        if (n_ != o.n_)
            return n_ <=> o.n_;
        return rel_ <=> o.rel_;
    }

private:
    friend IntervalPoset validate(int n, const std::vector<Edge>& pairs);
    int n_ = 0;
    std::vector<unsigned char> rel_;
};

IntervalPoset validate(int n, const std::vector<Edge>& pairs);

Forest final_forest(const IntervalPoset& p);
Forest initial_forest(const IntervalPoset& p);
std::vector<int> decreasing_roots(const IntervalPoset& p);
std::vector<int> increasing_roots(const IntervalPoset& p);
int contacts(const IntervalPoset& p);

IntervalPoset complement(const IntervalPoset& p);
std::vector<Edge> tamari_inversions(const IntervalPoset& p);
int distance(const IntervalPoset& p);
IntervalPoset add_inversion_step(const IntervalPoset& p);

IntervalPoset left_graft(const IntervalPoset& i1, const IntervalPoset& i2);
IntervalPoset right_graft(const IntervalPoset& i1, int r, const IntervalPoset& i2);

struct GraftingTriple {
    IntervalPoset left;
    IntervalPoset right;
    int r = 0;
    bool operator==(const GraftingTriple&) const = default;
};

GraftingTriple grafting_decomposition(const IntervalPoset& p);
IntervalPoset recompose(const GraftingTriple& t);

bool is_extension_of(const IntervalPoset& ext, const IntervalPoset& base);
bool is_decreasing_extension_of(const IntervalPoset& ext, const IntervalPoset& base);
bool is_increasing_extension_of(const IntervalPoset& ext, const IntervalPoset& base);

}
