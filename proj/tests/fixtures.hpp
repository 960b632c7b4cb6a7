#pragma once

#include <vector>

#include "tamari/interval_poset.hpp"

namespace fixtures {

using tamari::Edge;
using tamari::IntervalPoset;

inline IntervalPoset poset(int n, std::vector<Edge> inc, const std::vector<Edge>& dec)
{
    inc.insert(inc.end(), dec.begin(), dec.end());
    return tamari::validate(n, inc);
}

inline IntervalPoset five()
{
    return poset(5, {{1, 3}, {2, 3}}, {{2, 1}, {4, 3}, {5, 3}});
}

inline IntervalPoset ten()
{
    return poset(10, {{2, 5}, {3, 4}, {4, 5}, {6, 7}, {8, 10}, {9, 10}},
                 {{3, 2}, {4, 2}, {6, 5}, {7, 5}, {8, 5}, {9, 8}, {10, 5}});
}

inline IntervalPoset eight()
{
    return poset(8, {{1, 2}, {2, 4}, {3, 4}, {6, 7}}, {{3, 2}, {8, 7}, {5, 4}, {6, 4}});
}

inline IntervalPoset eight_left_branch()
{
    return poset(8, {{1, 6}, {2, 6}, {3, 5}, {4, 5}, {5, 6}, {6, 8}, {7, 8}},
                 {{7, 6}, {4, 3}, {3, 1}, {2, 1}});
}

inline IntervalPoset eight_left_branch_complement()
{
    return poset(8, {{2, 3}, {5, 6}, {6, 8}, {7, 8}},
                 {{8, 3}, {7, 3}, {6, 4}, {5, 4}, {4, 3}, {3, 1}, {2, 1}});
}

inline IntervalPoset eight_image()
{
    return poset(8, {{2, 8}, {3, 8}, {4, 5}, {5, 7}, {6, 7}, {7, 8}},
                 {{8, 1}, {7, 2}, {6, 2}, {5, 3}, {4, 3}, {3, 2}, {2, 1}});
}

inline IntervalPoset three_a()
{
    return poset(3, {{2, 3}}, {{2, 1}});
}

inline IntervalPoset three_b()
{
    return poset(3, {}, {{3, 2}});
}

inline IntervalPoset m_two_sample()
{
    return poset(22,
                 {{1, 3}, {2, 3}, {4, 7}, {5, 7}, {6, 7}, {7, 9}, {8, 9}, {10, 15}, {11, 13}, {12, 13},
                  {13, 15}, {14, 15}, {15, 19}, {16, 17}, {17, 19}, {18, 19}},
                 {{22, 21}, {21, 19}, {20, 19}, {18, 17}, {17, 15}, {16, 15}, {15, 9}, {14, 13}, {13, 9},
                  {12, 11}, {11, 10}, {10, 9}, {8, 7}, {6, 5}, {5, 3}, {4, 3}, {2, 1}});
}

inline IntervalPoset m_two_sample_image()
{
    return poset(22,
                 {{10, 11}, {11, 21}, {12, 13}, {13, 21}, {14, 19}, {15, 19}, {16, 17}, {17, 19}, {18, 19},
                  {19, 21}, {20, 21}},
                 {{22, 21}, {21, 7}, {20, 19}, {19, 13}, {18, 17}, {17, 14}, {16, 15}, {15, 14}, {14, 13},
                  {13, 11}, {12, 11}, {11, 9}, {10, 9}, {9, 7}, {8, 7}, {7, 5}, {6, 5}, {5, 2}, {4, 3},
                  {3, 2}, {2, 1}});
}

}
