#include "tamari/involutions.hpp"

#include "tamari/grafting_tree.hpp"

namespace tamari {

IntervalPoset rise_contact(const IntervalPoset& p)
{
    return left_branch_involution(complement(left_branch_involution(p)));
}

}
