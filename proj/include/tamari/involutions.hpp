#pragma once

#include "tamari/interval_poset.hpp"

namespace tamari {

IntervalPoset rise_contact(const IntervalPoset& p);

}
