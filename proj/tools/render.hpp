#pragma once

#include <string>

#include "tamari/interval_poset.hpp"

namespace tamari {

std::string render_dot(const IntervalPoset& p);
std::string render_tikz(const IntervalPoset& p);

}
