#pragma once

#include <iosfwd>

namespace tamari {

int cli_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}
