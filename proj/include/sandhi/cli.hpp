#pragma once

#include <iosfwd>

namespace sandhi {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sandhi
