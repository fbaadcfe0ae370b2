#pragma once

// IEEE binary128 arithmetic for the checks whose difference quotients or
// divergent lattice sums need more than 53 bits.
#include <boost/multiprecision/float128.hpp>

namespace qlab {
using quad = boost::multiprecision::float128;
}
