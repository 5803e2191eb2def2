#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace demflag {

// Multiplicities are path counts and grow quickly; all coefficient and count
// arithmetic uses arbitrary-precision integers so overflow cannot occur.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace demflag
