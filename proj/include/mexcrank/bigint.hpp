#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mexcrank {

// Every count and series coefficient is exact; values outgrow 64 bits
// long before n = 500.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace mexcrank
