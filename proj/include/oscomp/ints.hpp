#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace oscomp {

// All semigroup arithmetic is exact. Int is arbitrary precision; Rat is an
// exact rational used by the state-functional machinery.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

std::string int_to_string(const Int& v);

// Parses an optionally negative base-10 integer; throws Errc::ParseError.
Int int_from_string(const std::string& s);

// Checked narrowing for table indices; throws Errc::InternalLimit beyond cap.
std::size_t to_index(const Int& v, std::size_t cap = static_cast<std::size_t>(1) << 28);

Int gcd_all(const std::vector<Int>& vs);

std::string rat_to_string(const Rat& q);

}  // namespace oscomp
