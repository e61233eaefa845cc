#include "oscomp/ints.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "oscomp/errors.hpp"

namespace oscomp {

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(Errc::ParseError, "bare sign is not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      fail(Errc::ParseError, "not a base-10 integer: '" + s + "'");
  }
  return Int(s);
}

std::size_t to_index(const Int& v, std::size_t cap) {
  if (v < 0) fail(Errc::NegativeInput, "negative value used as an index");
  if (v > Int(cap)) fail(Errc::InternalLimit, "value " + v.str() + " exceeds table cap");
  return static_cast<std::size_t>(v);
}

Int gcd_all(const std::vector<Int>& vs) {
  Int g = 0;
  for (const Int& v : vs) g = boost::integer::gcd(g, v);
  return g;
}

std::string rat_to_string(const Rat& q) {
  if (q.denominator() == 1) return q.numerator().str();
  return q.numerator().str() + "/" + q.denominator().str();
}

}  // namespace oscomp
