#ifndef MVCOORD_RATIONAL_HPP_
#define MVCOORD_RATIONAL_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mvcoord {

  // Exact rationals, always kept in lowest terms.
  using Rational = boost::multiprecision::cpp_rational;
  using BigInt   = boost::multiprecision::cpp_int;

  inline Rational make_rational(BigInt num, BigInt den) {
    return Rational(std::move(num), std::move(den));
  }

  inline std::string to_string(Rational const& q) {
    return q.str();
  }

}  // namespace mvcoord

#endif  // MVCOORD_RATIONAL_HPP_
