#ifndef NAKASEQ_BIGINT_HPP
#define NAKASEQ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace nakaseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace nakaseq

#endif  // NAKASEQ_BIGINT_HPP
