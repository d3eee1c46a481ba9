#ifndef QFACE_RATIONAL_HPP
#define QFACE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qface {

// Exact arithmetic everywhere; no operation in this project rounds.
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the invariant the geometry layer relies on.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return numerator(r); }
inline Int rational_den(const Rational& r) { return denominator(r); }

inline std::string to_string(const Rational& r) { return r.str(); }

Int binomial(long long n, long long k);

} // namespace qface

#endif
