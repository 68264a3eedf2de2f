#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace pcw {

// All cone / weight / LP arithmetic is exact. Doubles appear only in the
// decoder message passing and in report output.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long long num, long long den = 1) {
  return Rat(BigInt(num), BigInt(den));
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat dot(const std::vector<long long>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace pcw
