#ifndef IKLAB_RATIONAL_HPP
#define IKLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iklab {

// All problem data and reported values are exact rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double rat_double(const Rat& r) { return r.template convert_to<double>(); }

// Largest integer <= r.
inline Int rat_floor(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return q;
}

// Smallest integer >= r.
inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Canonical text form: "n" when integral, otherwise "n/d" in lowest terms.
std::string rat_str(const Rat& r);

// Parses "n" or "n/d" (optionally signed). Returns nullopt on anything else,
// including decimal notation.
std::optional<Rat> rat_parse(const std::string& text);

// lcm of the denominators of a set of rationals; 1 for an empty set.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace iklab

#endif  // IKLAB_RATIONAL_HPP
