#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ykm/errors.hpp"

namespace ykm {

// All scalar arithmetic in the computational core is exact rational.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// "p/q" or "p"
inline Rat parse_rat(const std::string& s) {
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(errc::parse_error, "bad rational: " + s);
  }
}

inline std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) fail(errc::resource_limit, "integer out of 64-bit range");
  return static_cast<std::int64_t>(z.get_si());
}

// exact integer extraction; the argument must have denominator 1
inline std::int64_t rat_to_int64(const Rat& r) {
  if (r.get_den() != 1) fail(errc::validation_failure, "expected integer, got " + r.get_str());
  return to_int64(r.get_num());
}

}  // namespace ykm
