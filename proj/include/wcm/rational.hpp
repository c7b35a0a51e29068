#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wcm {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q".
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

Int binomial(int n, int k);

} // namespace wcm
