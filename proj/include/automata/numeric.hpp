#pragma once

// Exact arithmetic carriers shared by every module. Probabilities, bounds and
// round-model quantities are all exact; floating point only ever appears in
// reporting helpers.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace automata {

using Rational = mpq_class;
using BigNatural = mpz_class;

/// "num/den" in lowest terms; integers are still written with "/1".
std::string to_string(const Rational& q);
std::string to_string(const BigNatural& n);

/// Accepts "num/den", "num" or a finite decimal such as "0.9".
Rational parse_rational(std::string_view text);
BigNatural parse_natural(std::string_view text);

Rational pow(const Rational& base, std::uint64_t exponent);
BigNatural pow(const BigNatural& base, std::uint64_t exponent);
BigNatural binomial(std::uint64_t n, std::uint64_t k);
BigNatural factorial(std::uint64_t n);

/// Rigorous rational enclosure [lo, hi].
struct Enclosure {
    Rational lo;
    Rational hi;

    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

/// Enclosure of Euler's number from the Taylor series truncated after
/// `terms` terms; the tail is bounded by 1/(terms! * terms).
Enclosure euler_enclosure(unsigned terms = 60);

/// Least integer k >= 0 with e^k >= c, decided on rational enclosures of e.
std::uint64_t ceil_ln(std::uint64_t c);

/// Enclosure of base^exponent for 0 <= base <= 1, computed in fixed point
/// with directed rounding. Works for exponents far beyond what exact
/// powering can hold in memory.
Enclosure pow_enclosure(const Rational& base, const BigNatural& exponent,
                        unsigned precision_bits);

double to_double(const Rational& q);

}  // namespace automata
