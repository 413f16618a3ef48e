#include "automata/numeric.hpp"

#include "automata/errors.hpp"

#include <cctype>
#include <string>

namespace automata {

std::string to_string(const Rational& q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigNatural& n) { return n.get_str(); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

BigNatural digits_to_natural(std::string_view s)
{
    return BigNatural(std::string(s), 10);
}

}  // namespace

BigNatural parse_natural(std::string_view text)
{
    if (!all_digits(text)) throw FormatError("not a natural number: '" + std::string(text) + "'");
    return digits_to_natural(text);
}

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw FormatError("malformed rational: '" + std::string(text) + "'");
        BigNatural d = digits_to_natural(den);
        if (d == 0) throw FormatError("zero denominator: '" + std::string(text) + "'");
        result = Rational(digits_to_natural(num), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
            throw FormatError("malformed decimal: '" + std::string(text) + "'");
        BigNatural scale = pow(BigNatural(10), frac.size());
        BigNatural w = whole.empty() ? BigNatural(0) : digits_to_natural(whole);
        result = Rational(w * scale + digits_to_natural(frac), scale);
    } else {
        if (!all_digits(body)) throw FormatError("malformed rational: '" + std::string(text) + "'");
        result = Rational(digits_to_natural(body));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

Rational pow(const Rational& base, std::uint64_t exponent)
{
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    result.canonicalize();
    return result;
}

BigNatural pow(const BigNatural& base, std::uint64_t exponent)
{
    BigNatural result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

BigNatural binomial(std::uint64_t n, std::uint64_t k)
{
    BigNatural result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

BigNatural factorial(std::uint64_t n)
{
    BigNatural result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Enclosure euler_enclosure(unsigned terms)
{
    if (terms < 2) terms = 2;
    Rational sum(0);
    BigNatural fact(1);
    for (unsigned i = 0; i <= terms; ++i) {
        if (i > 0) fact *= i;
        sum += Rational(1, fact);
    }
    // sum_{i > N} 1/i! < 1/(N! * N)
    Rational tail(1, fact * terms);
    tail.canonicalize();
    return {sum, sum + tail};
}

std::uint64_t ceil_ln(std::uint64_t c)
{
    if (c <= 1) return 0;
    for (unsigned terms = 30;; terms *= 2) {
        Enclosure e = euler_enclosure(terms);
        Rational target(c);
        Rational lo(1), hi(1);
        std::uint64_t k = 0;
        bool decided = true;
        while (true) {
            if (lo >= target) break;  // e^k >= lo^k >= c
            if (hi < target) {        // e^k <= hi^k < c
                ++k;
                lo *= e.lo;
                hi *= e.hi;
                continue;
            }
            decided = false;  // enclosure straddles c
            break;
        }
        if (decided) return k;
        if (terms > 4000) throw ResourceCapExceeded("ceil_ln: could not separate e^k from c");
    }
}

namespace {

// floor or ceiling of (x * y) / 2^bits
BigNatural scaled_mul(const BigNatural& x, const BigNatural& y, unsigned bits, bool round_up)
{
    BigNatural prod = x * y;
    BigNatural q;
    if (round_up)
        mpz_cdiv_q_2exp(q.get_mpz_t(), prod.get_mpz_t(), bits);
    else
        mpz_fdiv_q_2exp(q.get_mpz_t(), prod.get_mpz_t(), bits);
    return q;
}

}  // namespace

Enclosure pow_enclosure(const Rational& base, const BigNatural& exponent, unsigned precision_bits)
{
    if (base < 0 || base > 1) throw ParameterError("pow_enclosure: base must lie in [0,1]");
    if (exponent < 0) throw ParameterError("pow_enclosure: negative exponent");
    if (exponent == 0) return {Rational(1), Rational(1)};

    BigNatural one = BigNatural(1) << precision_bits;
    BigNatural scaled_num = base.get_num() << precision_bits;
    BigNatural low_base, high_base;
    mpz_fdiv_q(low_base.get_mpz_t(), scaled_num.get_mpz_t(), base.get_den_mpz_t());
    mpz_cdiv_q(high_base.get_mpz_t(), scaled_num.get_mpz_t(), base.get_den_mpz_t());

    BigNatural low = one, high = one;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        low = scaled_mul(low, low, precision_bits, false);
        high = scaled_mul(high, high, precision_bits, true);
        if (mpz_tstbit(exponent.get_mpz_t(), i)) {
            low = scaled_mul(low, low_base, precision_bits, false);
            high = scaled_mul(high, high_base, precision_bits, true);
        }
    }
    if (high > one) high = one;
    Rational lo(low, one), hi(high, one);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace automata
