#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace ncprob {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar, always reduced, denominator > 0.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat &r) { return numerator(r); }
inline Int rat_den(const Rat &r) { return denominator(r); }

// Renders "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat &r)
{
    if (rat_den(r) == 1)
        return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Accepts "p" or "p/q" with optional sign.
inline Rat rat_from_string(const std::string &s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

inline Int binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Int factorial(unsigned n)
{
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline Int double_factorial_odd(unsigned n)
{
    // (2k-1)!! for n = 2k-1; returns 1 for n <= 0.
    Int r = 1;
    for (unsigned i = n; i > 1; i -= 2)
        r *= i;
    return r;
}

inline Int catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

} // namespace ncprob
