#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cmfnip {

/// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
/// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational & r)
{
    return r.get_den() == 1;
}

inline mpz_class floor_of(const Rational & r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline mpz_class ceil_of(const Rational & r)
{
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// Always "p/q", including integers ("3/1"), so serialized values have a
/// single shape.
inline std::string to_string(const Rational & r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(const std::string & text);

}
