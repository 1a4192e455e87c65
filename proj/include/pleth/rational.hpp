#ifndef PLETH_RATIONAL_HPP
#define PLETH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pleth {

// Exact scalars. BigRational values are kept canonical (lowest terms,
// positive denominator) by GMP; construct through make_rational when
// building from a raw numerator/denominator pair.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& q) {
    return q.get_den() == 1;
}

// Numerator of an integral rational; throws if a denominator survived.
inline BigInt integer_part(const BigRational& q, const char* context) {
    if (!is_integer(q))
        throw std::runtime_error(std::string(context) + ": non-integral value " + q.get_str());
    return q.get_num();
}

inline std::int64_t to_int64(const BigInt& z, const char* context) {
    if (!z.fits_slong_p())
        throw std::overflow_error(std::string(context) + ": value does not fit in 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace pleth

#endif
