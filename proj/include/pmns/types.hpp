#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pmns {

// Arbitrary-precision integer. Canonical form (no leading zero limbs,
// zero is non-negative) is maintained by GMP.
using Int = mpz_class;

using IntVec = std::vector<Int>;

inline std::size_t bit_length(const Int& x) {
    if (x == 0) return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Int abs(const Int& x) { return ::abs(x); }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Nearest-integer division, ties rounded half away from zero. Fixed tie
// rule keeps Babai output bit-exact across platforms.
Int round_div_half_away(const Int& num, const Int& den);

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotMonic : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadExponents : Error { using Error::Error; };
struct BadConstant : Error { using Error::Error; };
struct BadGamma : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NoUsableRow : Error { using Error::Error; };
struct CtxMismatch : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct UnknownExample : Error { using Error::Error; };

}  // namespace pmns
