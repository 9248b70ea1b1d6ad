#pragma once

#include <cstdlib>
#include <random>

#include "witt/germ.hpp"
#include "witt/rational.hpp"

namespace witt {

// Reproducible "generic" rationals: numerators/denominators bounded by 50,
// seeded from GERM_SEED when set.
class RationalSampler {
  public:
    static uint64_t default_seed() {
        if (const char* s = std::getenv("GERM_SEED")) return std::strtoull(s, nullptr, 10);
        return 0x5eed2024ull;
    }
    explicit RationalSampler(uint64_t seed = default_seed()) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    Rational rational(long max_num = 50, long max_den = 50) {
        long num = integer(-max_num, max_num);
        long den = integer(1, max_den);
        return Rational(num, den);
    }
    Rational nonzero_rational(long max_num = 50, long max_den = 50) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }
    // a coset representative in (0,1), never integral
    Rational generic_coset() {
        for (;;) {
            long den = integer(2, 50);
            long num = integer(1, den - 1);
            Rational r(num, den);
            if (r != 0) return r;
        }
    }
    // a projective point with small coordinates, infinity excluded
    std::pair<Rational, Rational> finite_xi() {
        return {Rational(1), rational(20, 20)};
    }

    // degree triple off frak-z, its sigma image and both tau images
    TripleSignature generic_off_z() {
        for (;;) {
            TripleSignature t{rational(), rational(), rational(), {}, {}};
            TripleSignature ts{t.d2, t.d1, t.g, {}, {}};
            TripleSignature tt{t.d1, t.d2, Rational(1) - t.g, {}, {}};
            TripleSignature tst{t.d2, t.d1, Rational(1) - t.g, {}, {}};
            if (!in_frak_z(t) && !in_frak_z(ts) && !in_frak_z(tt) && !in_frak_z(tst)) return t;
        }
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace witt
