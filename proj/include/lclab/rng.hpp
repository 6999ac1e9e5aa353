#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace lclab {

/// Deterministic random source. All sampling in the library flows through an
/// explicitly passed Rng so that every instance, attack and report is
/// reproducible from its seed. mt19937_64 has a portable, fully specified
/// output sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t u64() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1. Rejection sampling on the
    /// top block keeps the distribution exactly uniform.
    std::uint64_t below_u64(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        for (;;) {
            std::uint64_t v = engine_();
            if (v < limit) return v % bound;
        }
    }

    /// Uniform mpz in [0, bound), bound >= 1.
    mpz_class below(const mpz_class& bound) {
        if (bound <= 1) return 0;
        const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        const std::size_t words = (bits + 63) / 64;
        mpz_class v;
        for (;;) {
            v = 0;
            for (std::size_t i = 0; i < words; ++i) {
                mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 64);
                v += mpz_class{static_cast<unsigned long>(engine_() & 0xffffffffULL)} +
                     (mpz_class{static_cast<unsigned long>(engine_() >> 32)} << 32);
            }
            mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
            if (v < bound) return v;
        }
    }

    bool coin() { return (engine_() & 1ULL) != 0; }

    /// Derive an independent child generator; used to hand each worker or
    /// sub-task its own deterministic stream.
    Rng fork() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

private:
    std::mt19937_64 engine_;
};

} // namespace lclab
