#pragma once

// Exact arithmetic in prime fields Z_p (multiprecision p) and extension
// fields F = Z_p[t]/<f(t)>, plus a word-size prime field used where raw
// throughput matters. Both field types present the same interface:
//
//   using Element;
//   Element zero()/one(); bool is_zero(e)/eq(a,b);
//   add/sub/neg/mul; inv(a) -> std::optional<Element>;
//   submul_inplace(acc, m, x)          // acc -= m*x
//   Dot dot()                          // fused dot-product accumulator
//   sample_uniform(rng); element_from_index(i); size();
//   elem_to_json / elem_from_json
//
// Contexts are immutable after construction and safe for concurrent reads.
// RNG state is caller-owned and passed explicitly.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "lclab/errors.hpp"
#include "lclab/jsonio.hpp"
#include "lclab/rng.hpp"

namespace lclab::ff {

using Integer = mpz_class;

/// Miller-Rabin probable-prime test with `rounds` random bases.
bool is_probable_prime(const Integer& n, Rng& rng, int rounds = 64);

/// Smallest probable prime strictly greater than `lower`.
Integer next_probable_prime_above(const Integer& lower, Rng& rng, int rounds = 64);

/// Odd multiprecision prime modulus.
struct PrimeCtx {
    Integer p;
    Integer half; // (p-1)/2

    /// Validates oddness and probable primality (64 Miller-Rabin rounds).
    static PrimeCtx make(Integer p, Rng& rng, int rounds = 64);

    /// Caller guarantees p is an odd prime; skips the primality test.
    static PrimeCtx make_unchecked(Integer p);
};

/// Unique integer in [-(p-1)/2, (p-1)/2] congruent to r mod p. Requires 0 <= r < p.
Integer centered_lift(const PrimeCtx& ctx, const Integer& r);

/// Element of F = Z_p[t]/<f>: coefficient vector of length d,
/// least-significant coefficient first, every entry fully reduced mod p.
struct FieldElement {
    std::vector<Integer> c;
    bool operator==(const FieldElement& o) const { return c == o.c; }
};

/// Irreducibility over Z_p via gcd(f, t^{p^i} - t) = 1 for all i <= d/2.
/// f must be monic of degree >= 1 with coefficients in [0, p).
bool is_irreducible(const std::vector<Integer>& f, const Integer& p);

class ExtCtx {
public:
    using Element = FieldElement;

    /// f: monic, degree d >= 1, coefficients reduced mod prime.p,
    /// irreducible over Z_p (not re-checked here; see `make`).
    ExtCtx(PrimeCtx prime, std::vector<Integer> f);

    /// make_ext_ctx: finds f by rejection sampling over random monic
    /// polynomials of degree d, certified by `is_irreducible`.
    /// Throws EvenPrimeError if p = 2, NotPrimeError if p is composite.
    static ExtCtx make(const Integer& p, std::size_t d, Rng& rng, int mr_rounds = 64);

    const PrimeCtx& prime() const { return prime_; }
    const Integer& p() const { return prime_.p; }
    const std::vector<Integer>& f() const { return f_; }
    std::size_t degree() const { return d_; }
    const Integer& size() const { return size_; } // p^d

    Element zero() const;
    Element one() const;
    /// The class of t (for d = 1 this is the residue -f[0]).
    Element gen_t() const;
    Element from_residue(Integer r) const; // constant polynomial

    bool is_zero(const Element& a) const;
    bool is_one(const Element& a) const;
    bool eq(const Element& a, const Element& b) const { return a.c == b.c; }

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    /// Multiplicative inverse via extended gcd with f.
    /// Throws DivisionByZeroError for inv(0).
    Element inv(const Element& a) const;

    /// acc -= m * x (exact, in place)
    void submul_inplace(Element& acc, const Element& m, const Element& x) const;

    /// Fused multiply-accumulate over the unreduced convolution buffer;
    /// one polynomial reduction and one round of coefficient mods per take().
    class Dot {
    public:
        explicit Dot(const ExtCtx& ctx);
        void addmul(const Element& a, const Element& b);
        Element take(); // result; resets the accumulator
    private:
        const ExtCtx* ctx_;
        std::vector<Integer> wide_;
    };
    Dot dot() const { return Dot(*this); }

    Element sample_uniform(Rng& rng) const;
    /// Indexing of field elements by base-p digits; idx in [0, p^d).
    Element element_from_index(const Integer& idx) const;

    json elem_to_json(const Element& a) const;
    Element elem_from_json(const json& j) const;

    json ctx_to_json() const;
    static ExtCtx ctx_from_json(const json& j);

    /// Reduce an unreduced coefficient buffer of length <= 2d-1 in place,
    /// leaving d reduced coefficients. Internal, exposed for the dyadic
    /// Laurent reduction in lkrep.
    void reduce_wide(std::vector<Integer>& wide, Element& out) const;

private:
    PrimeCtx prime_;
    std::vector<Integer> f_;
    std::size_t d_;
    Integer size_;
    // red_[j] = coefficients of t^{d+j} mod f, j = 0..d-2
    std::vector<std::vector<Integer>> red_;
};

/// Word-size prime field (p odd prime, p < 2^62). Same interface as ExtCtx
/// with d = 1; used for the matrix-group attack benchmarks where field
/// operations must be a handful of nanoseconds.
class Fp64Ctx {
public:
    using Element = std::uint64_t;

    explicit Fp64Ctx(std::uint64_t p); // caller-checked primality
    static Fp64Ctx make(std::uint64_t p, Rng& rng); // validates primality

    std::uint64_t modulus() const { return p_; }
    Integer size() const { return Integer(static_cast<unsigned long>(p_)); }
    std::size_t degree() const { return 1; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool eq(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        std::uint64_t s = a + b;
        if (s >= p_ || s < a) s -= p_;
        return s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Element inv(Element a) const;

    void submul_inplace(Element& acc, Element m, Element x) const { acc = sub(acc, mul(m, x)); }

    class Dot {
    public:
        explicit Dot(const Fp64Ctx& ctx) : ctx_(&ctx), acc_(0) {}
        void addmul(Element a, Element b) {
            acc_ += static_cast<unsigned __int128>(a) * b;
            if ((acc_ >> 126) != 0) acc_ %= ctx_->p_;
        }
        Element take() {
            Element r = static_cast<Element>(acc_ % ctx_->p_);
            acc_ = 0;
            return r;
        }
    private:
        const Fp64Ctx* ctx_;
        unsigned __int128 acc_;
    };
    Dot dot() const { return Dot(*this); }

    Element sample_uniform(Rng& rng) const { return rng.below_u64(p_); }
    Element element_from_index(const Integer& idx) const {
        return static_cast<Element>(mpz_get_ui(idx.get_mpz_t()));
    }

    json elem_to_json(Element a) const { return json::array({to_hex(Integer(static_cast<unsigned long>(a)))}); }
    Element elem_from_json(const json& j) const;

    json ctx_to_json() const;
    static Fp64Ctx ctx_from_json(const json& j);

private:
    std::uint64_t p_;
};

} // namespace lclab::ff
