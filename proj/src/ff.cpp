#include "lclab/ff.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace lclab::ff {

namespace {

// ---------------------------------------------------------------------------
// Dense polynomial helpers over Z_p. Coefficient vectors are least-significant
// first and fully reduced; the zero polynomial is the empty vector.

using Poly = std::vector<Integer>;

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly psub(const Poly& a, const Poly& b, const Integer& p) {
    Poly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        Integer v = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        r[i] = v;
    }
    ptrim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b, const Integer& p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    for (auto& c : r) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    ptrim(r);
    return r;
}

Integer inv_mod(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DivisionByZeroError{};
    return r;
}

// a mod b, b nonzero (not necessarily monic)
Poly pmod(Poly a, const Poly& b, const Integer& p) {
    ptrim(a);
    const int db = pdeg(b);
    assert(db >= 0);
    const Integer lead_inv = inv_mod(b.back(), p);
    while (pdeg(a) >= db) {
        const int shift = pdeg(a) - db;
        Integer q = a.back() * lead_inv;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        for (int i = 0; i <= db; ++i) {
            Integer v = a[static_cast<std::size_t>(i + shift)] - q * b[static_cast<std::size_t>(i)];
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            a[static_cast<std::size_t>(i + shift)] = v;
        }
        ptrim(a);
    }
    return a;
}

Poly pgcd(Poly a, Poly b, const Integer& p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const Integer s = inv_mod(a.back(), p);
        for (auto& c : a) {
            c *= s;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        }
    }
    return a;
}

// x^p mod f for x the class of t; square-and-multiply over Z_p[t]/<f>.
Poly tpow_p(const Poly& f, const Integer& p) {
    Poly acc{Integer(1)};
    const std::size_t bits = mpz_sizeinbase(p.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = pmod(pmul(acc, acc, p), f, p);
        if (mpz_tstbit(p.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            acc.insert(acc.begin(), Integer(0)); // multiply by t
            acc = pmod(std::move(acc), f, p);
        }
    }
    return acc;
}

// g(h) mod f via Horner; used to iterate the Frobenius map: for polynomials
// over Z_p, g(t)^p = g(t^p), so t^{p^i} = x_{i-1}(x_1) with x_1 = t^p mod f.
Poly pcompose_mod(const Poly& g, const Poly& h, const Poly& f, const Integer& p) {
    Poly acc;
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = pmod(pmul(acc, h, p), f, p);
        if (g[i] != 0) {
            if (acc.empty()) acc.resize(1, Integer(0));
            Integer v = acc[0] + g[i];
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
            acc[0] = v;
            ptrim(acc);
        }
    }
    return acc;
}

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> table = [] {
        std::vector<unsigned long> primes;
        std::array<bool, 8192> sieve{};
        for (unsigned long i = 2; i < sieve.size(); ++i) {
            if (sieve[i]) continue;
            primes.push_back(i);
            for (unsigned long j = i * i; j < sieve.size(); j += i) sieve[j] = true;
        }
        return primes;
    }();
    return table;
}

} // namespace

bool is_probable_prime(const Integer& n, Rng& rng, int rounds) {
    if (n < 2) return false;
    for (unsigned long q : small_primes()) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    // n is odd and > small_primes.back() here
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    const Integer n1 = n - 1;
    const Integer n3 = n - 3;
    Integer a, x;
    for (int round = 0; round < rounds; ++round) {
        a = rng.below(n3) + 2; // uniform in [2, n-2]
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < s; ++i) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Integer next_probable_prime_above(const Integer& lower, Rng& rng, int rounds) {
    Integer n = lower + 1;
    if (n <= 2) return 2;
    if (mpz_even_p(n.get_mpz_t())) n += 1;
    for (;; n += 2) {
        bool composite = false;
        for (unsigned long q : small_primes()) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
                composite = (n != q);
                break;
            }
        }
        if (composite) continue;
        if (is_probable_prime(n, rng, rounds)) return n;
    }
}

PrimeCtx PrimeCtx::make(Integer p, Rng& rng, int rounds) {
    if (p == 2) throw EvenPrimeError{};
    if (!is_probable_prime(p, rng, rounds))
        throw NotPrimeError("p = " + p.get_str() + " failed the probable-prime test");
    return make_unchecked(std::move(p));
}

PrimeCtx PrimeCtx::make_unchecked(Integer p) {
    PrimeCtx ctx;
    ctx.half = (p - 1) / 2;
    ctx.p = std::move(p);
    return ctx;
}

Integer centered_lift(const PrimeCtx& ctx, const Integer& r) {
    assert(r >= 0 && r < ctx.p);
    return r > ctx.half ? Integer(r - ctx.p) : r;
}

bool is_irreducible(const std::vector<Integer>& f, const Integer& p) {
    const int d = pdeg(f);
    if (d < 1 || f.back() != 1) throw Error("is_irreducible expects a monic polynomial of degree >= 1");
    if (d == 1) return true;
    const Poly xp = tpow_p(f, p); // t^p mod f
    Poly xi = xp;
    Poly t_poly{Integer(0), Integer(1)};
    for (int i = 1; i <= d / 2; ++i) {
        if (i > 1) xi = pcompose_mod(xi, xp, f, p);
        Poly g = pgcd(psub(xi, t_poly, p), f, p);
        if (pdeg(g) != 0) return false; // nontrivial factor (or xi == t)
    }
    return true;
}

// ---------------------------------------------------------------------------
// ExtCtx

ExtCtx::ExtCtx(PrimeCtx prime, std::vector<Integer> f) : prime_(std::move(prime)), f_(std::move(f)) {
    if (f_.size() < 2) throw Error("extension modulus must have degree >= 1");
    for (auto& c : f_) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), prime_.p.get_mpz_t());
    if (f_.back() != 1) throw Error("extension modulus must be monic");
    d_ = f_.size() - 1;
    mpz_pow_ui(size_.get_mpz_t(), prime_.p.get_mpz_t(), static_cast<unsigned long>(d_));
    // Row j holds t^{d+j} mod f. Row 0 is -f mod t^d; each next row is the
    // previous shifted by t and reduced with row 0.
    if (d_ >= 2) {
        red_.resize(d_ - 1);
        std::vector<Integer> row(d_);
        for (std::size_t i = 0; i < d_; ++i) {
            Integer v = -f_[i];
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), prime_.p.get_mpz_t());
            row[i] = v;
        }
        red_[0] = row;
        for (std::size_t j = 1; j + 1 < d_; ++j) {
            std::vector<Integer> next(d_, Integer(0));
            const Integer top = row[d_ - 1];
            for (std::size_t i = d_ - 1; i > 0; --i) next[i] = row[i - 1];
            if (top != 0) {
                for (std::size_t i = 0; i < d_; ++i) {
                    Integer v = next[i] + top * red_[0][i];
                    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), prime_.p.get_mpz_t());
                    next[i] = v;
                }
            }
            red_[j] = next;
            row = red_[j];
        }
    }
}

ExtCtx ExtCtx::make(const Integer& p, std::size_t d, Rng& rng, int mr_rounds) {
    if (p == 2) throw EvenPrimeError{};
    if (!is_probable_prime(p, rng, mr_rounds))
        throw NotPrimeError("p = " + p.get_str() + " failed the probable-prime test");
    if (d < 1) throw Error("extension degree must be >= 1");
    for (;;) {
        std::vector<Integer> f(d + 1);
        for (std::size_t i = 0; i < d; ++i) f[i] = rng.below(p);
        f[d] = 1;
        if (is_irreducible(f, p)) return ExtCtx(PrimeCtx::make_unchecked(p), std::move(f));
    }
}

ExtCtx::Element ExtCtx::zero() const { return Element{std::vector<Integer>(d_, Integer(0))}; }

ExtCtx::Element ExtCtx::one() const {
    Element e = zero();
    e.c[0] = 1;
    return e;
}

ExtCtx::Element ExtCtx::gen_t() const {
    Element e = zero();
    if (d_ == 1) {
        Integer v = -f_[0];
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), prime_.p.get_mpz_t());
        e.c[0] = v;
    } else {
        e.c[1] = 1;
    }
    return e;
}

ExtCtx::Element ExtCtx::from_residue(Integer r) const {
    Element e = zero();
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), prime_.p.get_mpz_t());
    e.c[0] = std::move(r);
    return e;
}

bool ExtCtx::is_zero(const Element& a) const {
    for (const auto& c : a.c)
        if (c != 0) return false;
    return true;
}

bool ExtCtx::is_one(const Element& a) const {
    if (a.c[0] != 1) return false;
    for (std::size_t i = 1; i < d_; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

ExtCtx::Element ExtCtx::add(const Element& a, const Element& b) const {
    Element r = a;
    for (std::size_t i = 0; i < d_; ++i) {
        r.c[i] += b.c[i];
        if (r.c[i] >= prime_.p) r.c[i] -= prime_.p;
    }
    return r;
}

ExtCtx::Element ExtCtx::sub(const Element& a, const Element& b) const {
    Element r = a;
    for (std::size_t i = 0; i < d_; ++i) {
        r.c[i] -= b.c[i];
        if (r.c[i] < 0) r.c[i] += prime_.p;
    }
    return r;
}

ExtCtx::Element ExtCtx::neg(const Element& a) const {
    Element r = a;
    for (std::size_t i = 0; i < d_; ++i)
        if (r.c[i] != 0) r.c[i] = prime_.p - r.c[i];
    return r;
}

void ExtCtx::reduce_wide(std::vector<Integer>& wide, Element& out) const {
    // Fold coefficients of t^{d+j} down with the precomputed rows, then one
    // mod per output coefficient. Reducing the high part first keeps the
    // row products at single-modulus size.
    for (std::size_t k = d_; k < wide.size(); ++k)
        mpz_mod(wide[k].get_mpz_t(), wide[k].get_mpz_t(), prime_.p.get_mpz_t());
    for (std::size_t k = wide.size(); k-- > d_;) {
        if (wide[k] == 0) continue;
        const auto& row = red_[k - d_];
        for (std::size_t i = 0; i < d_; ++i)
            mpz_addmul(wide[i].get_mpz_t(), wide[k].get_mpz_t(), row[i].get_mpz_t());
    }
    out.c.resize(d_);
    for (std::size_t i = 0; i < d_; ++i) {
        mpz_mod(wide[i].get_mpz_t(), wide[i].get_mpz_t(), prime_.p.get_mpz_t());
        out.c[i] = wide[i];
    }
}

namespace {
thread_local std::vector<Integer> tl_wide;
void wide_clear(std::vector<Integer>& w, std::size_t n) {
    w.resize(n);
    for (auto& v : w) v = 0;
}
} // namespace

ExtCtx::Element ExtCtx::mul(const Element& a, const Element& b) const {
    auto& wide = tl_wide;
    wide_clear(wide, 2 * d_ - 1);
    for (std::size_t i = 0; i < d_; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < d_; ++j)
            mpz_addmul(wide[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    Element out;
    reduce_wide(wide, out);
    return out;
}

ExtCtx::Element ExtCtx::inv(const Element& a) const {
    if (is_zero(a)) throw DivisionByZeroError{};
    // extended Euclid: r0 = f, r1 = a; maintain s only on the a-side.
    Poly r0 = f_, r1 = a.c;
    ptrim(r1);
    Poly s0, s1{Integer(1)};
    const Integer& p = prime_.p;
    while (!r1.empty() && pdeg(r1) > 0) {
        // quotient of r0 by r1
        Poly q;
        {
            Poly rem = r0;
            const int db = pdeg(r1);
            const Integer lead_inv = inv_mod(r1.back(), p);
            q.assign(static_cast<std::size_t>(std::max(0, pdeg(rem) - db + 1)), Integer(0));
            while (pdeg(rem) >= db) {
                const int shift = pdeg(rem) - db;
                Integer qc = rem.back() * lead_inv;
                mpz_mod(qc.get_mpz_t(), qc.get_mpz_t(), p.get_mpz_t());
                q[static_cast<std::size_t>(shift)] = qc;
                for (int i = 0; i <= db; ++i) {
                    Integer v = rem[static_cast<std::size_t>(i + shift)] - qc * r1[static_cast<std::size_t>(i)];
                    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
                    rem[static_cast<std::size_t>(i + shift)] = v;
                }
                ptrim(rem);
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
        }
        Poly s2 = psub(s0, pmul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) {
        // gcd(a, f) = r0; for irreducible f this means a was a unit multiple
        // of f, impossible for degree < d unless a = 0 (handled above).
        throw DivisionByZeroError{};
    }
    // r1 is a nonzero constant: inverse = s1 / r1
    const Integer scale = inv_mod(r1[0], p);
    Element out = zero();
    for (std::size_t i = 0; i < s1.size(); ++i) {
        Integer v = s1[i] * scale;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        out.c[i] = v;
    }
    return out;
}

void ExtCtx::submul_inplace(Element& acc, const Element& m, const Element& x) const {
    auto& wide = tl_wide;
    wide_clear(wide, 2 * d_ - 1);
    for (std::size_t i = 0; i < d_; ++i) {
        if (m.c[i] == 0) continue;
        for (std::size_t j = 0; j < d_; ++j)
            mpz_addmul(wide[i + j].get_mpz_t(), m.c[i].get_mpz_t(), x.c[j].get_mpz_t());
    }
    Element prod;
    reduce_wide(wide, prod);
    for (std::size_t i = 0; i < d_; ++i) {
        acc.c[i] -= prod.c[i];
        if (acc.c[i] < 0) acc.c[i] += prime_.p;
    }
}

ExtCtx::Dot::Dot(const ExtCtx& ctx) : ctx_(&ctx), wide_(2 * ctx.d_ - 1, Integer(0)) {}

void ExtCtx::Dot::addmul(const Element& a, const Element& b) {
    const std::size_t d = ctx_->d_;
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            mpz_addmul(wide_[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
}

ExtCtx::Element ExtCtx::Dot::take() {
    Element out;
    ctx_->reduce_wide(wide_, out);
    for (auto& v : wide_) v = 0;
    return out;
}

ExtCtx::Element ExtCtx::sample_uniform(Rng& rng) const {
    Element e = zero();
    for (std::size_t i = 0; i < d_; ++i) e.c[i] = rng.below(prime_.p);
    return e;
}

ExtCtx::Element ExtCtx::element_from_index(const Integer& idx) const {
    Element e = zero();
    Integer rest = idx, digit;
    for (std::size_t i = 0; i < d_ && rest != 0; ++i) {
        mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), prime_.p.get_mpz_t());
        e.c[i] = digit;
    }
    return e;
}

json ExtCtx::elem_to_json(const Element& a) const {
    json arr = json::array();
    for (const auto& c : a.c) arr.push_back(to_hex(c));
    return arr;
}

ExtCtx::Element ExtCtx::elem_from_json(const json& j) const {
    if (!j.is_array() || j.size() != d_)
        throw ParseError("field element must be an array of " + std::to_string(d_) + " hex residues");
    Element e = zero();
    for (std::size_t i = 0; i < d_; ++i) {
        Integer v = from_hex(j[i].get<std::string>());
        if (v < 0 || v >= prime_.p) throw ParseError("residue out of range");
        e.c[i] = v;
    }
    return e;
}

json ExtCtx::ctx_to_json() const {
    json f = json::array();
    for (const auto& c : f_) f.push_back(to_hex(c));
    return json{{"p", to_hex(prime_.p)}, {"f", f}};
}

ExtCtx ExtCtx::ctx_from_json(const json& j) {
    Integer p = from_hex(require_key(j, "p").get<std::string>());
    const json& fj = require_key(j, "f");
    if (!fj.is_array() || fj.size() < 2) throw ParseError("field modulus must list d+1 coefficients");
    std::vector<Integer> f;
    f.reserve(fj.size());
    for (const auto& c : fj) f.push_back(from_hex(c.get<std::string>()));
    return ExtCtx(PrimeCtx::make_unchecked(std::move(p)), std::move(f));
}

// ---------------------------------------------------------------------------
// Fp64Ctx

Fp64Ctx::Fp64Ctx(std::uint64_t p) : p_(p) {
    if (p < 3 || (p & 1) == 0) throw Error("word-size modulus must be an odd prime");
    if (p >= (1ULL << 62)) throw Error("word-size modulus must be < 2^62");
}

Fp64Ctx Fp64Ctx::make(std::uint64_t p, Rng& rng) {
    if (p == 2) throw EvenPrimeError{};
    if (!is_probable_prime(Integer(static_cast<unsigned long>(p)), rng))
        throw NotPrimeError("p = " + std::to_string(p) + " failed the probable-prime test");
    return Fp64Ctx(p);
}

Fp64Ctx::Element Fp64Ctx::inv(Element a) const {
    if (a == 0) throw DivisionByZeroError{};
    // a^(p-2) mod p
    Element result = 1, base = a;
    std::uint64_t e = p_ - 2;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Fp64Ctx::Element Fp64Ctx::elem_from_json(const json& j) const {
    if (!j.is_array() || j.size() != 1) throw ParseError("field element must be an array of 1 hex residue");
    Integer v = from_hex(j[0].get<std::string>());
    if (v < 0 || v >= Integer(static_cast<unsigned long>(p_))) throw ParseError("residue out of range");
    return static_cast<Element>(mpz_get_ui(v.get_mpz_t()));
}

json Fp64Ctx::ctx_to_json() const {
    // monic linear modulus t: F_p[t]/<t> = F_p
    return json{{"p", to_hex(Integer(static_cast<unsigned long>(p_)))}, {"f", json::array({"0x0", "0x1"})}};
}

Fp64Ctx Fp64Ctx::ctx_from_json(const json& j) {
    Integer p = from_hex(require_key(j, "p").get<std::string>());
    if (!p.fits_ulong_p()) throw ParseError("modulus too large for the word-size field");
    return Fp64Ctx(mpz_get_ui(p.get_mpz_t()));
}

} // namespace lclab::ff
