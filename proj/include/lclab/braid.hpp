#pragma once

// Exact arithmetic in the braid group B_N, elements kept in left normal form
// (inf, p_1..p_l): the braid Delta^inf p_1 ... p_l with each p_i a
// permutation braid, the chain left-weighted, and no factor equal to the
// identity or to the half twist.
//
// Conventions (pinned by the unit tests, in particular by round trips against
// an independent free-group-automorphism oracle):
//  - permutations store 0-indexed image arrays; im[i] is where strand at
//    position i ends; braid concatenation composes left to right,
//    (a then b)[i] = b.im[a.im[i]];
//  - sigma_j corresponds to the transposition of positions j-1, j (0-indexed);
//  - the starting set S(p) is the descent set of im, the finishing set F(p)
//    is the descent set of the inverse image array; (p, q) is left-weighted
//    iff S(q) is contained in F(p).

#include <cstdint>
#include <utility>
#include <vector>

#include "lclab/errors.hpp"
#include "lclab/jsonio.hpp"
#include "lclab/rng.hpp"

namespace lclab::braid {

/// One-indexed generator with sign: (j, +1) = sigma_j, (j, -1) = sigma_j^{-1}.
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

struct Perm {
    std::vector<int> im; // 0-indexed images, a bijection on {0..N-1}

    int size() const { return static_cast<int>(im.size()); }
    bool operator==(const Perm& o) const { return im == o.im; }

    static Perm identity(int n);
    static Perm transposition(int n, int j); // swaps positions j, j+1 (0-indexed)
    static Perm half_twist(int n);           // i -> n-1-i

    bool is_identity() const;
    bool is_half_twist() const;
    Perm inverse() const;
    /// this then other (braid concatenation order)
    Perm then(const Perm& other) const;
    int inversions() const;
};

/// tau(p) = Delta^{-1} p Delta
Perm tau(const Perm& p);

struct Braid {
    int N = 2;
    long long inf = 0;
    std::vector<Perm> factors;

    bool operator==(const Braid& o) const {
        return N == o.N && inf == o.inf && factors == o.factors;
    }
    long long canonical_length() const { return static_cast<long long>(factors.size()); }
    bool is_trivial() const { return inf == 0 && factors.empty(); }
};

struct Interval {
    long long lo = 0, hi = 0;
};

Braid trivial(int N);
Braid delta_power(int N, long long k);

/// Left normal form of the product of Artin generators; the empty word gives
/// (0, ()). Throws IndexOutOfRangeError for letters outside [1, N-1].
Braid braid_from_word(int N, const Word& word);

Braid braid_mul(const Braid& a, const Braid& b);
Braid braid_inv(const Braid& a);
/// g^x = x^{-1} g x
Braid braid_conj(const Braid& g, const Braid& x);

/// Tightest interval [inf(x), inf(x) + l(x)] containing x.
Interval braid_interval(const Braid& x);

/// x = Delta^{2j} * rem with inf(rem) in {0,1} and the factors unchanged.
struct CentralDecomposition {
    long long j = 0;
    Braid rem;
};
CentralDecomposition central_decompose(const Braid& x);

/// Freely reduced word of length <= m over k symbols, letters i.i.d. uniform
/// before reduction. Symbols are reported with generator indices 1..k.
Word random_word(int k, int m, Rng& rng);

/// Validates the normal-form invariants; used by tests and selfcheck.
bool is_left_normal(const Braid& b);

/// Positive Artin word for a permutation braid (leftmost-descent expansion).
std::vector<int> perm_to_artin_word(const Perm& p);
/// The positive half-twist word sigma_1 (sigma_2 sigma_1) ... for B_N.
std::vector<int> delta_word(int N);

json braid_to_json(const Braid& b);
Braid braid_from_json(const json& j);
json word_to_json(const Word& w);
Word word_from_json(const json& j);

} // namespace lclab::braid
