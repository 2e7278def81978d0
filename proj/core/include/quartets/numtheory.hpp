#pragma once

#include <cstdint>
#include <vector>

namespace quartets {

struct PrimePower {
    int64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization, primes strictly increasing, exponents >= 1.
// The empty list is the factorization of 1.
using Factorization = std::vector<PrimePower>;

// Unique decomposition n = gamma^4 * q with q fourth-power-free, i.e. every
// prime exponent of q is in {1,2,3}. q is the index, gamma the weight.
struct IndexWeight {
    int64_t q;
    int64_t gamma;

    friend bool operator==(const IndexWeight&, const IndexWeight&) = default;
};

// a^2 + b^2 = n with 0 <= a <= b.
struct TwoSquareRep {
    int64_t a;
    int64_t b;

    friend bool operator==(const TwoSquareRep&, const TwoSquareRep&) = default;
};

// All primes <= limit, ascending. limit < 2 yields an empty list.
std::vector<int64_t> sieve_primes(int64_t limit);

// Trial division against a shared sieved prime table, extended by odd
// candidates when n exceeds the table's square coverage. Exact for any
// n >= 1 that fits in 64 bits; intended scale is n <= 2*d^2.
Factorization factorize(int64_t n);

// Largest-fourth-power split: gamma = prod p^(e/4), q = prod p^(e mod 4).
// Throws on n < 1.
IndexWeight fourth_free_decompose(int64_t n);

// Euler criterion: n is a sum of two squares iff every prime factor
// p = 3 (mod 4) occurs to an even power.
bool is_two_square_representable(int64_t n);

// All representations n = a^2 + b^2 with 0 <= a <= b, ascending in a.
// Empty exactly when the Euler criterion fails.
std::vector<TwoSquareRep> two_square_reps(int64_t n);

// Number of ordered signed pairs (a,b) in Z^2 with a^2 + b^2 = n, via the
// divisor identity 4*(d_1(n) - d_3(n)) where d_r counts divisors = r (mod 4).
// Serves as a cross-check on two_square_reps, never as its replacement.
int64_t two_square_count_signed(int64_t n);

// Floor of sqrt(n) for n >= 0.
int64_t isqrt64(int64_t n);

// True iff n is a perfect square (n >= 0).
bool is_perfect_square(int64_t n);

}  // namespace quartets
