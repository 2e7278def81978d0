#include "quartets/numtheory.hpp"

#include <cmath>
#include <stdexcept>

namespace quartets {

std::vector<int64_t> sieve_primes(int64_t limit) {
    std::vector<int64_t> primes;
    if (limit < 2) return primes;

    std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
    for (int64_t p = 2; p * p <= limit; ++p) {
        if (composite[p]) continue;
        for (int64_t m = p * p; m <= limit; m += p) composite[m] = true;
    }
    for (int64_t p = 2; p <= limit; ++p) {
        if (!composite[p]) primes.push_back(p);
    }
    return primes;
}

namespace {

// Shared prime table for trial division. Covers n <= kTableLimit^2; built
// once on first use and immutable afterwards.
constexpr int64_t kTableLimit = 1'500'000;

const std::vector<int64_t>& small_primes() {
    static const std::vector<int64_t> primes = sieve_primes(kTableLimit);
    return primes;
}

}  // namespace

Factorization factorize(int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");

    Factorization factors;
    int64_t rest = n;
    for (int64_t p : small_primes()) {
        if (p * p > rest) break;
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factors.push_back({p, e});
    }
    if (rest > 1 && rest > kTableLimit * kTableLimit) {
        // Past the table's square coverage: continue with odd candidates.
        for (int64_t c = kTableLimit + 1; c <= rest / c; c += 2) {
            if (rest % c != 0) continue;
            int e = 0;
            while (rest % c == 0) {
                rest /= c;
                ++e;
            }
            factors.push_back({c, e});
        }
    }
    if (rest > 1) factors.push_back({rest, 1});
    return factors;
}

IndexWeight fourth_free_decompose(int64_t n) {
    if (n < 1) throw std::invalid_argument("fourth_free_decompose: n must be >= 1");

    int64_t q = 1;
    int64_t gamma = 1;
    for (const auto& [p, e] : factorize(n)) {
        for (int i = 0; i < e / 4; ++i) gamma *= p;
        for (int i = 0; i < e % 4; ++i) q *= p;
    }
    return {q, gamma};
}

bool is_two_square_representable(int64_t n) {
    if (n < 1) throw std::invalid_argument("is_two_square_representable: n must be >= 1");

    for (const auto& [p, e] : factorize(n)) {
        if (p % 4 == 3 && e % 2 != 0) return false;
    }
    return true;
}

int64_t isqrt64(int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt64: n must be >= 0");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(n)));
    if (r < 0) r = 0;
    auto sq = [](int64_t x) { return static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(x); };
    while (r > 0 && sq(r) > static_cast<unsigned __int128>(n)) --r;
    while (sq(r + 1) <= static_cast<unsigned __int128>(n)) ++r;
    return r;
}

bool is_perfect_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = isqrt64(n);
    return r * r == n;
}

std::vector<TwoSquareRep> two_square_reps(int64_t n) {
    if (n < 1) throw std::invalid_argument("two_square_reps: n must be >= 1");

    // a <= b forces a^2 <= n/2; scan a and test the complement for squareness.
    std::vector<TwoSquareRep> reps;
    int64_t a_max = isqrt64(n / 2);
    for (int64_t a = 0; a <= a_max; ++a) {
        int64_t rest = n - a * a;
        int64_t b = isqrt64(rest);
        if (b * b == rest) reps.push_back({a, b});
    }
    return reps;
}

int64_t two_square_count_signed(int64_t n) {
    if (n < 1) throw std::invalid_argument("two_square_count_signed: n must be >= 1");

    Factorization factors = factorize(n);

    // Walk all divisors from the factorization, tallying residues mod 4.
    int64_t d1 = 0;
    int64_t d3 = 0;
    std::vector<int64_t> divisors{1};
    for (const auto& [p, e] : factors) {
        size_t count = divisors.size();
        int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pk);
        }
    }
    for (int64_t d : divisors) {
        switch (d % 4) {
            case 1: ++d1; break;
            case 3: ++d3; break;
            default: break;
        }
    }
    return 4 * (d1 - d3);
}

}  // namespace quartets
