#pragma once

#include <cstdint>
#include <vector>

namespace elfkit {

// Bit string x = (x_1, ..., x_n); element 0 holds x_1. Each entry is 0 or 1.
using BitString = std::vector<std::uint8_t>;

// Canonical form p^u (qp)^k q^v of a word over the two involutions p, q.
// The form is irreducible: it contains no pp or qq substring.
struct ReducedWord {
    int u = 0;  // leading p present
    int k = 0;  // number of qp blocks
    int v = 0;  // trailing q present

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

// Maps x to the word r^{x_n} ... p^{x_2} q^{x_1} (letter q at odd positions,
// p at even positions) and cancels adjacent equal letters until irreducible.
// A single left-to-right pass with a stack; the result is independent of
// cancellation order.
ReducedWord reduce_word(const BitString& x);

// Same reduction on a packed string: bit i of `bits` holds x_{i+1}, n <= 64.
ReducedWord reduce_word_bits(std::uint64_t bits, int n);

// The harmonic index l = k + v of the class containing x.
int xi_class(const BitString& x);
int xi_class_bits(std::uint64_t bits, int n);

// Binomial coefficient; 0 outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

// Number of n-bit strings whose word reduces to p^u (qp)^k q^v:
//   n = 2m:   C(2m-1, m-1-k)      (independent of u, v)
//   n = 2m+1: C(2m, m-u-k)
// Returns 0 outside the nonempty range instead of erroring, so sums over
// k can run unguarded.
std::uint64_t theta_cardinality(int n, int u, int k, int v);

// Number of alpha-bit strings with harmonic index l:
//   alpha = 2m:   2 C(2m-1, m-1) for l = 0, 2 C(2m, m-l) for l >= 1
//   alpha = 2m+1: C(2m+1, m) for l = 0, C(2m+2, m-l+1) for l >= 1
std::uint64_t xi_cardinality(int alpha, int l);

// Brute-force enumeration of the class (u, k, v) over all 2^n strings.
// Guarded at n <= 24.
std::vector<BitString> enumerate_theta(int n, int u, int k, int v);

// Checks xi_class(a . 1 . reverse(c)) == xi_class(c . 1 . reverse(a)) for
// equal-length a, c. Always true; exposed so the property can be scanned.
bool reversal_closure_check(const BitString& a, const BitString& c);

}  // namespace elfkit
