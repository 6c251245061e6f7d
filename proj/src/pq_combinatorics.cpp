#include "elfkit/pq_combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace elfkit {

namespace {

// Letters are encoded as 0 = q, 1 = p. Position i (1-based) contributes a
// letter only when x_i = 1: q when i is odd, p when i is even. The word reads
// r_n ... r_1 left to right, so pushing positions 1..n builds it right to
// left; the stack top ends up as the leftmost letter.
struct LetterStack {
    std::array<std::uint8_t, 64> buf{};
    std::vector<std::uint8_t> spill;
    int top = 0;
    bool small = true;

    explicit LetterStack(int n) : small(n <= 64) {
        if (!small) spill.reserve(static_cast<std::size_t>(n));
    }

    void push_or_cancel(std::uint8_t letter) {
        if (small) {
            if (top > 0 && buf[static_cast<std::size_t>(top - 1)] == letter) {
                --top;
            } else {
                buf[static_cast<std::size_t>(top++)] = letter;
            }
        } else {
            if (!spill.empty() && spill.back() == letter) {
                spill.pop_back();
            } else {
                spill.push_back(letter);
            }
        }
    }

    int size() const { return small ? top : static_cast<int>(spill.size()); }
    std::uint8_t leftmost() const {
        return small ? buf[static_cast<std::size_t>(top - 1)] : spill.back();
    }
    std::uint8_t rightmost() const { return small ? buf[0] : spill.front(); }
};

ReducedWord parse_stack(const LetterStack& st) {
    const int len = st.size();
    if (len == 0) return {0, 0, 0};
    const int u = st.leftmost() == 1;
    const int v = st.rightmost() == 0;
    return {u, (len - u - v) / 2, v};
}

}  // namespace

ReducedWord reduce_word(const BitString& x) {
    LetterStack st(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        st.push_or_cancel(static_cast<std::uint8_t>((i % 2 == 0) ? 0 : 1));
    }
    return parse_stack(st);
}

ReducedWord reduce_word_bits(std::uint64_t bits, int n) {
    LetterStack st(n);
    for (int i = 0; i < n; ++i) {
        if (!((bits >> i) & 1u)) continue;
        st.push_or_cancel(static_cast<std::uint8_t>((i % 2 == 0) ? 0 : 1));
    }
    return parse_stack(st);
}

int xi_class(const BitString& x) {
    const ReducedWord w = reduce_word(x);
    return w.k + w.v;
}

int xi_class_bits(std::uint64_t bits, int n) {
    const ReducedWord w = reduce_word_bits(bits, n);
    return w.k + w.v;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) /
                 static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t theta_cardinality(int n, int u, int k, int v) {
    if (n < 1 || k < 0) return 0;
    if ((u != 0 && u != 1) || (v != 0 && v != 1)) {
        throw std::invalid_argument("theta_cardinality: u, v must be bits");
    }
    if (n % 2 == 0) {
        const int m = n / 2;
        return binomial(2 * m - 1, m - 1 - k);
    }
    const int m = (n - 1) / 2;
    return binomial(2 * m, m - u - k);
}

std::uint64_t xi_cardinality(int alpha, int l) {
    if (alpha < 1) throw std::invalid_argument("xi_cardinality: alpha must be >= 1");
    if (l < 0) return 0;
    if (alpha % 2 == 0) {
        const int m = alpha / 2;
        if (l == 0) return 2 * binomial(2 * m - 1, m - 1);
        return 2 * binomial(2 * m, m - l);
    }
    const int m = (alpha - 1) / 2;
    if (l == 0) return binomial(2 * m + 1, m);
    return binomial(2 * m + 2, m - l + 1);
}

std::vector<BitString> enumerate_theta(int n, int u, int k, int v) {
    if (n < 1) throw std::invalid_argument("enumerate_theta: n must be >= 1");
    if (n > 24) throw std::length_error("enumerate_theta: n > 24 is not supported");
    const ReducedWord target{u, k, v};
    std::vector<BitString> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (reduce_word_bits(bits, n) != target) continue;
        BitString x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        out.push_back(std::move(x));
    }
    return out;
}

bool reversal_closure_check(const BitString& a, const BitString& c) {
    if (a.size() != c.size()) {
        throw std::invalid_argument("reversal_closure_check: length mismatch");
    }
    const auto splice = [](const BitString& lhs, const BitString& rhs) {
        BitString y;
        y.reserve(2 * lhs.size() + 1);
        y.insert(y.end(), lhs.begin(), lhs.end());
        y.push_back(1);
        y.insert(y.end(), rhs.rbegin(), rhs.rend());
        return y;
    };
    return xi_class(splice(a, c)) == xi_class(splice(c, a));
}

}  // namespace elfkit
