// Test-only reference implementations, kept deliberately independent of the
// library internals: growth bounds by explicit lex-segment enumeration in
// many variables, and random monomial ideal construction.
#ifndef LEXPOINT_TESTS_ORACLES_HPP
#define LEXPOINT_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

namespace oracles {

// All degree-d exponent vectors over n variables, as strings of char
// exponents, in the same descending lex order the library uses.
inline std::vector<std::string> exponent_vectors(int n, int d) {
    std::vector<std::string> out;
    std::string cur(static_cast<std::size_t>(n), '\0');
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == n - 1) {
            cur[static_cast<std::size_t>(var)] = static_cast<char>(rem);
            out.push_back(cur);
            cur[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(var)] = static_cast<char>(e);
            self(self, var + 1, rem - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

// Maximum of dim (R/I)_{d+1} over ideals with dim (R/I)_d = a, computed by
// growing the complement of the lex-smallest a monomials in n = a + d
// variables.  This is the Macaulay bound, derived without binomial algebra.
inline long long brute_macaulay_bound(int a, int d) {
    int n = a + d;
    std::vector<std::string> cur = exponent_vectors(n, d);
    std::vector<std::string> next = exponent_vectors(n, d + 1);
    std::unordered_set<std::string> grown;
    for (std::size_t i = 0; i + static_cast<std::size_t>(a) < cur.size(); ++i) {
        for (int v = 0; v < n; ++v) {
            std::string m = cur[i];
            m[static_cast<std::size_t>(v)] = static_cast<char>(m[static_cast<std::size_t>(v)] + 1);
            grown.insert(std::move(m));
        }
    }
    return static_cast<long long>(next.size()) - static_cast<long long>(grown.size());
}

// Exterior analogue via bitmask subsets: the Kruskal-Katona bound by
// explicit lex-segment growth.
inline long long brute_kk_bound(int a, int d) {
    int n = a + d;
    auto subsets = [n](int k) {
        std::vector<std::uint32_t> out;
        auto rec = [&](auto&& self, int from, int left, std::uint32_t mask) -> void {
            if (left == 0) {
                out.push_back(mask);
                return;
            }
            for (int i = from; i <= n - left; ++i)
                self(self, i + 1, left - 1, mask | (1u << i));
        };
        rec(rec, 0, k, 0);
        return out;
    };
    // Lex order on subsets: smaller lowest differing index wins.
    auto lex_greater = [](std::uint32_t x, std::uint32_t y) {
        std::uint32_t diff = x ^ y;
        if (diff == 0)
            return false;
        std::uint32_t low = diff & (~diff + 1);
        return (x & low) != 0;
    };
    std::vector<std::uint32_t> cur = subsets(d);
    std::sort(cur.begin(), cur.end(), lex_greater);
    std::vector<std::uint32_t> next = subsets(d + 1);
    std::unordered_set<std::uint32_t> grown;
    for (std::size_t i = 0; i + static_cast<std::size_t>(a) < cur.size(); ++i)
        for (int v = 0; v < n; ++v)
            if (!(cur[i] & (1u << v)))
                grown.insert(cur[i] | (1u << v));
    return static_cast<long long>(next.size()) - static_cast<long long>(grown.size());
}

} // namespace oracles

#endif
