#ifndef SPECHT_SPECIAL_HPP
#define SPECHT_SPECIAL_HPP

#include <map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace specht {

inline bool is_prime(long long p) {
    if (p < 2)
        return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Quantum order l (>= 2) together with the field characteristic p (0 or a
/// prime).  q itself never appears: l already encodes it.
struct SpecialParams {
    int l = 2;
    int p = 2;

    SpecialParams() = default;
    SpecialParams(int l_, int p_) : l(l_), p(p_) {
        if (l < 2)
            throw domain_error("quantum order l must be >= 2");
        if (p != 0 && !is_prime(p))
            throw domain_error("characteristic p must be 0 or prime");
    }
};

namespace detail {

// Least-significant-digit recursion: candidate t in [-r0, r0] with
// t == b (mod p) and r0 - t even, then recurse on the remaining digits of r
// against (b - t)/p.  Memoised on the residual pair (r, b), which determines
// the subproblem completely.
inline bool p_special_rec(long long r, long long b,
                          long long p, std::map<std::pair<long long, long long>, bool>& memo) {
    if (r == 0)
        return b == 0;
    auto key = std::make_pair(r, b);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    long long r0 = r % p;
    bool found = false;
    for (long long t = -r0; t <= r0 && !found; ++t) {
        if ((r0 - t) % 2 != 0)
            continue;
        long long diff = b - t;
        if (((diff % p) + p) % p != 0)
            continue;
        found = p_special_rec(r / p, diff / p, p, memo);
    }
    memo[key] = found;
    return found;
}

} // namespace detail

/// Whether the pair (r, b) is p-special: for p = 0, |b| <= r with r - b even;
/// for p > 0, b admits a signed base-p digit expansion dominated digitwise by
/// the expansion of r with matching digit parities.
inline bool is_p_special(long long r, long long b, long long p) {
    if (r < 0)
        throw domain_error("is_p_special requires r >= 0");
    if (p != 0 && !is_prime(p))
        throw domain_error("is_p_special requires p = 0 or p prime");
    if (p == 0)
        return -r <= b && b <= r && (r - b) % 2 == 0;
    std::map<std::pair<long long, long long>, bool> memo;
    return detail::p_special_rec(r, b, p, memo);
}

/// Whether (s, a) is (l,p)-special: peel one quantum digit s = s0 + l*sbar
/// (0 <= s0 <= l-1), pick a0 in [-s0, s0] of the right parity with
/// a == a0 (mod l), and require (sbar, (a - a0)/l) p-special.
inline bool is_lp_special(long long s, long long a, const SpecialParams& params) {
    if (s < 0)
        throw domain_error("is_lp_special requires s >= 0");
    const long long l = params.l;
    long long s0 = s % l;
    long long sbar = s / l;
    for (long long a0 = -s0; a0 <= s0; a0 += 2) {
        long long diff = a - a0;
        if (((diff % l) + l) % l != 0)
            continue;
        if (is_p_special(sbar, diff / l, params.p))
            return true;
    }
    return false;
}

/// All two-part partitions (c,d) with c + d = u + v and (c-d, u-v) p-special,
/// sorted by descending c.
inline std::vector<Partition> enumerate_special_two_part(long long u, long long v, long long p) {
    if (u < 0 || v < 0)
        throw domain_error("enumerate_special_two_part requires u, v >= 0");
    std::vector<Partition> out;
    long long total = u + v;
    for (long long c = total; 2 * c >= total; --c) {
        long long d = total - c;
        if (is_p_special(c - d, u - v, p))
            out.push_back(Partition({static_cast<int>(c), static_cast<int>(d)}));
    }
    return out;
}

} // namespace specht

#endif // SPECHT_SPECIAL_HPP
