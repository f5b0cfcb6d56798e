#ifndef SPECHT_DECOMPOSE_HPP
#define SPECHT_DECOMPOSE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "character.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "schur.hpp"
#include "special.hpp"

namespace specht {

struct Summand {
    Partition young;
    long long mult = 1;

    friend bool operator==(const Summand& a, const Summand& b) = default;
};

/// A labelled direct-sum decomposition: the left-hand label (a Specht label,
/// or a permutation-module label for block components), the Young labels with
/// multiplicities sorted by descending lexicographic order, and the producing
/// family with its parameters.
struct Decomposition {
    std::string family;                                     // "staircase", "hook", ...
    std::vector<std::pair<std::string, long long>> params;  // ordered for rendering
    Partition specht;                                       // empty for block components
    Composition source;                                     // M(alpha) label, blockcomp only
    Partition core;                                         // the core the family fixes
    std::vector<Summand> summands;
};

namespace detail {

inline void sort_summands(std::vector<Summand>& summands) {
    std::sort(summands.begin(), summands.end(),
              [](const Summand& a, const Summand& b) { return b.young < a.young; });
}

/// (head, m-1, m-2, ..., 2, 1^ones); for m = 2 just (head, 1^ones).
inline Partition staircase_tail_label(long long head, int m, long long ones) {
    std::vector<int> parts;
    parts.push_back(static_cast<int>(head));
    for (int i = m - 1; i >= 2; --i)
        parts.push_back(i);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
}

inline void require(bool ok, const std::string& condition) {
    if (!ok)
        throw precondition_error("violated: " + condition);
}

inline void require_characteristic(int p) {
    if (p != 0 && !is_prime(p))
        throw domain_error("characteristic p must be 0 or prime");
}

} // namespace detail

/// Sp(a, m-1, ..., 2, 1^(b-m+2)) = sum of Y(sigma_m + 2*mu) over the special
/// two-part mu; the l = 2 staircase family.
inline Decomposition decompose_staircase(int m, long long a, long long b, int p) {
    detail::require_characteristic(p);
    detail::require(m >= 2, "m >= 2");
    detail::require(a >= m, "a >= m");
    detail::require(b >= m - 1, "b >= m-1");
    detail::require((a - m) % 2 == 0, "a-m even");
    detail::require(((b - m) % 2 + 2) % 2 == 1, "b-m odd");

    Decomposition dec;
    dec.family = "staircase";
    dec.params = {{"m", m}, {"a", a}, {"b", b}, {"l", 2}, {"p", p}};
    dec.specht = detail::staircase_tail_label(a, m, b - m + 2);
    dec.core = staircase(m, 2);
    long long u = (a - m) / 2;
    long long v = (b - m + 1) / 2;
    for (const Partition& mu : enumerate_special_two_part(u, v, p))
        dec.summands.push_back({add_scaled(dec.core, 2, mu), 1});
    detail::sort_summands(dec.summands);
    return dec;
}

/// Sp(a, 1^b) for a, b of opposite parity: core sigma_2 when a is even,
/// core sigma_1 when a is odd.
inline Decomposition decompose_hook(long long a, long long b, int p) {
    detail::require_characteristic(p);
    detail::require(a >= 1 && b >= 1, "a, b >= 1");
    detail::require(a % 2 != b % 2, "a and b of opposite parity");

    Decomposition dec;
    dec.family = "hook";
    dec.params = {{"a", a}, {"b", b}, {"l", 2}, {"p", p}};
    dec.specht = detail::staircase_tail_label(a, 2, b);
    if (a % 2 == 0) {
        Decomposition inner = decompose_staircase(2, a, b, p);
        dec.core = inner.core;
        dec.summands = std::move(inner.summands);
        return dec;
    }
    dec.core = staircase(1, 2);
    long long u = (a - 1) / 2;
    long long v = b / 2;
    for (const Partition& mu : enumerate_special_two_part(u, v, p))
        dec.summands.push_back({add_scaled(dec.core, 2, mu), 1});
    detail::sort_summands(dec.summands);
    return dec;
}

/// Sp(a, 3, 1^(b-1)) in characteristic 2, for a even, a not divisible by 4,
/// b odd: the three-row family Y(sigma_2 + 2*(mu_1, mu_2, 1)) plus the
/// two-row family Y(sigma_2 + 2*rho) with rho = sigma_2 + 2*rhobar.
inline Decomposition decompose_a31b(long long a, long long b) {
    detail::require(a >= 4, "a >= 4");
    detail::require(a % 2 == 0, "a even");
    detail::require(a % 4 != 0, "a not divisible by 4");
    detail::require(b >= 3, "b >= 3");
    detail::require(b % 2 == 1, "b odd");

    Decomposition dec;
    dec.family = "a31b";
    dec.params = {{"a", a}, {"b", b}, {"l", 2}, {"p", 2}};
    {
        std::vector<int> parts = {static_cast<int>(a), 3};
        parts.insert(parts.end(), static_cast<std::size_t>(b - 1), 1);
        dec.specht = Partition(std::move(parts));
    }
    dec.core = staircase(2, 2);
    long long u = a / 2 - 1;
    long long v = (b - 1) / 2;
    // mu-family: mu = (mu1, mu2, 1), mu1 + mu2 = u + v, (mu1-mu2, u-v) 2-special
    for (long long m1 = u + v - 1; 2 * m1 >= u + v; --m1) {
        long long m2 = u + v - m1;
        if (m2 < 1)
            continue;
        if (is_p_special(m1 - m2, u - v, 2))
            dec.summands.push_back(
                {add_scaled(dec.core, 2,
                            Partition({static_cast<int>(m1), static_cast<int>(m2), 1})),
                 1});
    }
    // rho-family: rho = sigma_2 + 2*rhobar, 2(rb1 + rb2) = u + v - 2,
    // (2(rb1 - rb2), u - v - 2) 2-special
    if (u + v - 2 >= 0 && (u + v - 2) % 2 == 0) {
        long long half = (u + v - 2) / 2;
        for (long long rb1 = half; 2 * rb1 >= half; --rb1) {
            long long rb2 = half - rb1;
            if (is_p_special(2 * (rb1 - rb2), u - v - 2, 2)) {
                Partition rho({static_cast<int>(2 + 2 * rb1), static_cast<int>(1 + 2 * rb2)});
                dec.summands.push_back({add_scaled(dec.core, 2, rho), 1});
            }
        }
    }
    detail::sort_summands(dec.summands);
    return dec;
}

/// Sp(b+1, 2, 2, 1^(a-3)), the conjugate label; Young summands are self-dual
/// so the summand list is the same as for Sp(a, 3, 1^(b-1)).
inline Decomposition decompose_a31b_dual(long long a, long long b) {
    Decomposition dec = decompose_a31b(a, b);
    dec.family = "dual-a31b";
    dec.specht = conjugate(dec.specht);
    return dec;
}

/// Sp(2^k + 2, 1^(2^k - 1)) in characteristic 2; computed through the
/// staircase family at m = 2, never from a closed-form list.
inline Decomposition decompose_two_power_hook(int k) {
    detail::require(k >= 1, "k >= 1");
    detail::require(k <= 20, "k <= 20");
    long long pow2 = 1LL << k;
    Decomposition dec = decompose_staircase(2, pow2 + 2, pow2 - 1, 2);
    dec.family = "example63";
    dec.params = {{"k", k}, {"l", 2}, {"p", 2}};
    return dec;
}

/// Block component of M(a, b, (m-2)(l-1), ..., 2(l-1), l-1) corresponding to
/// the core sigma_m: the labels Y(sigma_m + l*mu) over the special two-part
/// mu.  General quantum order l.
inline Decomposition block_component_labels(int m, long long a, long long b,
                                            const SpecialParams& params) {
    detail::require_characteristic(params.p);
    const int l = params.l;
    detail::require(m >= 2, "m >= 2");
    detail::require(a >= static_cast<long long>(m) * (l - 1), "a >= m(l-1)");
    detail::require(b >= static_cast<long long>(m - 1) * (l - 1), "b >= (m-1)(l-1)");
    detail::require((a + m) % l == 0, "a+m == 0 mod l");
    detail::require((b + m) % l == 1, "b+m == 1 mod l");

    Decomposition dec;
    dec.family = "blockcomp";
    dec.params = {{"m", m}, {"a", a}, {"b", b}, {"l", l}, {"p", params.p}};
    {
        std::vector<int> alpha = {static_cast<int>(a), static_cast<int>(b)};
        for (int i = m - 2; i >= 1; --i)
            alpha.push_back(i * (l - 1));
        dec.source = Composition(std::move(alpha));
    }
    dec.core = staircase(m, l);
    long long u = (a - static_cast<long long>(m) * (l - 1)) / l;
    long long v = (b - static_cast<long long>(m - 1) * (l - 1)) / l;
    for (const Partition& mu : enumerate_special_two_part(u, v, params.p))
        dec.summands.push_back({add_scaled(dec.core, l, mu), 1});
    detail::sort_summands(dec.summands);
    return dec;
}

/// Verdict of the symbolic core-truncation identity at l = 2.
enum class CoreIdentityCase {
    case1,    // C*_m of the product equals s(a+1, m-1, ..., 2, 1^(b-m+1))
    case2,    // ... equals s(a, m-1, ..., 2, 1^(b-m+2))
    zero,     // ... vanishes
    mismatch  // computed truncation disagrees with the predicted case
};

struct CoreIdentityResult {
    CoreIdentityCase verdict = CoreIdentityCase::mismatch;
    SchurSum actual;    // C*_{sigma_m}(s(a) s(1^b) s(1^(m-2)) ... s(1))
    SchurSum expected;  // the predicted right-hand side
};

inline std::string to_string(CoreIdentityCase c) {
    switch (c) {
        case CoreIdentityCase::case1: return "case1";
        case CoreIdentityCase::case2: return "case2";
        case CoreIdentityCase::zero: return "zero";
        default: return "MISMATCH";
    }
}

/// Computes C*_{sigma_m}(s(a) s(1^b) s(1^(m-2)) ... s(1)) in the Schur ring
/// and compares it with the parity-determined right-hand side.  A mismatch is
/// reported as a verdict, never thrown: it would falsify the implementation.
inline CoreIdentityResult verify_core_identity(int m, long long a, long long b) {
    detail::require(m >= 2, "m >= 2");
    detail::require(a >= m, "a >= m");
    detail::require(b >= m - 1, "b >= m-1");

    std::vector<int> cols = {static_cast<int>(b)};
    for (int i = m - 2; i >= 1; --i)
        cols.push_back(i);
    SchurSum product = product_character(Composition({static_cast<int>(a)}), Composition(cols));

    CoreIdentityResult res;
    res.actual = truncate_core(product, staircase(m, 2), 2);
    bool a_even = (a - m) % 2 == 0;
    bool b_even = ((b - m) % 2 + 2) % 2 == 0;
    CoreIdentityCase predicted;
    if (!a_even && b_even) {
        predicted = CoreIdentityCase::case1;
        res.expected = schur(detail::staircase_tail_label(a + 1, m, b - m + 1));
    } else if (a_even && !b_even) {
        predicted = CoreIdentityCase::case2;
        res.expected = schur(detail::staircase_tail_label(a, m, b - m + 2));
    } else {
        predicted = CoreIdentityCase::zero;
    }
    res.verdict = (res.actual == res.expected) ? predicted : CoreIdentityCase::mismatch;
    return res;
}

namespace detail {

inline std::map<Partition, long long> summand_multiset(const std::vector<Summand>& summands,
                                                       long long copies = 1) {
    std::map<Partition, long long> out;
    for (const auto& s : summands)
        out[s.young] += copies * s.mult;
    return out;
}

inline std::vector<Summand> multiset_to_summands(const std::map<Partition, long long>& ms) {
    std::vector<Summand> out;
    for (const auto& [young, mult] : ms)
        if (mult != 0)
            out.push_back({young, mult});
    sort_summands(out);
    return out;
}

/// All partitions of `total` into at most three parts.
inline std::vector<Partition> partitions_three_rows(long long total) {
    std::vector<Partition> out;
    for (long long m1 = total; 3 * m1 >= total; --m1)
        for (long long m2 = std::min(m1, total - m1); 2 * m2 >= total - m1; --m2) {
            long long m3 = total - m1 - m2;
            if (m3 < 0 || m3 > m2)
                continue;
            out.push_back(Partition(
                {static_cast<int>(m1), static_cast<int>(m2), static_cast<int>(m3)}));
        }
    return out;
}

} // namespace detail

struct ConsistencyResult {
    bool consistent = false;
    std::vector<Summand> via_labels;   // a31b summands plus two copies of the hook family above it
    std::vector<Summand> via_weights;  // summands re-derived from weight multiplicities
};

/// Cross-checks the two derivations of the a31b family: the label route
/// (a31b summands plus two copies of Sp(a+2, 1^b)'s summands) against the
/// weight route (every Y(sigma_2 + 2*mu) counted with the weight
/// multiplicity dim L(sigma_2 + 2*mu)^(a,b,2)).
inline ConsistencyResult verify_a31b_consistency(long long a, long long b) {
    Decomposition left = decompose_a31b(a, b);
    Decomposition hook_above = decompose_staircase(2, a + 2, b, 2);

    auto lhs = detail::summand_multiset(left.summands);
    for (const auto& [young, mult] : detail::summand_multiset(hook_above.summands, 2))
        lhs[young] += mult;

    long long u = a / 2 - 1;
    long long v = (b - 1) / 2;
    std::map<Partition, long long> rhs;
    const Partition sigma2 = staircase(2, 2);
    for (const Partition& mu : detail::partitions_three_rows(u + v + 1)) {
        long long d = 0;
        if (mu.part(2) == 0) {
            d = a31b_weight_mult(a, b, mu);
        } else if (mu.part(2) == 1) {
            // strip the forced third row and fall to the classical rank-2 case
            d = detail::gl2_classical_mult(mu.part(0) - 1, mu.part(1) - 1, u - 1, v - 1, 2);
        }
        if (d != 0)
            rhs[add_scaled(sigma2, 2, mu)] += d;
    }

    ConsistencyResult res;
    res.via_labels = detail::multiset_to_summands(lhs);
    res.via_weights = detail::multiset_to_summands(rhs);
    res.consistent = lhs == rhs;
    return res;
}

/// "Sp(14,3,1^8) = Y(18,5,2) + Y(14,11) + Y(14,9,2)"; block components render
/// the permutation-module label and the fixed core instead.
inline std::string render_decomposition(const Decomposition& dec) {
    std::string out;
    if (dec.family == "blockcomp")
        out = "M(" + render_composition_body(dec.source) + ") core " + render_partition(dec.core);
    else
        out = "Sp(" + render_partition_body(dec.specht) + ")";
    out += " = ";
    if (dec.summands.empty())
        return out + "0";
    for (std::size_t i = 0; i < dec.summands.size(); ++i) {
        if (i > 0)
            out += " + ";
        if (dec.summands[i].mult != 1)
            out += std::to_string(dec.summands[i].mult) + "*";
        out += "Y(" + render_partition_body(dec.summands[i].young) + ")";
    }
    return out;
}

} // namespace specht

#endif // SPECHT_DECOMPOSE_HPP
