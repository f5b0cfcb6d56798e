#ifndef SPECHT_CHARACTER_HPP
#define SPECHT_CHARACTER_HPP

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "partition.hpp"
#include "special.hpp"

namespace specht {

/// Formal character of a module for a torus of rank 1..3: a finite map from
/// integer weight tuples to positive multiplicities.
class WeightCharacter {
public:
    using Weight = std::vector<int>;
    using Mults = std::map<Weight, long long>;

    explicit WeightCharacter(int rank) : rank_(rank) {
        if (rank < 1 || rank > 3)
            throw domain_error("WeightCharacter rank must be 1, 2 or 3");
    }

    int rank() const { return rank_; }
    const Mults& weights() const { return mults_; }

    void add(const Weight& w, long long m) {
        if (static_cast<int>(w.size()) != rank_)
            throw validity_error("weight length does not match the rank");
        if (m == 0)
            return;
        auto [it, inserted] = mults_.emplace(w, m);
        if (!inserted) {
            it->second += m;
            if (it->second == 0)
                mults_.erase(it);
        }
    }

    long long mult(const Weight& w) const {
        auto it = mults_.find(w);
        return it == mults_.end() ? 0 : it->second;
    }

    long long dimension() const {
        long long d = 0;
        for (const auto& [w, m] : mults_)
            d += m;
        return d;
    }

    /// Character of the tensor product: exact convolution of weight maps.
    WeightCharacter convolve(const WeightCharacter& other) const {
        if (rank_ != other.rank_)
            throw validity_error("cannot convolve characters of different rank");
        WeightCharacter out(rank_);
        Weight sum(static_cast<std::size_t>(rank_));
        for (const auto& [w1, m1] : mults_)
            for (const auto& [w2, m2] : other.mults_) {
                for (int i = 0; i < rank_; ++i)
                    sum[static_cast<std::size_t>(i)] =
                        w1[static_cast<std::size_t>(i)] + w2[static_cast<std::size_t>(i)];
                out.add(sum, m1 * m2);
            }
        return out;
    }

    /// Frobenius twist on characters: every weight scaled by the factor.
    WeightCharacter scaled(int factor) const {
        WeightCharacter out(rank_);
        for (const auto& [w, m] : mults_) {
            Weight sw(w);
            for (int& x : sw)
                x *= factor;
            out.add(sw, m);
        }
        return out;
    }

    friend bool operator==(const WeightCharacter& a, const WeightCharacter& b) = default;

private:
    int rank_;
    Mults mults_;
};

namespace detail {

/// Rank-1 Weyl string r, r-2, ..., -r, each weight once.
inline WeightCharacter sl2_string(long long r) {
    WeightCharacter out(1);
    for (long long w = r; w >= -r; w -= 2)
        out.add({static_cast<int>(w)}, 1);
    return out;
}

/// Classical rank-1 simple character in characteristic p, by recursive
/// tensor-product factorisation; p = 0 means the plain Weyl string.
inline WeightCharacter sl2_classical(long long r, int p) {
    if (p == 0 || r < p)
        return sl2_string(r);
    WeightCharacter base = sl2_string(r % p);
    return base.convolve(sl2_classical(r / p, p).scaled(p));
}

} // namespace detail

/// Character of the simple rank-1 module of highest weight r at quantum
/// order l over characteristic p.  The quantum layer peels exactly once;
/// everything below it is classical in characteristic p.
inline WeightCharacter sl2_simple_character(long long r, const SpecialParams& params) {
    if (r < 0)
        throw domain_error("sl2_simple_character requires r >= 0");
    const int l = params.l;
    WeightCharacter base = detail::sl2_string(r % l);
    if (r < l)
        return base;
    return base.convolve(detail::sl2_classical(r / l, params.p).scaled(l));
}

/// dim L(c,d)^(a,b) for the rank-2 quantum group: 1 iff (c-d, a-b) is
/// (l,p)-special, 0 otherwise.
inline int gl2_weight_mult(long long c, long long d, long long a, long long b,
                           const SpecialParams& params) {
    if (c < d)
        throw precondition_error("gl2_weight_mult requires c >= d");
    if (a + b != c + d)
        throw precondition_error("gl2_weight_mult: weight degree differs from the label degree");
    return is_lp_special(c - d, a - b, params) ? 1 : 0;
}

namespace detail {

/// Classical (q = 1) rank-2 multiplicity dim L(x,y)^(w,z) in characteristic
/// p > 0; zero when the degrees disagree.
inline int gl2_classical_mult(long long x, long long y, long long w, long long z, int p) {
    if (x < y)
        throw precondition_error("gl2_classical_mult requires x >= y");
    if (w + z != x + y)
        return 0;
    return is_p_special(x - y, w - z, p) ? 1 : 0;
}

} // namespace detail

/// dim L(sigma_m + l*mu)^(a, b, (m-2)(l-1), ..., l-1): strips the staircase
/// rows one at a time down to the rank-2 multiplicity and evaluates it.
/// mu may have at most two parts (the weight space vanishes otherwise, and
/// a longer mu is rejected outright).
inline int staircase_weight_mult(int m, long long a, long long b, const Partition& mu,
                                 const SpecialParams& params) {
    if (m < 1)
        throw precondition_error("staircase_weight_mult requires m >= 1");
    const int l = params.l;
    if (a < static_cast<long long>(m) * (l - 1))
        throw precondition_error("staircase_weight_mult requires a >= m(l-1)");
    if (b < static_cast<long long>(m - 1) * (l - 1))
        throw precondition_error("staircase_weight_mult requires b >= (m-1)(l-1)");
    if (mu.length() > 2)
        throw validity_error("staircase_weight_mult: mu must have at most two parts");
    long long cp = (l - 1) + static_cast<long long>(l) * mu.part(0);
    long long dp = static_cast<long long>(l) * mu.part(1);
    long long ap = a - static_cast<long long>(m - 1) * (l - 1);
    long long bp = b - static_cast<long long>(m - 1) * (l - 1);
    if (ap + bp != cp + dp)
        return 0;
    return gl2_weight_mult(cp, dp, ap, bp, params);
}

/// dim L(sigma_2 + 2*mu)^(a,b,2) in characteristic 2, for two-part mu, by
/// the case split on the 2-restricted part of mu:
///   2 dim L(mu)^(u+1,v) + [mu^0 = (2,1)] dim L(2*mubar)^(u-2,v)
/// with a = 2(u+1), b = 2v+1.
inline long long a31b_weight_mult(long long a, long long b, const Partition& mu) {
    if (a < 2 || a % 2 != 0 || a % 4 == 0)
        throw precondition_error("a31b_weight_mult requires a >= 2 even with a not divisible by 4");
    if (b < 3 || b % 2 == 0)
        throw precondition_error("a31b_weight_mult requires b >= 3 odd");
    if (mu.length() > 2)
        throw validity_error("a31b_weight_mult: mu must have at most two parts");
    long long u = a / 2 - 1;
    long long v = (b - 1) / 2;
    long long m1 = mu.part(0), m2 = mu.part(1);
    int e = static_cast<int>((m1 - m2) % 2);
    int f = static_cast<int>(m2 % 2);
    long long value = 2 * detail::gl2_classical_mult(m1, m2, u + 1, v, 2);
    if (e == 1 && f == 1) { // restricted part (2,1)
        long long mb1 = (m1 - 2) / 2, mb2 = (m2 - 1) / 2;
        value += detail::gl2_classical_mult(2 * mb1, 2 * mb2, u - 2, v, 2);
    }
    return value;
}

/// Weight character of the Schur function s(lambda) in nvars variables
/// (column-strict tableau enumeration); zero when lambda has more rows than
/// variables.
inline WeightCharacter schur_weight_character(const Partition& lambda, int nvars) {
    WeightCharacter out(nvars);
    if (static_cast<int>(lambda.length()) > nvars)
        return out;
    if (lambda.empty()) {
        out.add(std::vector<int>(static_cast<std::size_t>(nvars), 0), 1);
        return out;
    }
    const auto& parts = lambda.parts();
    const std::size_t rows = parts.size();
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t i = 0; i < rows; ++i)
        fill[i].assign(static_cast<std::size_t>(parts[i]), 0);
    std::vector<int> content(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows) {
            out.add(content, 1);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj == fill[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, fill[i][j - 1]);                  // rows weakly increase
        if (i > 0)
            lo = std::max(lo, fill[i - 1][j] + 1);              // columns strictly increase
        for (int entry = lo; entry <= nvars; ++entry) {
            fill[i][j] = entry;
            ++content[static_cast<std::size_t>(entry - 1)];
            self(self, ni, nj);
            --content[static_cast<std::size_t>(entry - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

/// p-restricted part of a <=3-part partition as a GL3 weight, plus the
/// quotient: lambda = lambda0 + p*lambdabar.
inline std::pair<Partition, Partition> gl3_restricted_split(const Partition& lambda, int p) {
    int l1 = lambda.part(0), l2 = lambda.part(1), l3 = lambda.part(2);
    int e1 = (l1 - l2) % p, e2 = (l2 - l3) % p, e3 = l3 % p;
    Partition lambda0({e1 + e2 + e3, e2 + e3, e3});
    Partition bar({(l1 - (e1 + e2 + e3)) / p, (l2 - (e2 + e3)) / p, (l3 - e3) / p});
    return {lambda0, bar};
}

inline WeightCharacter gl3_base_character(const Partition& lambda0, int p) {
    // Exterior powers are simple in every characteristic; (2,1) is the
    // characteristic-2 Steinberg weight and is only accepted there.
    if (lambda0.empty() || lambda0 == Partition({1}) || lambda0 == Partition({1, 1}))
        return schur_weight_character(lambda0, 3);
    if (p == 2 && lambda0 == Partition({2, 1}))
        return schur_weight_character(lambda0, 3);
    throw unsupported_base_case("no base character for restricted weight " +
                                render_partition(lambda0) + " at p = " + std::to_string(p));
}

} // namespace detail

/// Character of the simple polynomial GL3-module L(lambda) in characteristic
/// p: recursive tensor-product factorisation over the supported base table.
/// p = 0 returns the full Schur-function character.  Refuses (rather than
/// guesses) restricted weights outside the table.
inline WeightCharacter gl3_simple_character(const Partition& lambda, int p) {
    if (static_cast<int>(lambda.length()) > 3)
        throw validity_error("gl3_simple_character: lambda must have at most three parts");
    if (p != 0 && !is_prime(p))
        throw domain_error("gl3_simple_character requires p = 0 or p prime");
    if (p == 0)
        return schur_weight_character(lambda, 3);

    static std::map<std::pair<Partition, int>, WeightCharacter> memo;
    static std::mutex memo_mutex;
    {
        std::scoped_lock lock(memo_mutex);
        if (auto it = memo.find({lambda, p}); it != memo.end())
            return it->second;
    }
    auto [lambda0, bar] = detail::gl3_restricted_split(lambda, p);
    WeightCharacter result = detail::gl3_base_character(lambda0, p);
    if (!bar.empty())
        result = result.convolve(gl3_simple_character(bar, p).scaled(p));
    std::scoped_lock lock(memo_mutex);
    memo.emplace(std::make_pair(lambda, p), result);
    return result;
}

/// "(2,1,0): 1" lines in descending lexicographic weight order, ending with
/// the total dimension.
inline std::string render_weight_character(const WeightCharacter& chi) {
    std::string out;
    for (auto it = chi.weights().rbegin(); it != chi.weights().rend(); ++it) {
        out += "(";
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (i > 0)
                out += ",";
            out += std::to_string(it->first[i]);
        }
        out += "): " + std::to_string(it->second) + "\n";
    }
    out += "dim = " + std::to_string(chi.dimension());
    return out;
}

} // namespace specht

#endif // SPECHT_CHARACTER_HPP
