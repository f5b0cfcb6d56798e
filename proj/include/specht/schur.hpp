#ifndef SPECHT_SCHUR_HPP
#define SPECHT_SCHUR_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "partition.hpp"

namespace specht {

/// Finite integer-linear combination of Schur functions, indexed by
/// partitions with no cap on the number of parts.  Zero coefficients are
/// never stored.  Coefficients are exact unbounded integers.
class SchurSum {
public:
    using Terms = std::map<Partition, BigInt>;

    SchurSum() = default;

    static SchurSum unit() {
        SchurSum g;
        g.add(Partition{}, 1);
        return g;
    }

    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    BigInt coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const Partition& lambda, const BigInt& c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    SchurSum& operator+=(const SchurSum& other) {
        for (const auto& [lambda, c] : other.terms_)
            add(lambda, c);
        return *this;
    }

    friend SchurSum operator+(SchurSum a, const SchurSum& b) {
        a += b;
        return a;
    }

    friend bool operator==(const SchurSum& a, const SchurSum& b) = default;

private:
    Terms terms_;
};

/// Basis embedding s(lambda).
inline SchurSum schur(const Partition& lambda) {
    SchurSum g;
    g.add(lambda, 1);
    return g;
}

namespace detail {

/// Partitions mu obtained from lambda by adding one box in each of r
/// distinct rows (mu/lambda a vertical r-strip).
inline void vertical_strips(const Partition& lambda, int r, std::vector<Partition>& out) {
    const auto& parts = lambda.parts();
    const std::size_t len = parts.size();
    std::vector<int> mu(parts);
    auto rec = [&](auto&& self, std::size_t i, int rem, int prev) -> void {
        if (rem == 0) {
            std::vector<int> full(mu.begin(), mu.begin() + static_cast<std::ptrdiff_t>(i));
            full.insert(full.end(), parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end());
            out.push_back(Partition(std::move(full)));
            return;
        }
        if (i >= len) {
            // all further boxes start new rows of size one
            std::vector<int> full(mu);
            full.insert(full.end(), static_cast<std::size_t>(rem), 1);
            out.push_back(Partition(std::move(full)));
            return;
        }
        for (int delta = 0; delta <= 1 && delta <= rem; ++delta) {
            if (parts[i] + delta > prev)
                continue;
            mu[i] = parts[i] + delta;
            self(self, i + 1, rem - delta, mu[i]);
        }
        mu[i] = parts[i];
    };
    rec(rec, 0, r, std::numeric_limits<int>::max());
}

/// Partitions mu containing lambda with mu/lambda a horizontal a-strip
/// (no two added boxes in one column): lambda_i <= mu_i <= lambda_{i-1}.
inline void horizontal_strips(const Partition& lambda, int a, std::vector<Partition>& out) {
    const auto& parts = lambda.parts();
    const std::size_t len = parts.size();
    std::vector<int> mu(len, 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == len) {
            // a possible new bottom row takes everything left
            int cap = len == 0 ? std::numeric_limits<int>::max() : parts[len - 1];
            if (rem > cap)
                return;
            std::vector<int> full(mu);
            if (rem > 0)
                full.push_back(rem);
            out.push_back(Partition(std::move(full)));
            return;
        }
        int hi = (i == 0) ? parts[i] + rem : std::min(parts[i - 1], parts[i] + rem);
        for (int value = parts[i]; value <= hi; ++value) {
            mu[i] = value;
            self(self, i + 1, rem - (value - parts[i]));
        }
    };
    rec(rec, 0, a);
}

} // namespace detail

/// Multiplication by s(1^r): each basis term gains one box in each of r
/// distinct rows; extended bilinearly.
inline SchurSum pieri_column(const SchurSum& g, int r) {
    if (r < 0)
        throw domain_error("pieri_column requires r >= 0");
    SchurSum out;
    std::vector<Partition> strips;
    for (const auto& [lambda, c] : g.terms()) {
        strips.clear();
        detail::vertical_strips(lambda, r, strips);
        for (const auto& mu : strips)
            out.add(mu, c);
    }
    return out;
}

/// Multiplication by s(a): horizontal a-strips; extended bilinearly.
inline SchurSum pieri_row(const SchurSum& g, int a) {
    if (a < 0)
        throw domain_error("pieri_row requires a >= 0");
    SchurSum out;
    std::vector<Partition> strips;
    for (const auto& [lambda, c] : g.terms()) {
        strips.clear();
        detail::horizontal_strips(lambda, a, strips);
        for (const auto& mu : strips)
            out.add(mu, c);
    }
    return out;
}

namespace detail {

/// Expands s(lambda)*s(mu) by depth-first enumeration of the
/// Littlewood-Richardson tableaux: the boxes of each value form a horizontal
/// strip, and prefix counts satisfy the lattice-word condition
/// (#v in rows 1..r <= #(v-1) in rows 1..r-1).  Dead prefixes are pruned by
/// the ballot capacity.
inline void lr_product_term(const Partition& lambda, const Partition& mu,
                            const BigInt& scale, SchurSum& out) {
    if (mu.empty()) {
        out.add(lambda, scale);
        return;
    }
    const std::size_t rows = lambda.length() + mu.length();
    std::vector<int> shape(rows, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i)
        shape[i] = lambda.parts()[i];

    auto place_value = [&](auto&& self, std::size_t value, const std::vector<int>& prev) -> void {
        if (value == mu.length()) {
            out.add(Partition(std::vector<int>(shape)), scale);
            return;
        }
        const std::vector<int> old_shape(shape);
        std::vector<int> cur(rows, 0);
        auto place_row = [&](auto&& rowself, std::size_t row, int rem,
                             int prefix_here, int prefix_above) -> void {
            if (rem == 0) {
                self(self, value + 1, cur);
                return;
            }
            if (row >= rows)
                return;
            int cap = rem;
            if (row > 0)
                cap = std::min(cap, old_shape[row - 1] - old_shape[row]);
            if (value > 0)
                cap = std::min(cap, prefix_above - prefix_here);
            int next_above = prefix_above + (value > 0 ? prev[row] : 0);
            for (int k = 0; k <= cap; ++k) {
                shape[row] = old_shape[row] + k;
                cur[row] = k;
                rowself(rowself, row + 1, rem - k, prefix_here + k, next_above);
            }
            shape[row] = old_shape[row];
            cur[row] = 0;
        };
        place_row(place_row, 0, mu.parts()[value], 0, 0);
    };
    place_value(place_value, 0, std::vector<int>(rows, 0));
}

} // namespace detail

/// Full product in the Schur basis via Littlewood-Richardson tableau
/// enumeration.  Serves as the independent oracle for the Pieri routines.
inline SchurSum lr_multiply(const SchurSum& g, const SchurSum& h) {
    SchurSum out;
    for (const auto& [lambda, c] : g.terms())
        for (const auto& [mu, d] : h.terms())
            detail::lr_product_term(lambda, mu, c * d, out);
    return out;
}

/// C_m: keeps exactly the terms with m-adapted index.
inline SchurSum truncate_adapted(const SchurSum& g, int m) {
    SchurSum out;
    for (const auto& [lambda, c] : g.terms())
        if (is_m_adapted(lambda, m))
            out.add(lambda, c);
    return out;
}

/// C*_gamma: keeps exactly the terms whose index has l-core gamma.
/// gamma itself must be an l-core.
inline SchurSum truncate_core(const SchurSum& g, const Partition& gamma, int l) {
    if (l_core(gamma, l) != gamma)
        throw precondition_error("truncate_core: " + render_partition(gamma) +
                                 " is not a " + std::to_string(l) + "-core");
    SchurSum out;
    for (const auto& [lambda, c] : g.terms())
        if (l_core(lambda, l) == gamma)
            out.add(lambda, c);
    return out;
}

/// Character of S^rows E (x) Lambda^cols E: the unit multiplied by s(rows_i)
/// left to right, then by s(1^cols_j) left to right.
inline SchurSum product_character(const Composition& rows, const Composition& cols) {
    SchurSum g = SchurSum::unit();
    for (int a : rows.parts())
        g = pieri_row(g, a);
    for (int r : cols.parts())
        g = pieri_column(g, r);
    return g;
}

/// "s(5,1,1) + s(4,1^3)" with terms in descending lexicographic order of
/// index; coefficients other than 1 are written "c*s(...)"; zero is "0".
inline std::string render_schur_sum(const SchurSum& g) {
    if (g.is_zero())
        return "0";
    std::string out;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        if (!out.empty())
            out += " + ";
        if (it->second != 1)
            out += it->second.str() + "*";
        out += "s(" + render_partition_body(it->first) + ")";
    }
    return out;
}

} // namespace specht

#endif // SPECHT_SCHUR_HPP
