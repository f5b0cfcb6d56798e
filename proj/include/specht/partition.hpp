#ifndef SPECHT_PARTITION_HPP
#define SPECHT_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace specht {

using BigInt = boost::multiprecision::cpp_int;

/// A partition: weakly decreasing sequence of positive integers, stored in
/// canonical form (no trailing zeros).  The empty sequence is the zero
/// partition.  Values are immutable after construction.
class Partition {
public:
    Partition() = default;

    /// Canonicalises (strips trailing zeros) and validates.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw validity_error("partition parts must be positive");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw validity_error("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }

    std::size_t length() const { return parts_.size(); }

    bool empty() const { return parts_.empty(); }

    /// Part at 0-based index i; zero beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long degree() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;

    /// Lexicographic order on the part sequences (ascending).
    friend bool operator<(const Partition& a, const Partition& b) {
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(),
                                            b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// Comparator for listings sorted by descending lexicographic order of label.
struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// A composition: finite sequence of nonnegative integers, zeros kept, order
/// significant.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int x : parts_)
            if (x < 0)
                throw validity_error("composition parts must be nonnegative");
    }

    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Part at 0-based index i; zero beyond the stored length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long long degree() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    friend bool operator==(const Composition& a, const Composition& b) = default;

private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram: lambda'_j = #{i : lambda_i >= j}.
inline Partition conjugate(const Partition& lambda) {
    if (lambda.empty())
        return {};
    std::vector<int> conj(static_cast<std::size_t>(lambda.parts().front()), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j)
            ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

/// Dominance order: true iff deg(lambda) = deg(mu) and every prefix sum of
/// lambda is <= the corresponding prefix sum of mu.
inline bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.degree() != mu.degree())
        return false;
    long long sl = 0, sm = 0;
    std::size_t n = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < n; ++i) {
        sl += lambda.part(i);
        sm += mu.part(i);
        if (sl > sm)
            return false;
    }
    return true;
}

/// l-core via first-column beta-numbers with bead count length(lambda).
/// Within each residue class mod l the beads slide down to the least
/// available positions, which realises every sequence of "subtract l while
/// free" moves at once; the construction is deterministic.
inline Partition l_core(const Partition& lambda, int l) {
    if (l < 2)
        throw domain_error("l_core requires l >= 2");
    const std::size_t n = lambda.length();
    if (n == 0)
        return {};
    std::vector<int> count(static_cast<std::size_t>(l), 0);
    for (std::size_t i = 0; i < n; ++i) {
        long long beta = lambda.parts()[i] + static_cast<long long>(n - 1 - i);
        ++count[static_cast<std::size_t>(beta % l)];
    }
    std::vector<long long> beads;
    beads.reserve(n);
    for (int r = 0; r < l; ++r)
        for (int j = 0; j < count[static_cast<std::size_t>(r)]; ++j)
            beads.push_back(r + static_cast<long long>(j) * l);
    std::sort(beads.begin(), beads.end(), std::greater<>());
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i)
        parts[i] = static_cast<int>(beads[i] - static_cast<long long>(n - 1 - i));
    return Partition(std::move(parts));
}

/// (l-1)*(m, m-1, ..., 1); the zero partition for m = 0.
inline Partition staircase(int m, int l) {
    if (m < 0)
        throw domain_error("staircase requires m >= 0");
    if (l < 1)
        throw domain_error("staircase requires l >= 1");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(m));
    for (int i = m; i >= 1; --i)
        parts.push_back((l - 1) * i);
    return Partition(std::move(parts));
}

/// lambda_i > m - i for every row with lambda_i > 0.
inline bool is_m_adapted(const Partition& lambda, int m) {
    for (std::size_t i = 0; i < lambda.length(); ++i)
        if (lambda.parts()[i] <= m - static_cast<int>(i) - 1)
            return false;
    return true;
}

/// Componentwise base + scale*mu, zero-padded; validity error if the result
/// is not weakly decreasing.  mu may be a composition (the failure case).
inline Partition add_scaled(const Partition& base, int scale, const Composition& mu) {
    if (scale < 1)
        throw domain_error("add_scaled requires scale >= 1");
    std::size_t n = std::max(base.length(), mu.length());
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i)
        parts[i] = base.part(i) + scale * mu.part(i);
    return Partition(std::move(parts));
}

inline Partition add_scaled(const Partition& base, int scale, const Partition& mu) {
    return add_scaled(base, scale, Composition(mu.parts()));
}

/// Number of standard Young tableaux of shape lambda (hook length formula),
/// exact arbitrary-precision arithmetic.
inline BigInt count_standard_tableaux(const Partition& lambda) {
    BigInt numerator = 1;
    for (long long k = 2; k <= lambda.degree(); ++k)
        numerator *= k;
    Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            int arm = lambda.parts()[i] - j - 1;
            int leg = conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return numerator / hooks;
}

namespace detail {

/// Shared scanner for the `part (',' part)*` grammar with part := INT ('^' INT)?,
/// optionally wrapped in a single pair of parentheses.  Returns the expanded
/// integer sequence; structural checks are the caller's.
inline std::vector<int> scan_part_list(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto read_int = [&]() -> long long {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parse_error("expected an integer at position " + std::to_string(start));
        long long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1'000'000'000LL)
                throw parse_error("integer out of range");
        }
        return value;
    };

    skip_ws();
    bool wrapped = pos < text.size() && text[pos] == '(';
    if (wrapped)
        ++pos;
    std::vector<int> out;
    skip_ws();
    bool at_end = pos >= text.size() || (wrapped && text[pos] == ')');
    while (!at_end) {
        long long value = read_int();
        long long repeat = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            repeat = read_int();
            skip_ws();
        }
        for (long long k = 0; k < repeat; ++k)
            out.push_back(static_cast<int>(value));
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        at_end = true;
    }
    skip_ws();
    if (wrapped) {
        if (pos >= text.size() || text[pos] != ')')
            throw parse_error("missing closing parenthesis");
        ++pos;
        skip_ws();
    }
    if (pos != text.size())
        throw parse_error("trailing characters after position " + std::to_string(pos));
    return out;
}

} // namespace detail

/// Parses "14,3,1^8" or "(2,1)"; the expanded sequence must be weakly
/// decreasing and strictly positive.
inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts = detail::scan_part_list(text);
    for (int x : parts)
        if (x == 0)
            throw validity_error("partition parts must be positive");
    return Partition(std::move(parts));
}

/// Parses the same grammar but keeps zeros and arbitrary order.
inline Composition parse_composition(std::string_view text) {
    return Composition(detail::scan_part_list(text));
}

/// "14,3,1^8" — inverse of the grammar, runs of >= 2 equal parts compressed.
/// The empty partition renders as the empty string.
inline std::string render_partition_body(const Partition& lambda) {
    std::string out;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts[i]);
        if (j - i >= 2) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

/// "(14,3,1^8)"; the empty partition renders as "()".
inline std::string render_partition(const Partition& lambda) {
    return "(" + render_partition_body(lambda) + ")";
}

inline std::string render_composition_body(const Composition& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.length(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(alpha.parts()[i]);
    }
    return out;
}

inline std::string render_composition(const Composition& alpha) {
    return "(" + render_composition_body(alpha) + ")";
}

} // namespace specht

#endif // SPECHT_PARTITION_HPP
