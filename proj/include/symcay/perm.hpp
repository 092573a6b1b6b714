#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "symcay/bigint.hpp"
#include "symcay/errors.hpp"

namespace symcay {

/// Permutation of {0, ..., degree-1}, stored as its image array.
///
/// Composition convention (fixed for the whole library): the product
/// applies the LEFT factor first,
///
///     (p * q)(i) == q(p(i)),
///
/// i.e. permutations act on the right.  Conjugation follows the same
/// convention: p.conjugated_by(q) == q^-1 * p * q.  Every algorithm in
/// this library (sifting, orbit computation, coset actions) derives its
/// orientation from this one rule.
///
/// Points are 0-based internally; the cycle codec speaks 1-based labels.
class Permutation {
public:
    /// Identity permutation on `degree` points.
    explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
        if (degree < 0) throw InvalidParameter("negative degree");
        std::iota(images_.begin(), images_.end(), 0);
    }

    /// Builds from an explicit image array; validates it is a bijection.
    static Permutation from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw InvalidParameter("image array is not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }

    /// Image of a point.  Precondition: 0 <= point < degree().
    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (int i = 0; i < degree(); ++i)
            r.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
        return r;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw DegreeMismatch(p.degree(), q.degree());
        Permutation r;
        r.images_.resize(p.images_.size());
        for (std::size_t i = 0; i < p.images_.size(); ++i)
            r.images_[i] = q.images_[static_cast<std::size_t>(p.images_[i])];
        return r;
    }

    Permutation conjugated_by(const Permutation& q) const {
        return q.inverse() * (*this) * q;
    }

    /// p^k for any integer k (negative exponents use the inverse).
    Permutation power(long long k) const {
        Permutation base = k < 0 ? inverse() : *this;
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ull
                                     : static_cast<unsigned long long>(k);
        Permutation acc(degree());
        while (e > 0) {
            if (e & 1ull) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return images_ != o.images_; }
    /// Lexicographic order on image arrays (shorter degree first).
    bool operator<(const Permutation& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return images_ < o.images_;
    }

    /// Multiset of cycle lengths, ascending, fixed points included as 1s.
    std::vector<int> cycle_type() const {
        std::vector<int> type;
        std::vector<char> seen(images_.size(), 0);
        for (int i = 0; i < degree(); ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0;
            for (int j = i; !seen[static_cast<std::size_t>(j)];
                 j = images_[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        return type;
    }

    /// Element order: lcm of the cycle lengths.  Exceeds 2^64 for some
    /// permutations of the degrees handled here, hence exact arithmetic.
    BigCount order() const {
        BigCount o = 1;
        for (int len : cycle_type()) o = big_lcm(o, BigCount(len));
        return o;
    }

    /// True for even permutations (products of an even number of
    /// transpositions).
    bool is_even() const {
        int transpositions = 0;
        for (int len : cycle_type()) transpositions += len - 1;
        return transpositions % 2 == 0;
    }

    /// True when the order is a power of two (identity included): every
    /// cycle length must itself be a power of two.
    bool is_two_element() const {
        for (int len : cycle_type())
            if ((len & (len - 1)) != 0) return false;
        return true;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (int v : images_) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    Permutation() = default;

    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

namespace detail {

/// Scans "(a,b,c)(d,e)..." into 0-based cycles, reporting byte offsets on
/// malformed input.  Labels are 1-based and must not exceed `degree`.
/// Repeats within one cycle are always rejected; repeats across cycles are
/// rejected only when `allow_cross_repeats` is false.
inline std::vector<std::vector<int>> scan_cycles(std::string_view text, int degree,
                                                 bool allow_cross_repeats) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw ParseError("expected '('", i);
        ++i;
        skip_ws();
        std::vector<int> cycle;
        std::vector<char> in_cycle(static_cast<std::size_t>(degree), 0);
        if (i < text.size() && text[i] == ')') {
            ++i;  // "()" is an empty cycle: the identity
        } else {
            while (true) {
                skip_ws();
                std::size_t start = i;
                long label = 0;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                    label = label * 10 + (text[i] - '0');
                    if (label > degree) throw ParseError("label exceeds degree", start);
                    ++i;
                }
                if (i == start) throw ParseError("expected a point label", i);
                if (label < 1) throw ParseError("labels are 1-based", start);
                int point = static_cast<int>(label) - 1;
                if (in_cycle[static_cast<std::size_t>(point)])
                    throw ParseError("label repeated within a cycle", start);
                if (!allow_cross_repeats && used[static_cast<std::size_t>(point)])
                    throw ParseError("label repeated across cycles", start);
                in_cycle[static_cast<std::size_t>(point)] = 1;
                used[static_cast<std::size_t>(point)] = 1;
                cycle.push_back(point);
                skip_ws();
                if (i >= text.size()) throw ParseError("unterminated cycle", i);
                if (text[i] == ')') {
                    ++i;
                    break;
                }
                if (text[i] != ',') throw ParseError("expected ',' or ')'", i);
                ++i;
            }
        }
        if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
        skip_ws();
    }
    return cycles;
}

inline Permutation compose_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
    Permutation p(degree);
    for (const auto& cycle : cycles) {
        std::vector<int> images(static_cast<std::size_t>(degree));
        std::iota(images.begin(), images.end(), 0);
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        p = p * Permutation::from_images(std::move(images));
    }
    return p;
}

}  // namespace detail

/// Strict codec: parses disjoint cycle notation.  A label appearing in two
/// cycles is an error; "" and "()" denote the identity.  Inverse of
/// `format_cycles`.
inline Permutation parse_cycles(std::string_view text, int degree) {
    return detail::compose_cycles(detail::scan_cycles(text, degree, false), degree);
}

/// Relaxed reading: the listed cycles need not be disjoint and are composed
/// left to right (earlier cycles applied first).  On disjoint input this
/// agrees with `parse_cycles`.
inline Permutation parse_cycle_word(std::string_view text, int degree) {
    return detail::compose_cycles(detail::scan_cycles(text, degree, true), degree);
}

/// Canonical disjoint-cycle form: each cycle starts at its smallest label,
/// cycles are ordered by first label, fixed points are omitted, labels are
/// 1-based.  The identity renders as "()".
inline std::string format_cycles(const Permutation& p) {
    std::string out;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(j + 1);
            seen[static_cast<std::size_t>(j)] = 1;
            j = p(j);
            first = false;
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace symcay
