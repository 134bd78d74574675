#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "umarg/rational.hpp"

namespace umarg {

// Integer partition: weakly decreasing sequence of positive parts. The
// empty partition is valid and acts as the terminator of strip-type chains.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    // Text form "[4,1,1]"; exponent shorthand "[2^5]" accepted on input only.
    static Partition parse(std::string_view text);
    std::string to_string() const;

    std::int64_t size() const noexcept;            // sum of parts
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::span<const int> parts() const noexcept { return parts_; }
    // Zero-padded access: part(i) = 0 for i >= length().
    int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    bool is_rectangular() const noexcept;          // all parts equal (or empty)
    bool contains(const Partition& inner) const noexcept;   // inner_i <= this_i for all i

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Normalized partition / state spectrum: weakly decreasing exact rationals
// in [0,1] summing to exactly 1.
class RationalSpectrum {
public:
    explicit RationalSpectrum(std::vector<Rational> entries);

    std::span<const Rational> entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    std::vector<std::string> to_strings() const;
    std::string to_string() const;                 // "(2/3, 1/6, 1/6)"

    bool operator==(const RationalSpectrum&) const = default;

private:
    std::vector<Rational> entries_;
};

Partition transpose(const Partition& p);
Partition intersect(const Partition& p, const Partition& q);   // componentwise min

// Row differences p_i - q_i if they form a partition after dropping zeros;
// nullopt when the skew shape is not of partition shape.
// Throws ContainmentViolation when q is not contained in p.
std::optional<Partition> skew_as_partition(const Partition& p, const Partition& q);

Partition scale(const Partition& p, int ell);
RationalSpectrum normalize(const Partition& p);                // p / size(p)
// Normalize by an explicit denominator (used for spectra slices nu / (ell*k)).
RationalSpectrum normalize_by(const Partition& p, std::int64_t denom);

// Lexicographic comparison, shorter sequence zero-padded. Exact arithmetic.
std::strong_ordering cmp_lex(std::span<const Rational> a, std::span<const Rational> b);
std::strong_ordering cmp_lex(const Partition& a, const Partition& b);
std::strong_ordering cmp_lex(const RationalSpectrum& a, const RationalSpectrum& b);

enum class Dominance { Less, Equal, Greater, Incomparable };

// Dominance (majorization) order via prefix sums; requires equal sizes.
Dominance cmp_dominance(const Partition& a, const Partition& b);

// All partitions of n in decreasing lexicographic order, optionally
// restricted to length <= max_length.
std::vector<Partition> enumerate_partitions(std::int64_t n,
                                            std::optional<std::size_t> max_length = std::nullopt);

} // namespace umarg
