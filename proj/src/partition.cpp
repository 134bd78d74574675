#include "umarg/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "umarg/errors.hpp"

namespace umarg {

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        std::int64_t num = std::stoll(text.substr(0, slash));
        std::int64_t den = std::stoll(text.substr(slash + 1));
        if (den <= 0) throw ParseError("rational denominator must be positive: " + text);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: " + text);
    }
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    // Trailing zeros are tolerated on input and dropped.
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::int64_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool Partition::is_rectangular() const noexcept {
    return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (std::size_t i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::parse(std::string_view text) {
    auto fail = [&](const char* why) -> ParseError {
        return ParseError(std::string("bad partition '") + std::string(text) + "': " + why);
    };
    std::size_t a = text.find_first_not_of(" \t");
    std::size_t b = text.find_last_not_of(" \t");
    if (a == std::string_view::npos || text[a] != '[' || text[b] != ']')
        throw fail("expected bracketed form like [4,1,1] or [2^5]");
    std::string_view body = text.substr(a + 1, b - a - 1);

    std::vector<int> parts;
    std::size_t pos = 0;
    auto read_int = [&](std::string_view tok) -> long {
        long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw fail("malformed integer");
        return value;
    };
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        std::size_t t0 = tok.find_first_not_of(" \t");
        if (t0 == std::string_view::npos) throw fail("empty component");
        std::size_t t1 = tok.find_last_not_of(" \t");
        tok = tok.substr(t0, t1 - t0 + 1);

        std::size_t caret = tok.find('^');
        long value, repeat = 1;
        if (caret == std::string_view::npos) {
            value = read_int(tok);
        } else {
            value = read_int(tok.substr(0, caret));
            repeat = read_int(tok.substr(caret + 1));
            if (repeat < 0) throw fail("negative exponent");
        }
        if (value <= 0) throw fail("parts must be positive");
        for (long r = 0; r < repeat; ++r) parts.push_back(static_cast<int>(value));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == body.size()) throw fail("trailing comma");
    }
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw fail(e.what());
    }
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

RationalSpectrum::RationalSpectrum(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
    Rational sum(0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Rational& e = entries_[i];
        if (e < Rational(0) || e > Rational(1))
            throw DomainError("spectrum entries must lie in [0,1]");
        if (i + 1 < entries_.size() && e < entries_[i + 1])
            throw DomainError("spectrum entries must be weakly decreasing");
        sum += e;
    }
    if (sum != Rational(1))
        throw DomainError("spectrum entries must sum to exactly 1");
}

std::vector<std::string> RationalSpectrum::to_strings() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(umarg::to_string(e));
    return out;
}

std::string RationalSpectrum::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ", ";
        out += umarg::to_string(entries_[i]);
    }
    return out + ")";
}

Partition transpose(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(p.part(0)), 0);
    for (int part : p.parts())
        for (int c = 0; c < part; ++c) ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

Partition intersect(const Partition& p, const Partition& q) {
    std::size_t len = std::min(p.length(), q.length());
    std::vector<int> parts;
    parts.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        parts.push_back(std::min(p.part(i), q.part(i)));
    return Partition(std::move(parts));
}

std::optional<Partition> skew_as_partition(const Partition& p, const Partition& q) {
    if (!p.contains(q))
        throw ContainmentViolation("skew shape requires inner contained in outer: " +
                                   q.to_string() + " not in " + p.to_string());
    std::vector<int> diffs;
    for (std::size_t i = 0; i < p.length(); ++i) {
        int d = p.part(i) - q.part(i);
        if (d > 0) diffs.push_back(d);
    }
    // The multiset of nonzero row differences must already be in weakly
    // decreasing order for the skew diagram to be of partition shape.
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
        if (diffs[i] < diffs[i + 1]) return std::nullopt;
    return Partition(std::move(diffs));
}

Partition scale(const Partition& p, int ell) {
    if (ell < 1) throw DomainError("scale factor must be >= 1");
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    for (int& part : parts) part *= ell;
    return Partition(std::move(parts));
}

RationalSpectrum normalize(const Partition& p) {
    if (p.empty()) throw EmptyPartition("cannot normalize the empty partition");
    return normalize_by(p, p.size());
}

RationalSpectrum normalize_by(const Partition& p, std::int64_t denom) {
    if (denom <= 0) throw DomainError("normalization denominator must be positive");
    std::vector<Rational> entries;
    entries.reserve(p.length());
    for (int part : p.parts()) entries.emplace_back(part, denom);
    return RationalSpectrum(std::move(entries));
}

std::strong_ordering cmp_lex(std::span<const Rational> a, std::span<const Rational> b) {
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        Rational x = i < a.size() ? a[i] : Rational(0);
        Rational y = i < b.size() ? b[i] : Rational(0);
        if (x < y) return std::strong_ordering::less;
        if (y < x) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const Partition& a, const Partition& b) {
    std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) < b.part(i) ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_lex(const RationalSpectrum& a, const RationalSpectrum& b) {
    return cmp_lex(a.entries(), b.entries());
}

Dominance cmp_dominance(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw SizeMismatch("dominance compares partitions of equal size, got " +
                           a.to_string() + " and " + b.to_string());
    std::size_t len = std::max(a.length(), b.length());
    std::int64_t pa = 0, pb = 0;
    bool a_le_b = true, b_le_a = true;
    for (std::size_t i = 0; i < len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa > pb) a_le_b = false;
        if (pb > pa) b_le_a = false;
    }
    if (a_le_b && b_le_a) return Dominance::Equal;
    if (a_le_b) return Dominance::Less;
    if (b_le_a) return Dominance::Greater;
    return Dominance::Incomparable;
}

namespace {

void emit_partitions(std::int64_t remaining, int max_part,
                     std::optional<std::size_t> max_length,
                     std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (max_length && prefix.size() >= *max_length) return;
    std::size_t slots_left = max_length ? *max_length - prefix.size()
                                        : static_cast<std::size_t>(remaining);
    for (int first = static_cast<int>(std::min<std::int64_t>(remaining, max_part));
         first >= 1; --first) {
        // Remaining boxes must fit in the slots still available.
        if (static_cast<std::int64_t>(first) * static_cast<std::int64_t>(slots_left) < remaining)
            break;
        prefix.push_back(first);
        emit_partitions(remaining - first, first, max_length, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(std::int64_t n,
                                            std::optional<std::size_t> max_length) {
    if (n < 0) throw DomainError("cannot enumerate partitions of a negative number");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, static_cast<int>(n), max_length, prefix, out);
    return out;
}

} // namespace umarg
