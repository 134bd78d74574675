#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "umarg/errors.hpp"
#include "umarg/partition.hpp"

using namespace umarg;

TEST_CASE("partition construction and validation") {
    CHECK(Partition{4, 1, 1}.size() == 6);
    CHECK(Partition{}.empty());
    CHECK(Partition(std::vector<int>{3, 3, 0, 0}) == Partition{3, 3});   // trailing zeros drop
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, -1}), DomainError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0, 1}), DomainError);
}

TEST_CASE("partition text round trip") {
    CHECK(Partition::parse("[4,1,1]") == Partition{4, 1, 1});
    CHECK(Partition::parse("[2^5]") == Partition{2, 2, 2, 2, 2});
    CHECK(Partition::parse("[4^2,1,1]") == Partition{4, 4, 1, 1});
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition::parse(" [ 3 , 2 ] ") == Partition{3, 2});
    CHECK(Partition{4, 4, 1, 1}.to_string() == "[4,4,1,1]");
    CHECK(Partition{}.to_string() == "[]");

    CHECK_THROWS_AS(Partition::parse("4,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[4,1"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[a]"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[2^]"), ParseError);
    CHECK(Partition::parse("[2^0]") == Partition{});
    CHECK_THROWS_AS(Partition::parse("[1,2]"), ParseError);
}

TEST_CASE("transpose") {
    CHECK(transpose(Partition{4, 1, 1}) == Partition{3, 1, 1, 1});
    CHECK(transpose(Partition{2, 2, 2, 2, 2}) == Partition{5, 5});
    CHECK(transpose(Partition{}) == Partition{});
    const auto parts = enumerate_partitions(7);
    for (const Partition& p : parts) CHECK(transpose(transpose(p)) == p);
}

TEST_CASE("intersect and skew") {
    CHECK(intersect(Partition{5, 5}, Partition{2, 2, 2, 2, 2}) == Partition{2, 2});
    CHECK(intersect(Partition{3}, Partition{1, 1}) == Partition{1});
    CHECK(*skew_as_partition(Partition{2, 2, 2, 2, 2}, Partition{2, 2}) == Partition{2, 2, 2});
    CHECK(*skew_as_partition(Partition{5, 5}, Partition{2, 2}) == Partition{3, 3});
    CHECK(*skew_as_partition(Partition{1, 1}, Partition{1}) == Partition{1});
    // (3,1)/(1): rows (2,1) works; (3,2)/(2): rows (1,2) is not a partition.
    CHECK(*skew_as_partition(Partition{3, 1}, Partition{1}) == Partition{2, 1});
    CHECK(!skew_as_partition(Partition{3, 2}, Partition{2}).has_value());
    CHECK_THROWS_AS(skew_as_partition(Partition{2}, Partition{3}), ContainmentViolation);
}

TEST_CASE("rectangular and containment") {
    CHECK(Partition{3, 3, 3}.is_rectangular());
    CHECK(Partition{}.is_rectangular());
    CHECK(Partition{5}.is_rectangular());
    CHECK(!Partition{3, 2}.is_rectangular());
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK(!Partition{3, 2}.contains(Partition{2, 2, 1}));
}

TEST_CASE("scale and normalize") {
    CHECK(scale(Partition{3, 1}, 2) == Partition{6, 2});
    const RationalSpectrum s = normalize(Partition{4, 1, 1});
    CHECK(s.entries()[0] == Rational(2, 3));
    CHECK(s.entries()[1] == Rational(1, 6));
    CHECK(s.to_string() == "(2/3, 1/6, 1/6)");
    const RationalSpectrum t = normalize_by(Partition{2, 2}, 4);
    CHECK(t.entries()[0] == Rational(1, 2));
    CHECK_THROWS_AS(normalize_by(Partition{2, 2}, 3), DomainError);   // sums to 4/3
}

TEST_CASE("lexicographic order") {
    CHECK(cmp_lex(Partition{4, 1, 1}, Partition{3, 3}) == std::strong_ordering::greater);
    CHECK(cmp_lex(Partition{2, 2}, Partition{2, 1, 1}) == std::strong_ordering::greater);
    CHECK(cmp_lex(Partition{2, 2}, Partition{2, 2}) == std::strong_ordering::equal);
    CHECK(cmp_lex(normalize(Partition{4, 1, 1}), normalize(Partition{3, 3})) ==
          std::strong_ordering::greater);
}

TEST_CASE("dominance order") {
    CHECK(cmp_dominance(Partition{4, 1, 1}, Partition{3, 3}) == Dominance::Incomparable);
    CHECK(cmp_dominance(Partition{4, 2}, Partition{3, 3}) == Dominance::Greater);
    CHECK(cmp_dominance(Partition{2, 2, 2}, Partition{3, 3}) == Dominance::Less);
    CHECK(cmp_dominance(Partition{3, 3}, Partition{3, 3}) == Dominance::Equal);
    CHECK_THROWS_AS(cmp_dominance(Partition{2}, Partition{1}), SizeMismatch);
}

TEST_CASE("lex refines dominance, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        const auto parts = enumerate_partitions(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                const Dominance d = cmp_dominance(a, b);
                if (d == Dominance::Greater) CHECK(cmp_lex(a, b) == std::strong_ordering::greater);
                if (d == Dominance::Equal) CHECK(cmp_lex(a, b) == std::strong_ordering::equal);
            }
    }
}

TEST_CASE("enumerate_partitions agrees with the independent generator") {
    for (int n = 0; n <= 9; ++n) {
        auto lib = enumerate_partitions(n);
        auto ref = testoracle::all_partitions(n);
        CHECK(lib.size() == ref.size());
        // Library order is decreasing lex.
        for (std::size_t i = 0; i + 1 < lib.size(); ++i)
            CHECK(cmp_lex(lib[i], lib[i + 1]) == std::strong_ordering::greater);
        std::reverse(ref.begin(), ref.end());
        CHECK(lib == ref);
    }
    const auto caps = enumerate_partitions(6, 2);
    for (const Partition& p : caps) CHECK(p.length() <= 2);
    CHECK(caps.size() == 4);   // (6),(5,1),(4,2),(3,3)
}

TEST_CASE("rational parse and print") {
    CHECK(parse_rational("2/3") == Rational(2, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(to_string(Rational(2, 3)) == "2/3");
    CHECK(to_string(Rational(4)) == "4");
    CHECK_THROWS_AS(parse_rational("2/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
