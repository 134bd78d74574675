#include <doctest.h>

#include <cstdio>
#include <future>
#include <map>
#include <thread>

#include "oracles.hpp"
#include "umarg/errors.hpp"
#include "umarg/kronecker.hpp"

using namespace umarg;

TEST_CASE("conjugacy classes and centralizer orders") {
    auto t3 = CharacterTable::for_size(3);
    REQUIRE(t3->classes().size() == 3);
    std::int64_t sum = 0;
    for (const auto& c : t3->classes()) sum += 6 / c.centralizer_order;
    CHECK(sum == 6);   // class sizes partition the group
    auto t6 = CharacterTable::for_size(6);
    std::int64_t sum6 = 0;
    for (const auto& c : t6->classes()) sum6 += 720 / c.centralizer_order;
    CHECK(sum6 == 720);
}

TEST_CASE("character values against closed forms") {
    // chi^{(n)} = 1, chi^{(1^n)} = sign.
    CHECK(character_value(Partition{4}, Partition{2, 1, 1}) == 1);
    CHECK(character_value(Partition{1, 1, 1, 1}, Partition{2, 1, 1}) == -1);
    CHECK(character_value(Partition{1, 1, 1, 1}, Partition{2, 2}) == 1);
    // Standard rep of S_3: chi^{(2,1)} = (2, 0, -1) on classes (1^3),(2,1),(3).
    CHECK(character_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(character_value(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
}

TEST_CASE("character dimension equals hook formula and SYT recurrence") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition id(ones);
        for (const Partition& lam : testoracle::all_partitions(n)) {
            const std::int64_t dim = character_value(lam, id);
            CHECK(dim == testoracle::hook_dimension(lam));
            CHECK(dim == testoracle::syt_count(lam));
        }
    }
}

TEST_CASE("first orthogonality of characters, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        const auto table = CharacterTable::for_size(n);
        const auto parts = testoracle::all_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j) {
                Rational acc(0);
                for (const auto& cls : table->classes()) {
                    const std::int64_t a = character_value(parts[i], cls.cycle_type);
                    const std::int64_t b = character_value(parts[j], cls.cycle_type);
                    acc += Rational(a * b, cls.centralizer_order);
                }
                CHECK(acc == Rational(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("Kronecker pinned values") {
    const Partition r25{2, 2, 2, 2, 2};
    const Partition r52{5, 5};
    CHECK(kronecker_coefficient(r25, r52, Partition{4, 4, 1, 1}) == 1);
    CHECK(kronecker_coefficient(Partition{3, 3}, Partition{2, 2, 2}, Partition{3, 3}) == 1);
    CHECK(kronecker_coefficient(Partition{5, 5}, r25, Partition{4, 3, 3}) == 1);
    CHECK(kronecker_coefficient(Partition{4, 4, 4}, Partition{3, 3, 3, 3}, Partition{6, 6}) == 1);
    CHECK(kronecker_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{2}) == 1);
    CHECK(kronecker_coefficient(Partition{2}, Partition{2}, Partition{1, 1}) == 0);
}

TEST_CASE("Kronecker degenerate identities, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition row{std::vector<int>{n}};
        const Partition col{ones};
        const auto parts = testoracle::all_partitions(n);
        for (const Partition& lam : parts)
            for (const Partition& mu : parts) {
                CHECK(kronecker_coefficient(lam, mu, row) == (lam == mu ? 1u : 0u));
                CHECK(kronecker_coefficient(lam, mu, col) == (lam == transpose(mu) ? 1u : 0u));
            }
    }
}

TEST_CASE("Kronecker S3 symmetry, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = testoracle::all_partitions(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                for (const Partition& c : parts) {
                    const auto g = kronecker_coefficient(a, b, c);
                    CHECK(g == kronecker_coefficient(b, a, c));
                    CHECK(g == kronecker_coefficient(c, b, a));
                    CHECK(g == kronecker_coefficient(a, c, b));
                }
    }
}

TEST_CASE("transposition property, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = testoracle::all_partitions(n);
        for (const Partition& a : parts)
            for (const Partition& b : parts)
                for (const Partition& c : parts)
                    CHECK(kronecker_coefficient(a, b, c) == transposed_kronecker(a, b, c));
    }
}

TEST_CASE("dimension identity sum_nu g * f_nu = f_lam * f_mu") {
    const std::vector<std::pair<Partition, Partition>> pairs = {
        {Partition{3, 2}, Partition{3, 1, 1}},
        {Partition{4, 2}, Partition{2, 2, 2}},
        {Partition{3, 3}, Partition{2, 2, 2}},
    };
    for (const auto& [lam, mu] : pairs) {
        const int n = static_cast<int>(lam.size());
        std::int64_t total = 0;
        for (const Partition& nu : testoracle::all_partitions(n))
            total += static_cast<std::int64_t>(kronecker_coefficient(lam, mu, nu)) *
                     testoracle::hook_dimension(nu);
        CHECK(total == testoracle::hook_dimension(lam) * testoracle::hook_dimension(mu));
    }
}

TEST_CASE("phi sets") {
    const PhiSet p21 = phi_set(Partition{2, 1}, Partition{2, 1});
    REQUIRE(p21.members.size() == 3);
    CHECK(p21.members[0].nu == Partition{3});
    CHECK(p21.members[1].nu == Partition{2, 1});
    CHECK(p21.members[2].nu == Partition{1, 1, 1});
    for (const auto& m : p21.members) CHECK(m.g == 1);

    const PhiSet p22 = phi_set(Partition{2, 2}, Partition{2, 2});
    REQUIRE(p22.members.size() == 3);
    CHECK(p22.members[0].nu == Partition{4});
    CHECK(p22.members[1].nu == Partition{2, 2});
    CHECK(p22.members[2].nu == Partition{1, 1, 1, 1});

    const PhiSet p33 = phi_set(Partition{3, 3}, Partition{2, 2, 2});
    REQUIRE(p33.members.size() == 4);
    CHECK(p33.members[0].nu == Partition{4, 1, 1});
    CHECK(p33.members[1].nu == Partition{3, 3});
    CHECK(p33.members[2].nu == Partition{2, 2, 1, 1});
    CHECK(p33.members[3].nu == Partition{1, 1, 1, 1, 1, 1});

    // Members stay strictly decreasing in lex order.
    for (std::size_t i = 0; i + 1 < p33.members.size(); ++i)
        CHECK(cmp_lex(p33.members[i].nu, p33.members[i + 1].nu) == std::strong_ordering::greater);
    CHECK_THROWS_AS(phi_set(Partition{2, 1}, Partition{4}), SizeMismatch);
}

TEST_CASE("rational spectra slices scale consistently") {
    const auto s1 = rational_spectra_slice(2, 3, 1);
    REQUIRE(!s1.empty());
    // Lex-max member is the strip-type spectrum (2/3, 1/6, 1/6).
    CHECK(s1.front().entries()[0] == Rational(2, 3));
    CHECK(s1.front().entries()[1] == Rational(1, 6));
    for (std::size_t i = 0; i + 1 < s1.size(); ++i)
        CHECK(cmp_lex(s1[i], s1[i + 1]) == std::strong_ordering::greater);

    const auto s2 = rational_spectra_slice(2, 3, 2);
    // Stretching refines the slice: every ell=1 spectrum appears at ell=2.
    for (const auto& spec : s1) {
        bool found = false;
        for (const auto& other : s2)
            if (spec == other) found = true;
        CHECK(found);
    }
    CHECK(s2.size() > s1.size());
}

TEST_CASE("budget and hard cap") {
    const Partition big{21};
    CHECK_THROWS_AS(kronecker_coefficient(big, big, big), BudgetExceeded);
    CHECK_NOTHROW(kronecker_coefficient(big, big, big, 21));
    const Partition huge{24};
    CHECK_THROWS_AS(kronecker_coefficient(huge, huge, huge, 30), DomainError);
    CHECK_THROWS_AS(phi_set(Partition{7, 6}, Partition{7, 6}), BudgetExceeded);
    CHECK_THROWS_AS(character_value(Partition{2}, Partition{1, 1, 1}), SizeMismatch);
}

TEST_CASE("character cache round trip") {
    // Warm the memo, save, and reload; reload must parse every saved line.
    kronecker_coefficient(Partition{3, 2}, Partition{4, 1}, Partition{3, 1, 1});
    const std::string path = "umarg_test_cache.txt";
    const std::size_t saved = save_character_cache(path);
    CHECK(saved > 0);
    const std::size_t loaded = load_character_cache(path);
    CHECK(loaded == saved);
    CHECK(kronecker_coefficient(Partition{3, 2}, Partition{4, 1}, Partition{3, 1, 1}) ==
          kronecker_coefficient(Partition{4, 1}, Partition{3, 2}, Partition{3, 1, 1}));
    std::remove(path.c_str());
}

TEST_CASE("oracle is safe under concurrent use") {
    auto work = [] {
        std::uint64_t acc = 0;
        for (int rep = 0; rep < 3; ++rep)
            for (const Partition& nu : testoracle::all_partitions(7))
                acc += kronecker_coefficient(Partition{4, 3}, Partition{3, 2, 2}, nu);
        return acc;
    };
    std::vector<std::future<std::uint64_t>> futs;
    for (int i = 0; i < 4; ++i) futs.push_back(std::async(std::launch::async, work));
    std::vector<std::uint64_t> results;
    for (auto& f : futs) results.push_back(f.get());
    for (std::uint64_t r : results) CHECK(r == results.front());
}
