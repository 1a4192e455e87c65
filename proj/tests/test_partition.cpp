#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "pleth/partition.hpp"

using namespace pleth;

namespace {

// Independent oracle: partition counts via the Euler pentagonal recurrence,
// written out separately from the library routine.
std::vector<long> pentagonal_counts(unsigned max_n) {
    std::vector<long> p(max_n + 1, 0);
    p[0] = 1;
    for (unsigned n = 1; n <= max_n; ++n) {
        long total = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            const long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long>(n) && g2 > static_cast<long>(n)) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long>(n)) total += sign * p[n - g1];
            if (g2 <= static_cast<long>(n)) total += sign * p[n - g2];
        }
        p[n] = total;
    }
    return p;
}

BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace

TEST_CASE("conjugate on forced examples") {
    CHECK(conjugate(Partition{4, 3, 1}) == Partition{3, 2, 2, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition{5}) == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("conjugate is an involution up to weight 20") {
    for (unsigned n = 0; n <= 20; ++n)
        for (const Partition& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("hook+column decomposition") {
    auto s = hook_column_decompose(Partition{6, 2, 2, 2, 1});
    REQUIRE(s.has_value());
    CHECK(s->alpha == 6);
    CHECK(s->beta == 3);
    CHECK(s->gamma == 1);

    auto ones = hook_column_decompose(Partition{1, 1, 1, 1, 1});
    REQUIRE(ones.has_value());
    CHECK(ones->alpha == 1);
    CHECK(ones->beta == 0);
    CHECK(ones->gamma == 4);

    CHECK(!hook_column_decompose(Partition{3, 3, 1}).has_value());
    CHECK(!hook_column_decompose(Partition{}).has_value());
}

TEST_CASE("hook+column decompose/reconstruct roundtrip up to weight 30") {
    for (unsigned alpha = 1; alpha <= 30; ++alpha)
        for (unsigned beta = 0; alpha + 2 * beta <= 30; ++beta) {
            if (alpha == 1 && beta > 0) continue;
            for (unsigned gamma = 0; alpha + 2 * beta + gamma <= 30; ++gamma) {
                const HookColumnShape shape(alpha, beta, gamma);
                const Partition lam = shape.reconstruct();
                CHECK(lam.weight() == shape.weight());
                auto back = hook_column_decompose(lam);
                REQUIRE(back.has_value());
                CHECK(*back == shape);
            }
        }
}

TEST_CASE("partitions_of: order, base cases, counts") {
    std::vector<Partition> four;
    for (const Partition& p : partitions_of(4)) four.push_back(p);
    CHECK(four == std::vector<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2},
                                         Partition{2, 1, 1}, Partition{1, 1, 1, 1}});

    std::vector<Partition> zero;
    for (const Partition& p : partitions_of(0)) zero.push_back(p);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition{});

    long count32 = 0;
    for ([[maybe_unused]] const Partition& p : partitions_of(32)) ++count32;
    CHECK(count32 == 8349);
}

TEST_CASE("partitions_of agrees with the pentagonal recurrence up to 40") {
    const auto expected = pentagonal_counts(40);
    for (unsigned n = 0; n <= 40; ++n) {
        long count = 0;
        std::set<Partition> seen;
        for (const Partition& p : partitions_of(n)) {
            CHECK(p.weight() == n);
            CHECK(seen.insert(p).second);  // no repeats
            ++count;
        }
        CHECK(count == expected[n]);
        CHECK(partition_count(n) == BigInt(expected[n]));
    }
}

TEST_CASE("z_of") {
    CHECK(z_of(Partition{2, 1, 1}) == 4);
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(z_of(Partition{n}) == n);
        CHECK(z_of(Partition(std::vector<unsigned>(n, 1))) == factorial(n));
    }
}

TEST_CASE("permutations partitioned by cycle type: sum of n!/z_lam is n!") {
    for (unsigned n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for (const Partition& lam : partitions_of(n)) {
            const BigInt z = z_of(lam);
            CHECK(factorial(n) % z == 0);
            total += factorial(n) / z;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("two_sign basics") {
    auto s = two_sign(Partition{4, 3, 1});
    REQUIRE(s.has_value());
    CHECK(*s == -1);

    auto h = two_sign(Partition{2});
    REQUIRE(h.has_value());
    CHECK(*h == +1);

    CHECK(!two_sign(Partition{1}).has_value());       // odd weight
    CHECK(!two_sign(Partition{2, 1}).has_value());    // odd weight
    CHECK(!two_sign(Partition{3, 2, 1}).has_value()); // nonempty 2-core
    REQUIRE(two_sign(Partition{}).has_value());
    CHECK(*two_sign(Partition{}) == +1);
}

TEST_CASE("two_sign on hook+columns depends only on gamma mod 4") {
    // Even-weight hook+columns are domino-tileable unless beta and gamma are
    // both odd (then the checkerboard imbalance is 2); wherever the sign is
    // defined it follows the gamma mod 4 pattern (+,-,-,+).
    const int table[4] = {+1, -1, -1, +1};
    for (unsigned alpha = 1; alpha <= 30; ++alpha)
        for (unsigned beta = 0; alpha + 2 * beta <= 30; ++beta) {
            if (alpha == 1 && beta > 0) continue;
            for (unsigned gamma = 0; alpha + 2 * beta + gamma <= 30; ++gamma) {
                const HookColumnShape shape(alpha, beta, gamma);
                if (shape.weight() % 2 != 0) continue;
                auto sign = two_sign(shape.reconstruct());
                const bool tileable = !(beta % 2 == 1 && gamma % 2 == 1);
                REQUIRE(sign.has_value() == tileable);
                if (sign) CHECK(*sign == table[gamma % 4]);
            }
        }
}

TEST_CASE("partition sum and union") {
    CHECK(partition_sum(Partition{3, 1}, Partition{2, 2}) == Partition{5, 3});
    CHECK(partition_union(Partition{2, 1}, Partition{2}) == Partition{2, 2, 1});
    const Partition lam{4, 2, 1};
    CHECK(partition_union(lam, Partition{}) == lam);
    CHECK(partition_sum(lam, Partition{}) == lam);
}

TEST_CASE("partition text form") {
    CHECK(to_string(Partition{6, 2, 2, 2, 1}) == "[6,2,2,2,1]");
    CHECK(to_string(Partition{}) == "[]");
    CHECK(parse_partition("[6,2,2,2,1]") == Partition{6, 2, 2, 2, 1});
    CHECK(parse_partition("[6,2^3,1]") == Partition{6, 2, 2, 2, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_partition(" [ 3 , 1 ] ") == Partition{3, 1});
    CHECK_THROWS(parse_partition("[1,2]"));
    CHECK_THROWS(parse_partition("[2,0]"));
    CHECK_THROWS(parse_partition("[2"));
    CHECK_THROWS(parse_partition("2]"));
}

TEST_CASE("decreasing lexicographic comparator matches enumeration order") {
    for (unsigned n = 1; n <= 10; ++n) {
        DecLex less;
        Partition prev;
        bool first = true;
        for (const Partition& p : partitions_of(n)) {
            if (!first) {
                CHECK(less(prev, p));
                CHECK(!less(p, prev));
            }
            prev = p;
            first = false;
        }
    }
}

TEST_CASE("partitions_with_max_part") {
    const auto all = partitions_with_max_part(6, 3);
    for (const auto& p : all) CHECK(p.first() <= 3);
    CHECK(all.size() == 7);  // (3,3),(3,2,1),(3,1,1,1),(2,2,2),(2,2,1,1),(2,1^4),(1^6)
}
