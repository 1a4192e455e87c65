#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pleth/partition.hpp"
#include "pleth/symfunc.hpp"

using namespace pleth;

namespace {

CharacterTable& chars() {
    static CharacterTable table;
    return table;
}

// Independent oracle: dimension of the irreducible indexed by lam via the
// hook length formula.
BigInt hook_length_dimension(const Partition& lam) {
    const Partition conj = conjugate(lam);
    BigInt hooks = 1;
    for (std::size_t r = 0; r < lam.length(); ++r)
        for (unsigned c = 0; c < lam.parts()[r]; ++c) {
            const unsigned arm = lam.parts()[r] - c - 1;
            const unsigned leg = conj.parts()[c] - static_cast<unsigned>(r) - 1;
            hooks *= (arm + leg + 1);
        }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), lam.weight());
    return fact / hooks;
}

PSeries half_p11_plus_half_p2() {
    PSeries f(2);
    f.add(Partition{1, 1}, make_rational(1, 2));
    f.add(Partition{2}, make_rational(1, 2));
    return f;
}

}  // namespace

TEST_CASE("character special values") {
    CHECK(chars().character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    for (unsigned n = 1; n <= 8; ++n) {
        const Partition row{n};
        const Partition col(std::vector<unsigned>(n, 1));
        for (const Partition& mu : partitions_of(n)) {
            CHECK(chars().character(row, mu) == 1);
            const int sign = ((n - mu.length()) % 2 == 0) ? 1 : -1;
            CHECK(chars().character(col, mu) == sign);
        }
    }
    CHECK_THROWS(chars().character(Partition{2}, Partition{3}));
}

TEST_CASE("character dimension column matches the hook length formula") {
    for (unsigned n = 1; n <= 10; ++n) {
        const Partition ones(std::vector<unsigned>(n, 1));
        for (const Partition& lam : partitions_of(n))
            CHECK(chars().character(lam, ones) == hook_length_dimension(lam));
    }
}

TEST_CASE("column orthogonality up to n = 10") {
    for (unsigned n = 1; n <= 10; ++n) {
        std::vector<Partition> all;
        for (const Partition& p : partitions_of(n)) all.push_back(p);
        for (const auto& lam : all)
            for (const auto& nu : all) {
                BigRational sum(0);
                for (const auto& mu : all) {
                    const BigInt a = chars().character(lam, mu);
                    const BigInt b = chars().character(nu, mu);
                    if (a != 0 && b != 0) sum += make_rational(a * b, z_of(mu));
                }
                CHECK(sum == BigRational(lam == nu ? 1 : 0));
            }
    }
}

TEST_CASE("schur_to_p of the degree-2 basis") {
    const PSeries s2 = schur_to_p(Partition{2}, chars());
    CHECK(s2.coeff(Partition{1, 1}) == make_rational(1, 2));
    CHECK(s2.coeff(Partition{2}) == make_rational(1, 2));
    CHECK(s2.term_count() == 2);

    const PSeries s11 = schur_to_p(Partition{1, 1}, chars());
    CHECK(s11.coeff(Partition{1, 1}) == make_rational(1, 2));
    CHECK(s11.coeff(Partition{2}) == make_rational(-1, 2));

    const PSeries s1 = schur_to_p(Partition{1}, chars());
    CHECK(s1.coeff(Partition{1}) == BigRational(1));
    CHECK(s1.term_count() == 1);
}

TEST_CASE("p_to_schur inverts schur_to_p on the Schur basis up to n = 14") {
    for (unsigned n = 0; n <= 14; ++n)
        for (const Partition& lam : partitions_of(n)) {
            const SchurExpansion back = p_to_schur(schur_to_p(lam, chars()), chars());
            REQUIRE(back.terms().size() == 1);
            CHECK(back.coeff(lam) == 1);
        }
}

TEST_CASE("p_to_schur of (p11 + p2)/2 recovers s_2") {
    const SchurExpansion s = p_to_schur(half_p11_plus_half_p2(), chars());
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(Partition{2}) == 1);
}

TEST_CASE("p_to_schur rejects non-integral projections") {
    PSeries f(1);
    f.add(Partition{1}, make_rational(1, 2));
    CHECK_THROWS(p_to_schur(f, chars()));
}

TEST_CASE("p_multiply") {
    PSeries p2(2), p1(1);
    p2.add(Partition{2}, BigRational(1));
    p1.add(Partition{1}, BigRational(1));
    const PSeries prod = p_multiply(p2, p1);
    CHECK(prod.coeff(Partition{2, 1}) == BigRational(1));
    CHECK(prod.term_count() == 1);

    const PSeries f = half_p11_plus_half_p2();
    CHECK(p_multiply(f, PSeries::unit()) == f);

    const PSeries sq = p_multiply(f, f);
    CHECK(sq.coeff(Partition{1, 1, 1, 1}) == make_rational(1, 4));
    CHECK(sq.coeff(Partition{2, 1, 1}) == make_rational(1, 2));
    CHECK(sq.coeff(Partition{2, 2}) == make_rational(1, 4));
    CHECK(sq.term_count() == 3);
}

TEST_CASE("schur products are Schur positive up to total degree 12") {
    for (unsigned a = 1; a <= 6; ++a)
        for (unsigned b = a; a + b <= 12; ++b)
            for (const Partition& mu : partitions_of(a))
                for (const Partition& nu : partitions_of(b)) {
                    SchurExpansion sm(a), sn(b);
                    sm.add(mu, 1);
                    sn.add(nu, 1);
                    const SchurExpansion prod = schur_product(sm, sn, chars());
                    CHECK(!prod.zero());
                    for (const auto& [lam, c] : prod.terms()) CHECK(c > 0);
                }
}

TEST_CASE("omega swaps rows and columns") {
    const SchurExpansion img = p_to_schur(omega(schur_to_p(Partition{2}, chars())), chars());
    CHECK(img.terms().size() == 1);
    CHECK(img.coeff(Partition{1, 1}) == 1);

    for (unsigned n = 1; n <= 12; ++n)
        for (const Partition& lam : partitions_of(n))
            CHECK(omega(omega(schur_to_p(lam, chars()))) == schur_to_p(lam, chars()));
}

TEST_CASE("omega conjugates the support of random Schur positive functions") {
    std::mt19937 rng(20240817);
    for (unsigned trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + rng() % 11;  // degree in [2, 12]
        std::vector<Partition> all;
        for (const Partition& p : partitions_of(n)) all.push_back(p);
        SchurExpansion f(n);
        const unsigned picks = 1 + rng() % 4;
        for (unsigned i = 0; i < picks; ++i)
            f.add(all[rng() % all.size()], 1 + rng() % 5);

        const SchurExpansion img = p_to_schur(omega(schur_expansion_to_p(f, chars())), chars());
        REQUIRE(img.terms().size() == f.terms().size());
        for (const auto& [lam, c] : f.terms()) CHECK(img.coeff(conjugate(lam)) == c);
    }
}

TEST_CASE("SchurExpansion JSON serialization is ordered and flat") {
    SchurExpansion f(4);
    f.add(Partition{2, 2}, 1);
    f.add(Partition{4}, 1);
    CHECK(f.to_json() == "{\"degree\":4,\"[4]\":1,\"[2,2]\":1}");
}
