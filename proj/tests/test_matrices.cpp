// Exact fixtures for the recursion matrices modulo 7 and modulo 3, the
// two-route construction of N_d, and the growth bound on N-products.

#include <catch2/catch_amalgamated.hpp>

#include <euprod/matrices.hpp>

#include <random>

using euprod::build_structure;
using euprod::RatMatrix;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("mod 7 recursion matrices") {
    auto S = build_structure(7);
    CHECK(euprod::build_m1(S) == from_rows({{6, 0, 0, 0}, {3, 3, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}}));
    CHECK(euprod::build_m_d(S, 2) == from_rows({{0, 3, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 0}}));
    CHECK(euprod::build_m_d(S, 3) == from_rows({{0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    CHECK(euprod::build_m_d(S, 6) == from_rows({{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
    // The N_d fixtures are forced by the identity M1 * N_d = d * M_d together
    // with the M1 and M_d tables above; each is also checked against that
    // identity below.
    CHECK(euprod::build_n_d(S, 2) ==
          from_rows({{0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}}));
    CHECK(euprod::build_n_d(S, 3) ==
          from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
    CHECK(euprod::build_n_d(S, 6) ==
          from_rows({{0, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 0, -1}, {0, 0, 0, 1}}));
    for (std::uint64_t d : {2, 3, 6})
        CHECK(euprod::build_m1(S) * euprod::build_n_d(S, d) ==
              euprod::build_m_d(S, d) * mpq_class(d));

    // closed-form inverse
    RatMatrix inv = euprod::build_m1_inverse(S);
    RatMatrix expect(4, 4);
    expect.at(0, 0) = mpq_class(1, 6);
    expect.at(1, 0) = mpq_class(-1, 6);
    expect.at(1, 1) = mpq_class(1, 3);
    expect.at(2, 0) = mpq_class(-1, 6);
    expect.at(2, 2) = mpq_class(1, 2);
    expect.at(3, 0) = mpq_class(1, 6);
    expect.at(3, 1) = mpq_class(-1, 3);
    expect.at(3, 2) = mpq_class(-1, 2);
    expect.at(3, 3) = 1;
    CHECK(inv == expect);
    CHECK(inv * euprod::build_m1(S) == RatMatrix::identity(4));
}

TEST_CASE("mod 3 M1 and the all-ones row") {
    auto S = build_structure(3);
    CHECK(euprod::build_m1(S) == from_rows({{2, 0}, {1, 1}}));
    // the row of the full group is all ones for every modulus
    for (std::uint32_t q : {4, 5, 8, 9, 12, 16, 21}) {
        auto Sq = build_structure(q);
        // only applies when the full group is cyclic, i.e. is a subgroup here
        if (Sq.subgroups.back().order != Sq.phi()) continue;
        RatMatrix m1 = euprod::build_m1(Sq);
        for (std::size_t j = 0; j < m1.cols(); ++j) CHECK(m1.at(m1.rows() - 1, j) == 1);
    }
}

TEST_CASE("lattice Moebius function") {
    auto S = build_structure(7);
    CHECK(euprod::lattice_mobius(S.subgroups[0], S.subgroups[1]) == -1);
    CHECK(euprod::lattice_mobius(S.subgroups[2], S.subgroups[2]) == 1);
    CHECK(euprod::lattice_mobius(S.subgroups[0], S.subgroups[3]) == 1);
    CHECK_THROWS_AS(euprod::lattice_mobius(S.subgroups[1], S.subgroups[2]), std::domain_error);
}

TEST_CASE("M1 inverse and two-route N_d agree for q <= 100") {
    for (std::uint32_t q = 3; q <= 100; ++q) {
        auto S = build_structure(q);
        RatMatrix m1 = euprod::build_m1(S);
        RatMatrix inv = euprod::build_m1_inverse(S);
        REQUIRE(m1 * inv == RatMatrix::identity(S.subgroups.size()));
        REQUIRE(inv * m1 == RatMatrix::identity(S.subgroups.size()));

        // triangularity is a consequence of the (order, lex) ordering
        for (std::size_t i = 0; i < m1.rows(); ++i) {
            REQUIRE(m1.at(i, i) > 0);
            for (std::size_t j = i + 1; j < m1.cols(); ++j) REQUIRE(m1.at(i, j) == 0);
        }

        for (std::uint64_t d : euprod::divisors(S.exponent)) {
            if (d == 1) continue;
            RatMatrix nd = euprod::build_n_d(S, d);
            REQUIRE(nd.is_integer());
            RatMatrix via_product = (inv * euprod::build_m_d(S, d)) * mpq_class(d);
            REQUIRE(nd == via_product);
        }
    }
}

TEST_CASE("entries of N-products are bounded by |G#|^(v-1)") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t q = 3 + rng() % 48;
        auto S = build_structure(q);
        std::vector<std::uint64_t> ds;
        for (std::uint64_t d : euprod::divisors(S.exponent))
            if (d > 1) ds.push_back(d);
        if (ds.empty()) continue;
        std::size_t v = 1 + rng() % 4;
        RatMatrix prod = euprod::build_n_d(S, ds[rng() % ds.size()]);
        for (std::size_t k = 1; k < v; ++k) prod = prod * euprod::build_n_d(S, ds[rng() % ds.size()]);
        mpq_class bound(1);
        for (std::size_t k = 1; k < v; ++k) bound *= mpq_class(S.n_classes());
        REQUIRE(prod.max_abs() <= bound);
    }
}

TEST_CASE("matrix application to ball vectors") {
    auto S = build_structure(7);
    RatMatrix inv = euprod::build_m1_inverse(S);
    std::vector<euprod::BallReal> v;
    for (int i = 1; i <= 4; ++i) v.push_back(euprod::BallReal::from_si(i, 64));
    auto w = inv.apply(v, 64);
    // row 3: 1/6 - 2/3 - 3/2 + 4 = 2
    CHECK(w[3].contains(mpq_class(2)));
    CHECK(w[0].contains(mpq_class(1, 6)));
}
