// Unit tests for the ball arithmetic foundation, the prime sieve and the
// elementary multiplicative functions.

#include <catch2/catch_amalgamated.hpp>

#include <euprod/ball.hpp>
#include <euprod/primes.hpp>

#include <random>

using euprod::BallReal;

namespace {

// Brute-force primality for the sieve oracle.
bool is_prime_naive(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("primes_up_to matches direct enumeration") {
    CHECK(euprod::primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(euprod::primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(euprod::primes_up_to(1).empty());
    CHECK(euprod::primes_up_to(0).empty());

    auto p100 = euprod::primes_up_to(100);
    std::size_t count = 0;
    for (std::uint64_t n = 2; n <= 100; ++n)
        if (is_prime_naive(n)) ++count;
    CHECK(p100.size() == count);
    CHECK(p100.size() == 25);

    // crosses several segment boundaries
    auto big = euprod::primes_up_to(3'000'000);
    for (std::uint64_t n : {2'999'999ull, 2'097'152ull, 2'097'143ull, 2'097'133ull})
        CHECK(std::binary_search(big.begin(), big.end(), n) == is_prime_naive(n));
    CHECK(std::is_sorted(big.begin(), big.end()));
    CHECK(big.size() == 216816);  // pi(3e6)
}

TEST_CASE("mobius basics and properties") {
    CHECK(euprod::mobius(1) == 1);
    CHECK(euprod::mobius(6) == 1);
    CHECK(euprod::mobius(12) == 0);
    CHECK_THROWS_AS(euprod::mobius(0), std::domain_error);
    CHECK_THROWS_AS(euprod::mobius(-3), std::domain_error);

    // multiplicativity over random coprime pairs
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> dist(1, 10'000);
    int tested = 0;
    while (tested < 200) {
        long long m = dist(rng), n = dist(rng);
        if (std::gcd(m, n) != 1) continue;
        CHECK(euprod::mobius(m * n) == euprod::mobius(m) * euprod::mobius(n));
        ++tested;
    }

    // sum over divisors is the unit indicator
    for (long long n = 1; n <= 10'000; ++n) {
        long long s = 0;
        for (auto d : euprod::divisors(static_cast<std::uint64_t>(n)))
            s += euprod::mobius(static_cast<long long>(d));
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisor_count") {
    CHECK(euprod::divisor_count(1) == 1);
    CHECK(euprod::divisor_count(6) == 4);
    long long direct = 0;
    for (long long d = 1; d <= 96; ++d)
        if (96 % d == 0) ++direct;
    CHECK(euprod::divisor_count(96) == direct);
    CHECK(direct == 12);
    CHECK_THROWS_AS(euprod::divisor_count(0), std::domain_error);
}

TEST_CASE("ball enclosure under random rational expressions") {
    // Random +,-,*,/ ,integer-power expression DAGs evaluated both in exact
    // rational arithmetic and in low-precision balls; the exact value must
    // always lie in the enclosure.
    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> num(-50, 50), den(1, 30), op(0, 5), pw(-3, 3);

    for (int trial = 0; trial < 400; ++trial) {
        mpq_class xq(num(rng), den(rng));
        mpq_class yq(num(rng), den(rng));
        xq.canonicalize();
        yq.canonicalize();
        BallReal x = BallReal::from_q(xq, 24);
        BallReal y = BallReal::from_q(yq, 24);
        mpq_class expect;
        BallReal got(24);
        switch (op(rng)) {
            case 0:
                expect = xq + yq;
                got = x + y;
                break;
            case 1:
                expect = xq - yq;
                got = x - y;
                break;
            case 2:
                expect = xq * yq;
                got = x * y;
                break;
            case 3: {
                if (yq == 0) continue;
                expect = xq / yq;
                got = x / y;
                break;
            }
            case 4: {
                // nested: (x*y - x) / (y*y + 3)
                expect = (xq * yq - xq) / (yq * yq + 3);
                got = (x * y - x) / (y * y + BallReal::from_si(3, 24));
                break;
            }
            default: {
                if (xq <= 0) continue;
                int n = pw(rng);
                if (n == 0) n = 2;
                mpq_class p(1);
                for (int i = 0; i < std::abs(n); ++i) p *= xq;
                expect = n > 0 ? p : mpq_class(1) / p;
                got = euprod::pow_si(x, n);
                break;
            }
        }
        REQUIRE(got.contains(expect));
    }
}

TEST_CASE("ball division by zero-containing interval is rejected") {
    BallReal tiny = BallReal::zero_with_radius(mpq_class(1, 1000), 64);
    BallReal one = BallReal::from_si(1, 64);
    CHECK_THROWS_AS(one / tiny, std::domain_error);
    CHECK_THROWS_AS(euprod::log(tiny), std::domain_error);
    CHECK_THROWS_AS(euprod::log(BallReal::from_si(-2, 64)), std::domain_error);
    CHECK_THROWS_AS(euprod::sqrt(BallReal::from_si(-1, 64)), std::domain_error);
}

TEST_CASE("transcendental enclosures agree across precisions") {
    // Both precisions enclose the same exact quantity, so the low-precision
    // ball must contain the high-precision midpoint up to its tiny radius.
    auto cross_check = [](const BallReal& lo, const BallReal& hi) {
        REQUIRE(lo.overlaps(hi));
        REQUIRE(hi.rad_q() < lo.rad_q());
    };

    for (int k = 1; k <= 20; ++k) {
        mpq_class q(k * 7 + 1, k + 2);
        BallReal a24 = BallReal::from_q(q, 40);
        BallReal a300 = BallReal::from_q(q, 300);
        cross_check(euprod::exp(euprod::neg(a24)), euprod::exp(euprod::neg(a300)));
        cross_check(euprod::log(a24), euprod::log(a300));
        cross_check(euprod::sqrt(a24), euprod::sqrt(a300));
        cross_check(euprod::pow_si(a24, -3), euprod::pow_si(a300, -3));
    }
    cross_check(euprod::pi(40), euprod::pi(400));
}

TEST_CASE("pi and gamma reference values") {
    // pi to 40 digits
    BallReal p = euprod::pi(256);
    mpq_class lo("31415926535897932384626433832795028841971/10000000000000000000000000000000000000000");
    mpq_class hi("31415926535897932384626433832795028841972/10000000000000000000000000000000000000000");
    CHECK(p.upper_q() > lo);
    CHECK(p.lower_q() < hi);

    // Gamma(1/4) = 3.6256099082...
    BallReal g = euprod::gamma(BallReal::from_q(mpq_class(1, 4), 256));
    CHECK(g.upper_q() > mpq_class("36256099082/10000000000"));
    CHECK(g.lower_q() < mpq_class("36256099083/10000000000"));

    // Gamma(5) = 24 exactly inside the enclosure
    BallReal g5 = euprod::gamma(BallReal::from_si(5, 128));
    CHECK(g5.contains(mpq_class(24)));

    // fuzzy input spanning the minimum keeps a sound lower bound
    BallReal fuzzy(128);
    mpfr_set_d(fuzzy.mid_mut(), 1.46, MPFR_RNDN);
    fuzzy.inflate(mpq_class(1, 10));
    BallReal gf = euprod::gamma(fuzzy);
    CHECK(gf.lower_q() > mpq_class(884, 1000));
    CHECK(gf.upper_q() < mpq_class(1));
}

TEST_CASE("exp uses the derivative-bound radius") {
    BallReal a = BallReal::from_si(1, 128);
    a.inflate(mpq_class(1, 1024));
    BallReal e = euprod::exp(a);
    // radius must be at least exp(1)*rad and not wildly larger
    mpq_class r = e.rad_q();
    CHECK(r >= mpq_class(2718, 1000) * mpq_class(1, 1024) * mpq_class(99, 100));
    CHECK(r <= mpq_class(2722, 1000) * mpq_class(1, 1024) * mpq_class(102, 100));
}

TEST_CASE("PrecisionContext invariants") {
    euprod::PrecisionContext ctx(100, 12);
    CHECK(ctx.working_bits >= static_cast<mpfr_prec_t>((100 + 12) * 3.3219280948873623));
    CHECK_THROWS_AS(euprod::PrecisionContext(0, 5), std::domain_error);

    auto c2 = euprod::PrecisionContext::for_sum(50, 716);
    CHECK(c2.guard_digits == 13);
    auto c3 = euprod::PrecisionContext::for_sum(50, 1);
    CHECK(c3.guard_digits == 10);
}
