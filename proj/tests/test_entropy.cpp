#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qentropy/entropy.hpp"

using namespace qentropy;

namespace {

Distribution random_distribution(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
        x = -std::log1p(-unit(rng));
        sum += x;
    }
    for (double& x : v) x /= sum;
    return Distribution::make(v);
}

// Product-form oracle for the Jizba-Korbel entropy, full support only.
double jizba_korbel_product_form(const Distribution& p, double q) {
    const Distribution w = escort(p, q);
    double prod = 1.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        prod *= std::pow(p[k], (q - 1.0) * w[k]);
    }
    return (prod - 1.0) / (1.0 - q);
}

} // namespace

TEST_CASE("shannon entropy") {
    CHECK(shannon(Distribution::make({1.0, 0.0})) == 0.0);
    CHECK(shannon(Distribution::make({0.5, 0.5})) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(shannon(Distribution::make({0.5, 0.25, 0.25})) ==
          doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("nath entropy") {
    const EntropyParams q2{.q = 2.0, .tau = -1.0};
    CHECK(nath(Distribution::make({1.0, 0.0, 0.0}), q2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(nath(Distribution::make({0.5, 0.25, 0.25}), q2) ==
          doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-15));
    // Uniform closed form sum p^q = n^{1-q}.
    for (std::size_t n : {2u, 3u, 5u}) {
        for (double q : {0.5, 2.0, 3.0}) {
            CHECK(nath(Distribution::uniform(n), EntropyParams{.q = q, .tau = -1.0}) ==
                  doctest::Approx(std::log2(double(n))).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(nath(Distribution::make({0.5, 0.5}), EntropyParams{.q = -1.0}),
                    invalid_parameter);
}

TEST_CASE("corrected entropy") {
    const EntropyParams q2{.q = 2.0, .tau = -1.0};
    CHECK(corrected(Distribution::make({1.0, 0.0}), q2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(corrected(Distribution::make({0.5, 0.25, 0.25}), q2) ==
          doctest::Approx(0.625).epsilon(1e-14));
    CHECK(corrected(Distribution::make({0.5, 0.5}), q2) ==
          doctest::Approx(h_map(1.0, 2.0)).epsilon(1e-15));
}

TEST_CASE("aczel-daroczy entropy") {
    CHECK(aczel_daroczy(Distribution::make({0.25, 0.25, 0.5, 0.0}), 2.0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    for (double q : {0.5, 1.0, 2.0, 3.0}) {
        CHECK(aczel_daroczy(Distribution::make({0.5, 0.5}), q) ==
              doctest::Approx(1.0).epsilon(1e-14));
        CHECK(aczel_daroczy(Distribution::make({1.0, 0.0}), q) == 0.0);
    }
}

TEST_CASE("jizba-korbel entropy") {
    for (double q : {0.5, 2.0, 3.0}) {
        CHECK(jizba_korbel(Distribution::make({0.5, 0.5}), q) ==
              doctest::Approx(h_map(1.0, q)).epsilon(1e-14));
        CHECK(jizba_korbel(Distribution::make({1.0, 0.0}), q) == 0.0);
    }
    CHECK(jizba_korbel(Distribution::make({0.5, 0.25, 0.25}), 2.0) ==
          doctest::Approx(1.0 - std::pow(2.0, -4.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("tsallis entropy") {
    CHECK(tsallis(Distribution::make({0.5, 0.5}), 2.0) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK(tsallis(Distribution::make({0.5, 0.25, 0.25}), 2.0) ==
          doctest::Approx(0.625).epsilon(1e-14));
    CHECK(tsallis(Distribution::make({1.0, 0.0}), 0.7) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("g-class entropy") {
    const Distribution coin = Distribution::make({0.5, 0.5});
    for (double q : {0.5, 2.0, 3.0}) {
        for (double lambda : {-1.0, 0.0, 1.0}) {
            CHECK(g_class(coin, q, lambda) == doctest::Approx(h_map(1.0, q)).epsilon(1e-13));
        }
    }
    const Distribution p = Distribution::make({0.5, 0.25, 0.25});
    CHECK(g_class(p, 2.0, 0.0) == doctest::Approx(jizba_korbel(p, 2.0)).epsilon(1e-15));
    CHECK(g_class(p, 2.0, 1.0) == doctest::Approx(0.625).epsilon(1e-13));
}

TEST_CASE("information content") {
    CHECK(info_content(1.0, 2.0) == 0.0);
    CHECK(info_content(0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(info_content(0.25, 2.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(info_content(0.25, 2.0) ==
          doctest::Approx(q_add(0.5, 0.5, 2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(info_content(0.0, 2.0), domain_error);
    CHECK_THROWS_AS(info_content(1.5, 2.0), domain_error);
}

TEST_CASE("factorization D = h o N and Dtilde = h o Stilde") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 2000; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 5);
        for (double q : {0.5, 2.0, 3.0}) {
            for (double tau : {-0.5, -1.0, -2.0}) {
                const EntropyParams params{.q = q, .tau = tau};
                const double direct = corrected(p, params);
                const double factored = h_map(nath(p, params), q);
                CHECK(std::abs(direct - factored) <= 1e-12 * (1.0 + std::abs(direct)));
            }
            const double jk = jizba_korbel(p, q);
            const double factored = h_map(aczel_daroczy(p, q), q);
            CHECK(std::abs(jk - factored) <= 1e-12 * (1.0 + std::abs(jk)));
        }
    }
}

TEST_CASE("jizba-korbel matches the product-form oracle on full support") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 4);
        for (double q : {0.5, 2.0, 3.0}) {
            CHECK(jizba_korbel(p, q) ==
                  doctest::Approx(jizba_korbel_product_form(p, q)).epsilon(1e-10));
        }
    }
}

TEST_CASE("q -> 1 collapse to shannon") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 4);
        const double h = shannon(p);
        for (double q : {1.0 - 1e-6, 1.0 + 1e-6}) {
            for (double tau : {-0.5, -1.0, -2.0}) {
                CHECK(std::abs(nath(p, {.q = q, .tau = tau}) - (-tau) * h) <= 1e-4);
            }
            CHECK(std::abs(aczel_daroczy(p, q) - h) <= 1e-4);
            // The h-composed families approach ln2 * shannon (the nats-scaled
            // member of the class); their q = 1 branches are the bits-scaled
            // member. Stability, not branch agreement, is what q -> 1 tests.
            const double nats = std::numbers::ln2 * h;
            CHECK(std::abs(tsallis(p, q) - nats) <= 1e-4);
            CHECK(std::abs(jizba_korbel(p, q) - nats) <= 1e-4);
            CHECK(std::abs(g_class(p, q, 0.0) - nats) <= 1e-4);
        }
    }
}

TEST_CASE("additivity and composability on direct products") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 500; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 3);
        const Distribution q_dist = random_distribution(rng, 2 + (trial / 3) % 3);
        const Distribution prod = direct_product(p, q_dist);
        for (double q : {0.5, 2.0, 3.0}) {
            for (double tau : {-0.5, -1.0, -2.0}) {
                const EntropyParams params{.q = q, .tau = tau};
                CHECK(std::abs(nath(prod, params) - nath(p, params) - nath(q_dist, params)) <=
                      1e-10);
                CHECK(std::abs(corrected(prod, params) -
                               q_add(corrected(p, params), corrected(q_dist, params), q)) <=
                      1e-10);
            }
            CHECK(std::abs(jizba_korbel(prod, q) -
                           q_add(jizba_korbel(p, q), jizba_korbel(q_dist, q), q)) <= 1e-10);
            for (double lambda : {-1.0, 0.0, 1.0}) {
                CHECK(std::abs(g_class(prod, q, lambda) -
                               q_add(g_class(p, q, lambda), g_class(q_dist, q, lambda), q)) <=
                      1e-10);
            }
        }
    }
}

TEST_CASE("expandability is exact for every family") {
    std::mt19937_64 rng(53);
    const EntropyParams params{.q = 2.0, .tau = -1.5, .lambda = 1.0};
    for (int trial = 0; trial < 200; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 4);
        const Distribution padded = expand(p);
        for (auto family :
             {EntropyFamily::Shannon, EntropyFamily::Nath, EntropyFamily::Corrected,
              EntropyFamily::JizbaKorbel, EntropyFamily::AczelDaroczy,
              EntropyFamily::Tsallis, EntropyFamily::GClass}) {
            CHECK(evaluate(family, padded, params) == evaluate(family, p, params));
        }
    }
}

TEST_CASE("maximality at the uniform distribution") {
    std::mt19937_64 rng(59);
    // Combos where maximality holds mathematically. The escort-weighted
    // families lose it below q = 1 (see the audit tests), so their grid
    // starts at 1.
    for (std::size_t n = 2; n <= 6; ++n) {
        for (double q : {0.5, 1.0, 2.0, 3.0}) {
            const EntropyParams params{.q = q, .tau = -1.0};
            std::vector<EntropyFamily> families{EntropyFamily::Shannon, EntropyFamily::Nath,
                                                EntropyFamily::Corrected,
                                                EntropyFamily::Tsallis};
            if (q >= 1.0) {
                families.push_back(EntropyFamily::JizbaKorbel);
                families.push_back(EntropyFamily::AczelDaroczy);
                families.push_back(EntropyFamily::GClass);
            }
            const Distribution uniform = Distribution::uniform(n);
            for (auto family : families) {
                const double bound = evaluate(family, uniform, params);
                for (int trial = 0; trial < 1000; ++trial) {
                    const Distribution p = random_distribution(rng, n);
                    CHECK(evaluate(family, p, params) <= bound + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("nonnegativity") {
    std::mt19937_64 rng(61);
    const EntropyParams params{.q = 2.0, .tau = -0.5};
    for (int trial = 0; trial < 500; ++trial) {
        const Distribution p = random_distribution(rng, 2 + trial % 5);
        for (auto family :
             {EntropyFamily::Shannon, EntropyFamily::Nath, EntropyFamily::Corrected,
              EntropyFamily::JizbaKorbel, EntropyFamily::AczelDaroczy,
              EntropyFamily::Tsallis, EntropyFamily::GClass}) {
            CHECK(evaluate(family, p, params) >= -1e-12);
        }
    }
}

TEST_CASE("family names round-trip") {
    for (auto family :
         {EntropyFamily::Shannon, EntropyFamily::Nath, EntropyFamily::Corrected,
          EntropyFamily::JizbaKorbel, EntropyFamily::AczelDaroczy, EntropyFamily::Tsallis,
          EntropyFamily::GClass}) {
        CHECK(family_from_name(family_name(family)) == family);
    }
    CHECK_THROWS_AS(family_from_name("renyi"), invalid_parameter);
}
