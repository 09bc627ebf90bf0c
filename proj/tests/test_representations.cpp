#include "gfc/params.hpp"
#include "gfc/representations.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace gfc;

namespace {

// nu by the character inner product: (1/|H|) sum_g chi_V(g) conj(chi_h(g)),
// done with exponents mod k (sum of zeta^e over H vanishes unless e = 0).
std::int64_t nu_inner_product(int k, int n, int m, const CharacterLabel& h)
{
    const auto basis = oracle::brute_Im(k, n, m);
    std::int64_t hits = 0;
    for (const auto& t : basis) {
        std::int64_t trivial = 0;
        for (const auto& g : all_group_elements(k, n)) {
            long long e = static_cast<long long>(g.e1) * (t.r + m - h.h1);
            for (std::size_t j = 0; j < t.a.size(); ++j)
                e -= static_cast<long long>(t.a[j] + h.h[j]) * g.e[j];
            trivial += mod(e, k) == 0;
        }
        // the inner sum equals k^n exactly when every exponent vanishes
        hits += trivial == static_cast<std::int64_t>(all_group_elements(k, n).size());
    }
    return hits;
}

} // namespace

TEST_CASE("action_exponent")
{
    const IndexTuple t{0, {1, 1}};
    CHECK(action_exponent(3, 1, t, GroupElement::make(3, 0, {0, 0})) == 0);
    CHECK(action_exponent(3, 1, t, GroupElement::make(3, 1, {0, 0})) == 1);

    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(0, 9);
    for (int i = 0; i < 200; ++i) {
        const IndexTuple t1{d(rng), {d(rng), d(rng)}}, t2{d(rng), {d(rng), d(rng)}};
        const auto g = GroupElement::make(5, d(rng), {d(rng), d(rng)});
        const int m1 = 1 + d(rng), m2 = 1 + d(rng);
        CHECK(action_exponent(5, m1 + m2, t1 + t2, g) == mod(action_exponent(5, m1, t1, g) + action_exponent(5, m2, t2, g), 5));
    }
}

TEST_CASE("nu closed form examples")
{
    CHECK(nu_closed(3, 3, 1, CharacterLabel::make(3, 0, {0, 0})) == 0);
    CHECK(nu_closed_raw(3, 3, 1, CharacterLabel::make(3, 0, {0, 0})) == -1);
    CHECK(nu_closed(2, 4, 1, CharacterLabel::make(2, 1, {1, 1, 1})) == 1);
    CHECK(nu_bruteforce(2, 4, 1, CharacterLabel::make(2, 1, {1, 1, 1})) == 1);
}

TEST_CASE("nu closed form equals brute-force counting")
{
    for (int k = 2; k <= 5; ++k)
        for (int n = 2; n <= 5; ++n) {
            if ((k - 1) * (n - 1) <= 2 || genus(k, n) > 800)
                continue;
            for (int m = 1; m <= 4; ++m) {
                const auto bf = nu_bruteforce_table(k, n, m);
                std::int64_t total = 0;
                for (const auto& h : all_characters(k, n)) {
                    const auto v = nu_closed(k, n, m, h);
                    CHECK(v == bf.values.at(h));
                    CHECK(nu_closed_raw(k, n, m, h) >= -1);
                    total += v;
                }
                CHECK(total == dim_Vm(k, n, m));
            }
        }
}

TEST_CASE("brute force agrees with the character inner product")
{
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {4, 2}})
        for (int m = 1; m <= 3; ++m)
            for (const auto& h : all_characters(k, n))
                CHECK(nu_bruteforce(k, n, m, h) == nu_inner_product(k, n, m, h));
}

TEST_CASE("mu")
{
    CHECK(mu(2, 4, 1, CharacterLabel::make(2, 1, {1, 1, 1})) == 1);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {4, 2}, {2, 5}}) {
        const auto g = genus(k, n);
        for (const auto& h : all_characters(k, n))
            CHECK(mu(k, n, 1, h) == nu_closed(k, n, 1, h));
        for (int d = 1; d <= 3; ++d) {
            const auto table = mu_table(k, n, d);
            CHECK(table.total() == oracle::multichoose(g, d));
            if (d <= 2)
                for (const auto& h : all_characters(k, n))
                    CHECK(mu(k, n, d, h) == table.values.at(h));
        }
    }
}

TEST_CASE("syzygy multiplicities")
{
    for (const auto& h : all_characters(3, 3))
        CHECK(syzygy_multiplicity(3, 3, 1, h) == 0);
    CHECK(syzygy_table(2, 4, 2).total() == 3);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {2, 5}, {3, 4}, {4, 3}}) {
        const auto g = genus(k, n);
        const auto table = syzygy_table(k, n, 2);
        CHECK(table.total() == g * (g + 1) / 2 - 3 * (g - 1));
        for (const auto& [h, v] : table.values)
            CHECK(v >= 0);
    }
}

TEST_CASE("kind parsing")
{
    CHECK(parse_multiplicity_kind("mu") == MultiplicityKind::Mu);
    CHECK(to_string(MultiplicityKind::Syzygy) == "syzygy");
    CHECK_THROWS_AS(parse_multiplicity_kind("chi"), std::invalid_argument);
}
