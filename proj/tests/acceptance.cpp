// Acceptance suite: one PASS/FAIL line per criterion.
#include "gfc/canonical_ideal.hpp"
#include "gfc/curve.hpp"
#include "gfc/index_sets.hpp"
#include "gfc/params.hpp"
#include "gfc/representations.hpp"


#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gfc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
};

std::string curve_name(int k, int n)
{
    return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

std::vector<std::pair<int, int>> grid(int kmax, int nmax)
{
    std::vector<std::pair<int, int>> out;
    for (int k = 2; k <= kmax; ++k)
        for (int n = 2; n <= nmax; ++n)
            if ((k - 1) * (n - 1) > 2)
                out.emplace_back(k, n);
    return out;
}

CurveParams curve(int k, int n)
{
    return make_curve_params(k, n, LambdaSeed{1}, AutoPrime{});
}

Outcome genus_and_hilbert()
{
    Outcome o;
    o.require(genus(2, 4) == 5, "genus(2,4) != 5");
    for (auto [k, n] : grid(6, 6))
        for (int m = 1; m <= 6; ++m) {
            const auto size = static_cast<std::int64_t>(enumerate_Im(k, n, m).size());
            o.require(size == dim_Vm(k, n, m), "|I^(" + std::to_string(m) + ")| on " + curve_name(k, n));
        }
    return o;
}

Outcome nu_oracle()
{
    Outcome o;
    for (auto [k, n] : grid(4, 4))
        for (int m = 1; m <= 4; ++m) {
            const auto closed = nu_table(k, n, m);
            const auto brute = nu_bruteforce_table(k, n, m);
            o.require(closed.values.size() == all_characters(k, n).size(), "label count on " + curve_name(k, n));
            o.require(closed.values == brute.values, "nu m=" + std::to_string(m) + " on " + curve_name(k, n));
        }
    return o;
}

Outcome sum_rules()
{
    Outcome o;
    for (auto [k, n] : grid(4, 4)) {
        const auto g = genus(k, n);
        for (int m = 1; m <= 4; ++m)
            o.require(nu_table(k, n, m).total() == dim_Vm(k, n, m), "sum nu m=" + std::to_string(m) + " on " + curve_name(k, n));
        for (int d = 1; d <= 3; ++d)
            o.require(mu_table(k, n, d).total() == binomial(g + d - 1, d), "sum mu d=" + std::to_string(d) + " on " + curve_name(k, n));
    }
    return o;
}

Outcome standard_monomials(const std::map<std::pair<int, int>, Degree2Report>& reports)
{
    Outcome o;
    for (const auto& [kn, rep] : reports) {
        const auto [k, n] = kn;
        o.require(standard_set_identity(k, n), "standard set identity on " + curve_name(k, n));
        o.require(rep.standard_monomial_count == rep.d2,
                  "standard count " + std::to_string(rep.standard_monomial_count) + " vs |I^(2)| " + std::to_string(rep.d2) + " on " +
                      curve_name(k, n));
    }
    return o;
}

Outcome degree2_kernel()
{
    Outcome o;
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 3}, {4, 2}, {3, 4}}) {
        const auto first = curve(k, n);
        const auto second = with_prime(first, find_prime_and_root(k, first.p + 1).p);
        for (const auto& c : {first, second}) {
            const auto rep = verify_degree2_kernel(c, 50);
            const auto where = curve_name(k, n) + " p=" + std::to_string(c.p);
            o.require(rep.phi2_rank == rep.d2, "rank phi2 != d2 on " + where);
            o.require(rep.generators_in_kernel_symbolic, "symbolic kernel membership on " + where);
            o.require(rep.generators_vanish_at_points && rep.points_evaluated >= 50, "pointwise vanishing on " + where);
            o.require(rep.span_rank == rep.dim_S2 - rep.d2, "span rank on " + where);
        }
    }
    return o;
}

Outcome syzygy_decomposition(const std::map<std::pair<int, int>, Degree2Report>& reports)
{
    Outcome o;
    for (const auto& [kn, rep] : reports) {
        const auto [k, n] = kn;
        for (const auto& label : all_characters(k, n)) {
            const auto mu2 = mu(k, n, 2, label);
            const auto nu2 = nu_closed(k, n, 2, label);
            auto it = rep.per_character.find(label);
            const auto dim = it == rep.per_character.end() ? 0 : static_cast<std::int64_t>(it->second);
            o.require(mu2 - nu2 >= 0, "negative mu-nu at " + to_string(label) + " on " + curve_name(k, n));
            o.require(dim == mu2 - nu2, "dim at " + to_string(label) + " on " + curve_name(k, n));
        }
    }
    return o;
}

Outcome equivariance()
{
    Outcome o;
    std::mt19937_64 rng(2024);
    const std::vector<std::pair<int, int>> curves{{2, 4}, {3, 3}, {4, 2}, {3, 4}, {5, 3}};
    for (int trial = 0; trial < 100; ++trial) {
        const auto [k, n] = curves[static_cast<std::size_t>(trial) % curves.size()];
        const auto c = params_with_points(curve(k, n), 40);
        const auto F = c.field();
        const auto pts = sample_points(c, 40).points;
        const int m = 1 + static_cast<int>(rng() % 3);
        const auto basis = enumerate_Im(k, n, m);
        const auto& pt = pts[rng() % pts.size()];
        const auto& t = basis.members[rng() % basis.size()];
        std::vector<int> e(static_cast<std::size_t>(n - 1));
        for (auto& v : e)
            v = static_cast<int>(rng() % static_cast<std::uint64_t>(k));
        const auto g = GroupElement::make(k, static_cast<int>(rng() % static_cast<std::uint64_t>(k)), e);

        const auto before = evaluate_theta(F, pt, t);
        const auto after = evaluate_theta(F, act(c, g, pt), t);
        // sigma^*(dx) = zeta^e1 dx, so the function part picks up zeta^(-e1 m)
        const auto exponent = mod(action_exponent(k, m, t, g) - g.e1 * m, k);
        o.require(after == F.mul(F.pow(c.zeta, static_cast<std::uint64_t>(exponent)), before),
                  "trial " + std::to_string(trial) + " " + to_string(t) + " on " + curve_name(k, n));
    }
    return o;
}

Outcome property_suites()
{
    Outcome o;
    for (auto [k, n] : grid(4, 4))
        for (int m = 1; m <= 3; ++m)
            for (const auto& t : enumerate_Im(k, n, m))
                o.require(divisor_of_theta(k, n, m, t).effective(), "holomorphy " + to_string(t) + " on " + curve_name(k, n));

    const auto vars = enumerate_Im(3, 4, 1).members;
    std::mt19937_64 rng(77);
    auto random_monomial = [&] {
        std::vector<IndexTuple> f;
        for (auto d = 1 + rng() % 3; d > 0; --d)
            f.push_back(vars[rng() % vars.size()]);
        return MonomialKey::make(f);
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = random_monomial(), b = random_monomial(), c = random_monomial();
        o.require((compare_monomials(a, b) == 0) == (a == b), "antisymmetry");
        o.require((compare_monomials(a, b) < 0) == (compare_monomials(b, a) > 0), "asymmetry");
        if (compare_monomials(a, b) < 0 && compare_monomials(b, c) < 0)
            o.require(compare_monomials(a, c) < 0, "transitivity");
    }

    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 3}, {4, 2}, {3, 4}}) {
        const DegreeTwoSpace space(k, n);
        std::set<MonomialKey> images;
        for (const auto& t : space.points())
            images.insert(space.tau(t));
        o.require(images.size() == space.points().size(), "tau injectivity on " + curve_name(k, n));

        const auto c = curve(k, n);
        const auto parsed = parse_ideal_json(export_ideal(c, ExportFormat::Json));
        o.require(parsed.k == k && parsed.n == n && parsed.p == c.p && parsed.lambda == c.lambda, "export header on " + curve_name(k, n));
        o.require(parsed.variables == space.variables(), "export variables on " + curve_name(k, n));
        o.require(parsed.binomials == generate_binomials(space), "export binomials on " + curve_name(k, n));
        o.require(parsed.trinomials == generate_trinomials(c, space), "export trinomials on " + curve_name(k, n));
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds; // 0 = no limit
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    std::map<std::pair<int, int>, Degree2Report> grid_reports;
    auto reports = [&]() -> const std::map<std::pair<int, int>, Degree2Report>& {
        if (grid_reports.empty())
            for (auto [k, n] : grid(4, 4))
                grid_reports.emplace(std::make_pair(k, n), verify_degree2_kernel(curve(k, n)));
        return grid_reports;
    };

    const std::vector<Criterion> criteria{
        {1, "genus and Hilbert numbers", 5, genus_and_hilbert},
        {2, "nu closed form equals brute force", 10, nu_oracle},
        {3, "character sum rules", 30, sum_rules},
        {4, "standard monomials match I^(2)", 0, [&] { return standard_monomials(reports()); }},
        {5, "degree-2 kernel generated by G_2", 60, degree2_kernel},
        {6, "equivariant syzygy decomposition", 0, [&] { return syzygy_decomposition(reports()); }},
        {7, "evaluation/representation consistency", 0, equivariance},
        {8, "property suites", 0, property_suites},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds)
            o.require(false, "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << timing << ")";
        if (!o.ok)
            std::cout << ": " << o.detail;
        std::cout << "\n";
        failures += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
