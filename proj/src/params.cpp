#include "gfc/params.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gfc {

namespace {

std::int64_t ipow(std::int64_t b, int e)
{
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

void require_kn(int k, int n)
{
    if (k < 2 || n < 2)
        throw std::invalid_argument("parameters require k >= 2 and n >= 2");
}

} // namespace

std::int64_t genus(int k, int n)
{
    require_kn(k, n);
    const std::int64_t bracket = static_cast<std::int64_t>(k - 1) * (n - 1) - 2;
    if (bracket < 0)
        throw std::invalid_argument("genus: (k-1)(n-1) must exceed 1");
    const std::int64_t numerator = ipow(k, n - 1) * bracket;
    if (numerator % 2 != 0)
        throw std::logic_error("genus: k^(n-1)[(k-1)(n-1)-2] is odd");
    return 1 + numerator / 2;
}

std::int64_t dim_Vm(int k, int n, int m)
{
    if (m < 1)
        throw std::invalid_argument("dim_Vm: m must be >= 1");
    const auto g = genus(k, n);
    if (m == 1)
        return g;
    return (2 * static_cast<std::int64_t>(m) - 1) * (g - 1);
}

HilbertNumbers hilbert_numbers(int k, int n, int max_m)
{
    HilbertNumbers out;
    out.genus = genus(k, n);
    for (int m = 1; m <= max_m; ++m)
        out.d.push_back(dim_Vm(k, n, m));
    return out;
}

std::uint64_t default_prime_bound(int k, int n)
{
    if (const char* env = std::getenv("GFC_DEFAULT_PRIME_BOUND")) {
        char* end = nullptr;
        auto v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v >= 2)
            return v;
    }
    return std::max<std::uint64_t>(10ULL * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n), 101);
}

void validate(const CurveParams& c)
{
    require_kn(c.k, c.n);
    if (static_cast<long>(c.k - 1) * (c.n - 1) <= 2)
        throw std::invalid_argument("(k-1)(n-1) must exceed 2 (non-hyperelliptic range)");
    PrimeField F(c.p);
    if (c.p % static_cast<Elem>(c.k) != 1)
        throw std::invalid_argument("prime must satisfy p = 1 (mod k)");
    if (F.order(c.zeta) != static_cast<std::uint64_t>(c.k))
        throw std::invalid_argument("zeta must have exact order k");
    if (c.lambda.size() != static_cast<std::size_t>(c.n - 1))
        throw std::invalid_argument("lambda must have n-1 entries");
    if (c.lambda[0] != 1)
        throw std::invalid_argument("lambda_1 must equal 1");
    std::set<Elem> seen;
    for (std::size_t i = 0; i < c.lambda.size(); ++i) {
        const Elem l = c.lambda[i];
        if (l >= c.p)
            throw std::invalid_argument("lambda values must be reduced mod p");
        if (i > 0 && (l == 0 || l == 1))
            throw std::invalid_argument("lambda_i must avoid 0 and 1 for i >= 2");
        if (!seen.insert(l).second)
            throw std::invalid_argument("lambda values must be pairwise distinct");
    }
}

CurveParams make_curve_params(int k, int n, const LambdaSpec& lambda_spec, const PrimeSpec& prime_spec)
{
    require_kn(k, n);
    if (static_cast<long>(k - 1) * (n - 1) <= 2)
        throw std::invalid_argument("(k-1)(n-1) must exceed 2 (non-hyperelliptic range)");

    CurveParams c;
    c.k = k;
    c.n = n;
    if (const auto* explicit_p = std::get_if<std::uint64_t>(&prime_spec)) {
        if (!is_prime(*explicit_p))
            throw std::invalid_argument("prime " + std::to_string(*explicit_p) + " is not prime");
        if (*explicit_p % static_cast<std::uint64_t>(k) != 1)
            throw std::invalid_argument("prime must satisfy p = 1 (mod k)");
        c.p = *explicit_p;
        c.zeta = root_of_unity(c.p, k);
    } else {
        const auto& a = std::get<AutoPrime>(prime_spec);
        auto pr = find_prime_and_root(k, a.min_bound.value_or(default_prime_bound(k, n)));
        c.p = pr.p;
        c.zeta = pr.zeta;
    }
    PrimeField F(c.p);

    if (const auto* values = std::get_if<std::vector<std::int64_t>>(&lambda_spec)) {
        if (values->size() != static_cast<std::size_t>(n - 1))
            throw std::invalid_argument("lambda list must have n-1 = " + std::to_string(n - 1) + " entries");
        for (auto v : *values)
            c.lambda.push_back(F.reduce(v));
    } else {
        const auto seed = std::get<LambdaSeed>(lambda_spec).seed;
        if (c.p < static_cast<Elem>(n) + 1)
            throw std::invalid_argument("prime too small to draw distinct lambda values");
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Elem> dist(0, c.p - 1);
        c.lambda.push_back(1);
        std::set<Elem> used{0, 1};
        while (c.lambda.size() < static_cast<std::size_t>(n - 1)) {
            const Elem l = dist(rng);
            if (used.insert(l).second)
                c.lambda.push_back(l);
        }
    }
    c.plane_quintic = (k == 5 && n == 2);
    validate(c);
    return c;
}

CurveParams with_prime(const CurveParams& params, Elem p)
{
    std::vector<std::int64_t> values(params.lambda.begin(), params.lambda.end());
    return make_curve_params(params.k, params.n, values, PrimeSpec{p});
}

std::string describe(const CurveParams& c)
{
    std::ostringstream os;
    os << "F_{" << c.k << "," << c.n << "} over F_" << c.p << " (zeta=" << c.zeta << ", lambda=";
    for (std::size_t i = 0; i < c.lambda.size(); ++i)
        os << (i ? "," : "") << c.lambda[i];
    os << ")";
    return os.str();
}

} // namespace gfc
