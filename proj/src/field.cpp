#include "gfc/field.hpp"

#include <stdexcept>
#include <string>

namespace gfc {

PrimeField::PrimeField(Elem p) : p_(p)
{
    if (p < 2 || p >= (Elem{1} << 31) || !is_prime(p))
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not a prime below 2^31");
}

Elem PrimeField::reduce(std::int64_t v) const
{
    auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const
{
    Elem result = 1 % p_;
    a %= p_;
    while (e > 0) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

Elem PrimeField::pow_signed(Elem a, std::int64_t e) const
{
    if (e >= 0)
        return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-e));
}

Elem PrimeField::inv(Elem a) const
{
    a %= p_;
    if (a == 0)
        throw std::domain_error("PrimeField::inv: zero has no inverse");
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::order(Elem a) const
{
    a %= p_;
    if (a == 0)
        throw std::domain_error("PrimeField::order: zero is not a unit");
    std::uint64_t ord = p_ - 1;
    for (auto q : prime_factors(p_ - 1)) {
        while (ord % q == 0 && pow(a, ord / q) == 1)
            ord /= q;
    }
    return ord;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

Elem least_primitive_root(Elem p)
{
    PrimeField F(p);
    if (p == 2)
        return 1;
    for (Elem g = 2; g < p; ++g)
        if (F.order(g) == p - 1)
            return g;
    throw std::logic_error("least_primitive_root: none found");
}

Elem root_of_unity(Elem p, int k)
{
    if (k < 1 || (p - 1) % static_cast<Elem>(k) != 0)
        throw std::invalid_argument("root_of_unity: k does not divide p-1");
    PrimeField F(p);
    Elem zeta = F.pow(least_primitive_root(p), (p - 1) / static_cast<Elem>(k));
    if (F.order(zeta) != static_cast<std::uint64_t>(k))
        throw std::logic_error("root_of_unity: order check failed");
    return zeta;
}

PrimeAndRoot find_prime_and_root(int k, std::uint64_t min_bound)
{
    if (k < 2)
        throw std::invalid_argument("find_prime_and_root: k must be >= 2");
    auto kk = static_cast<std::uint64_t>(k);
    std::uint64_t p = min_bound < 2 ? 2 : min_bound;
    while (!(p % kk == 1 % kk && is_prime(p)))
        ++p;
    return {p, root_of_unity(p, k)};
}

} // namespace gfc
