#pragma once

#include <cstdint>
#include <vector>

namespace gfc {

using Elem = std::uint64_t;

// Arithmetic in F_p for a runtime prime p < 2^31 (products fit in 64 bits).
class PrimeField {
public:
    explicit PrimeField(Elem p);

    Elem modulus() const { return p_; }

    Elem reduce(std::int64_t v) const;
    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem pow(Elem a, std::uint64_t e) const;
    // Negative exponents invert first; throws std::domain_error on 0^(-e).
    Elem pow_signed(Elem a, std::int64_t e) const;
    Elem inv(Elem a) const;

    // Order of a in F_p^*; throws on a = 0.
    std::uint64_t order(Elem a) const;

    bool operator==(const PrimeField&) const = default;

private:
    Elem p_;
};

bool is_prime(std::uint64_t n);

// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Least generator of F_p^*.
Elem least_primitive_root(Elem p);

struct PrimeAndRoot {
    Elem p;
    Elem zeta;
};

// Smallest prime p >= min_bound with p = 1 (mod k), together with
// zeta = gamma^((p-1)/k) for the least primitive root gamma.
PrimeAndRoot find_prime_and_root(int k, std::uint64_t min_bound);

// Root of unity of exact order k in F_p built from the least primitive root.
Elem root_of_unity(Elem p, int k);

} // namespace gfc
