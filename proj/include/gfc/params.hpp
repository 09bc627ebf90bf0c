#pragma once

#include "gfc/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gfc {

// Genus of F_{k,n}: 1 + k^(n-1)/2 * [(k-1)(n-1) - 2]. Requires k, n >= 2 and
// (k-1)(n-1) > 1; throws std::invalid_argument otherwise.
std::int64_t genus(int k, int n);

// dim V_m: g for m = 1, (2m-1)(g-1) for m >= 2.
std::int64_t dim_Vm(int k, int n, int m);

struct HilbertNumbers {
    std::int64_t genus = 0;
    std::vector<std::int64_t> d; // d[m-1] = dim V_m
};

HilbertNumbers hilbert_numbers(int k, int n, int max_m);

// Default lower bound for the prime search: max(10*k*n, 101), overridable
// through the GFC_DEFAULT_PRIME_BOUND environment variable.
std::uint64_t default_prime_bound(int k, int n);

struct CurveParams {
    int k = 0;
    int n = 0;
    std::vector<Elem> lambda; // lambda[0] = 1, size n-1
    Elem p = 0;
    Elem zeta = 0;
    bool plane_quintic = false; // (k,n) = (5,2)

    PrimeField field() const { return PrimeField(p); }
    // lambda_i for relation index i in 1..n-1
    Elem lambda_at(int i) const { return lambda.at(static_cast<std::size_t>(i - 1)); }
};

struct LambdaSeed {
    std::uint64_t seed = 1;
};
using LambdaSpec = std::variant<std::vector<std::int64_t>, LambdaSeed>;

struct AutoPrime {
    std::optional<std::uint64_t> min_bound;
};
using PrimeSpec = std::variant<std::uint64_t, AutoPrime>;

// Validates (k,n), resolves the prime and root of unity and draws or checks the
// lambda values. Explicit lambda lists carry all n-1 values with lambda_1 = 1.
CurveParams make_curve_params(int k, int n, const LambdaSpec& lambda_spec, const PrimeSpec& prime_spec);

// Same lambda integers (as representatives) over another prime.
CurveParams with_prime(const CurveParams& params, Elem p);

void validate(const CurveParams& params);

std::string describe(const CurveParams& params);

} // namespace gfc
