#pragma once

#include "gfc/field.hpp"
#include "gfc/group.hpp"
#include "gfc/index_sets.hpp"
#include "gfc/linalg.hpp"
#include "gfc/params.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace gfc {

// Affine point of F_{k,n}: lambda_{j-1} + x^k + y_j^k = 0 for j = 2..n, all y_j != 0.
struct AffinePoint {
    Elem x = 0;
    std::vector<Elem> y; // y[j] is y_{j+2}

    auto operator<=>(const AffinePoint&) const = default;
};

bool on_curve(const CurveParams& params, const AffinePoint& pt);

// Coefficients of D_0, D_1, ..., D_n.
struct DivisorVector {
    std::vector<std::int64_t> c;

    std::int64_t degree_sum() const;
    bool effective() const;
    bool operator==(const DivisorVector&) const = default;
};

DivisorVector divisor_of_theta(int k, int n, int m, const IndexTuple& t);

// The three building blocks div(x), div(y_j) (j = 2..n) and div(dx).
DivisorVector divisor_of_x(int k, int n);
DivisorVector divisor_of_y(int k, int n, int j);
DivisorVector divisor_of_dx(int k, int n);

struct PointSample {
    std::vector<AffinePoint> points;
    bool shortfall = false; // fewer than requested exist over F_p
};

// Deterministic scan over x = 0, 1, ..., p-1 emitting every choice of k-th roots.
PointSample sample_points(const CurveParams& params, std::size_t count);

// sigma_(e1,e)(x, y) = (zeta^e1 x, zeta^e_j y_j)
AffinePoint act(const CurveParams& params, const GroupElement& g, const AffinePoint& pt);

// x^r * prod_j y_j^(-a_j); the dx^m factor is left out.
Elem evaluate_theta(const PrimeField& F, const AffinePoint& pt, const IndexTuple& t);

class InsufficientPoints : public std::runtime_error {
public:
    InsufficientPoints(std::size_t wanted, std::size_t found);
    std::size_t wanted;
    std::size_t found;
};

// Rank over F_p of the (points x basis) evaluation matrix of B^(m). With
// oversample > m(2g-2) points a full rank is guaranteed for independent
// differentials, since a nonzero m-differential has m(2g-2) zeros.
std::size_t basis_evaluation_rank(const CurveParams& params, int m, std::size_t oversample);
bool basis_rank_check(const CurveParams& params, int m, std::size_t oversample);

// Smallest valid prime >= floor whose curve has at least `needed` sampled points
// (same lambda representatives).
CurveParams params_with_points(const CurveParams& params, std::size_t needed);

} // namespace gfc
