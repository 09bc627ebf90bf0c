#include "gfc/curve.hpp"

#include <string>
#include <unordered_map>

namespace gfc {

bool on_curve(const CurveParams& params, const AffinePoint& pt)
{
    const auto F = params.field();
    if (pt.y.size() != static_cast<std::size_t>(params.n - 1))
        return false;
    const Elem xk = F.pow(pt.x, static_cast<std::uint64_t>(params.k));
    for (std::size_t j = 0; j < pt.y.size(); ++j) {
        if (pt.y[j] == 0)
            return false;
        const Elem lhs = F.add(F.add(params.lambda[j], xk), F.pow(pt.y[j], static_cast<std::uint64_t>(params.k)));
        if (lhs != 0)
            return false;
    }
    return true;
}

std::int64_t DivisorVector::degree_sum() const
{
    std::int64_t s = 0;
    for (auto v : c)
        s += v;
    return s;
}

bool DivisorVector::effective() const
{
    for (auto v : c)
        if (v < 0)
            return false;
    return true;
}

DivisorVector divisor_of_theta(int k, int n, int m, const IndexTuple& t)
{
    if (m < 1)
        throw std::invalid_argument("divisor_of_theta: m must be >= 1");
    DivisorVector d;
    d.c.reserve(static_cast<std::size_t>(n + 1));
    d.c.push_back(t.weight() - 2 * m - t.r);
    d.c.push_back(t.r);
    for (int aj : t.a)
        d.c.push_back(static_cast<std::int64_t>(m) * (k - 1) - aj);
    return d;
}

DivisorVector divisor_of_x(int, int n)
{
    DivisorVector d{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)};
    d.c[0] = -1;
    d.c[1] = 1;
    return d;
}

DivisorVector divisor_of_y(int, int n, int j)
{
    if (j < 2 || j > n)
        throw std::invalid_argument("divisor_of_y: j must lie in 2..n");
    DivisorVector d{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0)};
    d.c[0] = -1;
    d.c[static_cast<std::size_t>(j)] = 1;
    return d;
}

DivisorVector divisor_of_dx(int k, int n)
{
    DivisorVector d{std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), k - 1)};
    d.c[0] = -2;
    d.c[1] = 0;
    return d;
}

PointSample sample_points(const CurveParams& params, std::size_t count)
{
    const auto F = params.field();
    const auto k = static_cast<std::uint64_t>(params.k);
    const Elem p = params.p;
    const auto len = static_cast<std::size_t>(params.n - 1);

    // one k-th root per k-th power residue
    std::unordered_map<Elem, Elem> root_of;
    for (Elem y = 1; y < p; ++y)
        root_of.emplace(F.pow(y, k), y);

    std::vector<Elem> zeta_pow(k);
    for (std::uint64_t i = 0; i < k; ++i)
        zeta_pow[i] = F.pow(params.zeta, i);

    PointSample out;
    std::vector<Elem> base(len);
    for (Elem x = 0; x < p && out.points.size() < count; ++x) {
        const Elem xk = F.pow(x, k);
        bool all_residues = true;
        for (std::size_t j = 0; j < len && all_residues; ++j) {
            const Elem target = F.neg(F.add(params.lambda[j], xk));
            auto it = target == 0 ? root_of.end() : root_of.find(target);
            if (it == root_of.end())
                all_residues = false;
            else
                base[j] = it->second;
        }
        if (!all_residues)
            continue;
        std::vector<std::uint64_t> choice(len, 0);
        while (out.points.size() < count) {
            AffinePoint pt{x, std::vector<Elem>(len)};
            for (std::size_t j = 0; j < len; ++j)
                pt.y[j] = F.mul(base[j], zeta_pow[choice[j]]);
            if (!on_curve(params, pt))
                throw std::logic_error("sample_points: produced a point off the curve");
            out.points.push_back(std::move(pt));
            std::size_t pos = len;
            bool advanced = false;
            while (pos-- > 0) {
                if (++choice[pos] < k) {
                    advanced = true;
                    break;
                }
                choice[pos] = 0;
            }
            if (!advanced)
                break;
        }
    }
    out.shortfall = out.points.size() < count;
    return out;
}

AffinePoint act(const CurveParams& params, const GroupElement& g, const AffinePoint& pt)
{
    const auto F = params.field();
    AffinePoint out{F.mul(F.pow(params.zeta, static_cast<std::uint64_t>(g.e1)), pt.x), pt.y};
    for (std::size_t j = 0; j < out.y.size(); ++j)
        out.y[j] = F.mul(F.pow(params.zeta, static_cast<std::uint64_t>(g.e.at(j))), out.y[j]);
    return out;
}

Elem evaluate_theta(const PrimeField& F, const AffinePoint& pt, const IndexTuple& t)
{
    Elem v = F.pow_signed(pt.x, t.r);
    for (std::size_t j = 0; j < t.a.size(); ++j)
        v = F.mul(v, F.pow_signed(pt.y.at(j), -static_cast<std::int64_t>(t.a[j])));
    return v;
}

InsufficientPoints::InsufficientPoints(std::size_t w, std::size_t f)
    : std::runtime_error("only " + std::to_string(f) + " of " + std::to_string(w) + " requested curve points exist; raise p"),
      wanted(w), found(f)
{
}

std::size_t basis_evaluation_rank(const CurveParams& params, int m, std::size_t oversample)
{
    const auto basis = enumerate_Im(params.k, params.n, m);
    if (oversample < basis.size())
        throw std::invalid_argument("basis_rank_check: oversample must be >= d_m");
    const auto sample = sample_points(params, oversample);
    if (sample.shortfall)
        throw InsufficientPoints(oversample, sample.points.size());
    const auto F = params.field();
    DenseMatrix mat;
    mat.reserve(sample.points.size());
    for (const auto& pt : sample.points) {
        std::vector<Elem> row;
        row.reserve(basis.size());
        for (const auto& t : basis)
            row.push_back(evaluate_theta(F, pt, t));
        mat.push_back(std::move(row));
    }
    return dense_rank(F, std::move(mat));
}

bool basis_rank_check(const CurveParams& params, int m, std::size_t oversample)
{
    return basis_evaluation_rank(params, m, oversample) == static_cast<std::size_t>(dim_Vm(params.k, params.n, m));
}

CurveParams params_with_points(const CurveParams& params, std::size_t needed)
{
    auto current = params;
    while (sample_points(current, needed).shortfall) {
        auto next = find_prime_and_root(current.k, current.p + 1);
        current = with_prime(current, next.p);
    }
    return current;
}

} // namespace gfc
