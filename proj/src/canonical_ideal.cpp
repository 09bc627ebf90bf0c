#include "gfc/canonical_ideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gfc {

MonomialKey MonomialKey::make(std::vector<IndexTuple> factors)
{
    std::sort(factors.begin(), factors.end());
    return {std::move(factors)};
}

IndexTuple MonomialKey::index_sum() const
{
    if (factors.empty())
        return {};
    IndexTuple s = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        s = s + factors[i];
    return s;
}

std::string to_string(const MonomialKey& m)
{
    std::string out = "{";
    for (std::size_t i = 0; i < m.factors.size(); ++i)
        out += (i ? "," : "") + to_string(m.factors[i]);
    return out + "}";
}

std::strong_ordering compare_monomials(const MonomialKey& lhs, const MonomialKey& rhs)
{
    if (auto c = lhs.degree() <=> rhs.degree(); c != 0)
        return c;
    if (lhs.factors.empty())
        return std::strong_ordering::equal;
    const auto ls = lhs.index_sum(), rs = rhs.index_sum();
    // larger sum of r is smaller
    if (auto c = rs.r <=> ls.r; c != 0)
        return c;
    for (std::size_t j = 0; j < ls.a.size(); ++j)
        if (auto c = ls.a[j] <=> rs.a.at(j); c != 0)
            return c;
    return lhs.factors <=> rhs.factors;
}

const MonomialKey& Relation::initial_term() const
{
    const Term* best = nullptr;
    for (const auto& term : terms)
        if (term.coeff != 0 && (!best || compare_monomials(best->monomial, term.monomial) < 0))
            best = &term;
    if (!best)
        throw std::logic_error("initial_term: zero relation");
    return best->monomial;
}

DegreeTwoSpace::DegreeTwoSpace(int k, int n) : k_(k), n_(n), variables_(enumerate_Im(k, n, 1).members)
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        for (std::size_t j = i; j < variables_.size(); ++j) {
            auto m = MonomialKey::make({variables_[i], variables_[j]});
            index_.emplace(m, monomials_.size());
            fibers_[m.index_sum()].push_back(monomials_.size());
            monomials_.push_back(std::move(m));
        }
    for (const auto& [t, ids] : fibers_) {
        points_.push_back(t);
        std::size_t best = ids.front();
        for (auto id : ids)
            if (compare_monomials(monomials_[id], monomials_[best]) < 0)
                best = id;
        tau_.emplace(t, monomials_[best]);
    }
}

std::size_t DegreeTwoSpace::monomial_index(const MonomialKey& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        throw std::out_of_range("monomial " + to_string(m) + " is not a degree-2 monomial of S");
    return it->second;
}

const std::vector<std::size_t>& DegreeTwoSpace::fiber(const IndexTuple& t) const
{
    auto it = fibers_.find(t);
    if (it == fibers_.end())
        throw std::out_of_range("point " + to_string(t) + " is not in I1+I1");
    return it->second;
}

const MonomialKey& DegreeTwoSpace::tau(const IndexTuple& t) const
{
    auto it = tau_.find(t);
    if (it == tau_.end())
        throw std::out_of_range("point " + to_string(t) + " is not in I1+I1");
    return it->second;
}

MonomialKey tau(int k, int n, const IndexTuple& t)
{
    const auto base = enumerate_Im(k, n, 1);
    std::optional<MonomialKey> best;
    for (const auto& t1 : base) {
        const auto t2 = t - t1;
        if (!base.contains(t2))
            continue;
        auto candidate = MonomialKey::make({t1, t2});
        if (!best || compare_monomials(candidate, *best) < 0)
            best = std::move(candidate);
    }
    if (!best)
        throw std::invalid_argument("tau: " + to_string(t) + " is not a sum of two points of I^(1)");
    return *best;
}

std::vector<Relation> generate_binomials(const DegreeTwoSpace& space)
{
    std::vector<Relation> out;
    for (const auto& t : space.points()) {
        const auto& rep = space.tau(t);
        for (auto id : space.fiber(t)) {
            const auto& m = space.monomials()[id];
            if (m == rep)
                continue;
            out.push_back({RelationKind::Binomial, 0, {{1, m}, {-1, rep}}});
        }
    }
    return out;
}

std::vector<Relation> generate_binomials(int k, int n)
{
    return generate_binomials(DegreeTwoSpace(k, n));
}

std::vector<Relation> generate_trinomials(const CurveParams& params, const DegreeTwoSpace& space)
{
    std::vector<Relation> out;
    const int k = params.k, n = params.n;
    for (int i = 1; i <= n - 1; ++i) {
        for (const auto& t : enumerate_Ci_definitional(k, n, i)) {
            auto up = t;
            up.r += k;
            auto down = t;
            down.a[static_cast<std::size_t>(i - 1)] -= k;
            out.push_back({RelationKind::Trinomial,
                           i,
                           {{static_cast<std::int64_t>(params.lambda_at(i)), space.tau(t)}, {1, space.tau(up)}, {1, space.tau(down)}}});
        }
    }
    return out;
}

std::vector<Relation> generate_trinomials(const CurveParams& params)
{
    return generate_trinomials(params, DegreeTwoSpace(params.k, params.n));
}

namespace {

bool in_double_sum(int k, const IndexTuple& t)
{
    for (int v : t.a)
        if (v < 0 || v > 2 * (k - 1))
            return false;
    return t.r >= 0 && t.r <= t.weight() - 4;
}

void reduce_into(const CurveParams& params, const PrimeField& F, const IndexTuple& t, Elem coeff, std::map<IndexTuple, Elem>& out)
{
    if (coeff == 0)
        return;
    const int k = params.k;
    for (std::size_t j = 0; j < t.a.size(); ++j) {
        if (t.a[j] > k - 2)
            continue;
        auto raised = t;
        raised.a[j] += k;
        reduce_into(params, F, raised, F.mul(coeff, F.neg(params.lambda[j])), out);
        raised.r += k;
        reduce_into(params, F, raised, F.neg(coeff), out);
        return;
    }
    auto& slot = out[t];
    slot = F.add(slot, coeff);
    if (slot == 0)
        out.erase(t);
}

} // namespace

std::map<IndexTuple, Elem> reduce_to_basis(const CurveParams& params, const IndexTuple& t)
{
    if (t.a.size() != static_cast<std::size_t>(params.n - 1) || !in_double_sum(params.k, t))
        throw std::invalid_argument("reduce_to_basis: " + to_string(t) + " is not in I1+I1");
    std::map<IndexTuple, Elem> out;
    reduce_into(params, params.field(), t, 1, out);
    return out;
}

DenseMatrix Phi2Matrix::dense() const
{
    DenseMatrix m(rows.size(), std::vector<Elem>(cols.size(), 0));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [r, v] : columns[c])
            m[r][c] = v;
    return m;
}

std::size_t Phi2Matrix::rank(const PrimeField& F) const
{
    return sparse_rank(F, columns);
}

Phi2Matrix phi2_matrix(const CurveParams& params, const DegreeTwoSpace& space)
{
    Phi2Matrix out;
    out.rows = enumerate_Im(params.k, params.n, 2).members;
    out.cols = space.monomials();
    std::map<IndexTuple, std::size_t> row_of;
    for (std::size_t i = 0; i < out.rows.size(); ++i)
        row_of.emplace(out.rows[i], i);

    std::map<IndexTuple, SparseVec> cache;
    for (const auto& t : space.points()) {
        std::map<std::size_t, Elem> entries;
        for (const auto& [basis, c] : reduce_to_basis(params, t))
            entries[row_of.at(basis)] = c;
        cache.emplace(t, sparse_from_map(entries));
    }
    out.columns.reserve(out.cols.size());
    for (const auto& m : out.cols)
        out.columns.push_back(cache.at(m.index_sum()));
    return out;
}

Phi2Matrix phi2_matrix(const CurveParams& params)
{
    return phi2_matrix(params, DegreeTwoSpace(params.k, params.n));
}

SparseVec apply_phi2(const PrimeField& F, const Phi2Matrix& matrix, const DegreeTwoSpace& space, const Relation& rel)
{
    SparseVec acc;
    for (const auto& term : rel.terms)
        acc = axpy(F, acc, F.reduce(term.coeff), matrix.columns.at(space.monomial_index(term.monomial)));
    return acc;
}

SparseVec relation_vector(const PrimeField& F, const DegreeTwoSpace& space, const Relation& rel)
{
    std::map<std::size_t, Elem> entries;
    for (const auto& term : rel.terms) {
        auto& slot = entries[space.monomial_index(term.monomial)];
        slot = F.add(slot, F.reduce(term.coeff));
    }
    return sparse_from_map(entries);
}

Elem evaluate_relation(const PrimeField& F, const AffinePoint& pt, const Relation& rel)
{
    Elem total = 0;
    for (const auto& term : rel.terms) {
        Elem v = F.reduce(term.coeff);
        for (const auto& factor : term.monomial.factors)
            v = F.mul(v, evaluate_theta(F, pt, factor));
        total = F.add(total, v);
    }
    return total;
}

bool Degree2Report::kernel_generated() const
{
    return phi2_rank == d2 && generators_in_kernel_symbolic && generators_vanish_at_points && span_equals_kernel &&
           quotient_dim == d2;
}

bool Degree2Report::passed() const
{
    return kernel_generated() && standard_count_matches && trinomial_initial_terms_ok && tau_injective;
}

std::vector<std::string> Degree2Report::failures() const
{
    std::vector<std::string> out;
    if (phi2_rank != d2)
        out.push_back("phi2_rank: " + std::to_string(phi2_rank) + " != d2 = " + std::to_string(d2));
    if (!generators_in_kernel_symbolic)
        out.push_back("generators_in_kernel_symbolic");
    if (!generators_vanish_at_points)
        out.push_back("generators_vanish_at_points (" + std::to_string(points_evaluated) + " points)");
    if (!span_equals_kernel)
        out.push_back("span_equals_kernel: rank " + std::to_string(span_rank) + " != dim ker " + std::to_string(kernel_dim));
    if (quotient_dim != d2)
        out.push_back("quotient_dim: " + std::to_string(quotient_dim) + " != d2 = " + std::to_string(d2));
    if (!standard_count_matches)
        out.push_back("standard_monomial_count: " + std::to_string(standard_monomial_count) + " != |I^(2)| = " + std::to_string(d2));
    if (!trinomial_initial_terms_ok)
        out.push_back("trinomial_initial_terms");
    if (!tau_injective)
        out.push_back("tau_injective");
    return out;
}

namespace {

bool all_vanish(const CurveParams& params, const std::vector<AffinePoint>& points, const std::vector<Relation>& relations)
{
    const auto F = params.field();
    for (const auto& rel : relations)
        for (const auto& pt : points)
            if (evaluate_relation(F, pt, rel) != 0)
                return false;
    return true;
}

} // namespace

Degree2Report verify_degree2_kernel(const CurveParams& params, std::size_t eval_points)
{
    const auto F = params.field();
    const DegreeTwoSpace space(params.k, params.n);
    const auto binomials = generate_binomials(space);
    const auto trinomials = generate_trinomials(params, space);
    std::vector<Relation> generators = binomials;
    generators.insert(generators.end(), trinomials.begin(), trinomials.end());

    Degree2Report rep;
    rep.k = params.k;
    rep.n = params.n;
    rep.p = params.p;
    rep.plane_quintic_warning = params.plane_quintic;
    rep.dim_S2 = space.monomials().size();
    rep.num_index_points = space.points().size();
    rep.num_binomials = binomials.size();
    rep.num_trinomials = trinomials.size();

    const auto phi2 = phi2_matrix(params, space);
    rep.d2 = phi2.rows.size();
    rep.phi2_rank = phi2.rank(F);
    rep.kernel_dim = rep.dim_S2 - rep.phi2_rank;

    rep.generators_in_kernel_symbolic = std::all_of(generators.begin(), generators.end(),
                                                    [&](const Relation& g) { return apply_phi2(F, phi2, space, g).empty(); });

    // evaluation route; raise the prime if this one has too few points
    auto eval_params = params;
    auto sample = sample_points(eval_params, eval_points);
    if (sample.shortfall) {
        eval_params = params_with_points(params, eval_points);
        sample = sample_points(eval_params, eval_points);
    }
    rep.evaluation_prime = eval_params.p;
    rep.points_evaluated = sample.points.size();
    const auto eval_trinomials = eval_params.p == params.p ? trinomials : generate_trinomials(eval_params, space);
    rep.generators_vanish_at_points = rep.points_evaluated >= eval_points && all_vanish(eval_params, sample.points, binomials) &&
                                      all_vanish(eval_params, sample.points, eval_trinomials);

    SparseEchelon span(F);
    for (const auto& g : generators)
        span.insert(relation_vector(F, space, g));
    rep.span_rank = span.rank();
    rep.span_equals_kernel = rep.span_rank == rep.kernel_dim && rep.generators_in_kernel_symbolic;
    rep.quotient_dim = rep.dim_S2 - rep.span_rank;

    std::set<MonomialKey> initial_terms;
    for (const auto& g : generators)
        initial_terms.insert(g.initial_term());
    rep.standard_monomial_count = rep.dim_S2 - initial_terms.size();
    rep.standard_count_matches = rep.standard_monomial_count == rep.d2;

    rep.trinomial_initial_terms_ok = std::all_of(trinomials.begin(), trinomials.end(),
                                                 [](const Relation& g) { return g.initial_term() == g.terms.front().monomial; });

    std::set<MonomialKey> images;
    for (const auto& t : space.points())
        images.insert(space.tau(t));
    rep.tau_injective = images.size() == space.points().size();

    rep.per_character = per_character_span_dims(space, generators, F);
    return rep;
}

std::map<CharacterLabel, std::size_t> per_character_span_dims(const DegreeTwoSpace& space, const std::vector<Relation>& generators,
                                                              const PrimeField& F)
{
    std::map<CharacterLabel, std::vector<const Relation*>> blocks;
    for (const auto& g : generators) {
        const auto t = g.index_sum();
        std::vector<int> h(t.a.size());
        for (std::size_t j = 0; j < t.a.size(); ++j)
            h[j] = mod(-t.a[j], space.k());
        blocks[{mod(t.r + 2, space.k()), std::move(h)}].push_back(&g);
    }
    std::map<CharacterLabel, std::size_t> out;
    for (const auto& [label, rels] : blocks) {
        SparseEchelon ech(F);
        for (const auto* g : rels)
            ech.insert(relation_vector(F, space, *g));
        if (ech.rank() > 0)
            out.emplace(label, ech.rank());
    }
    return out;
}

std::map<CharacterLabel, std::size_t> per_character_span_dims(const CurveParams& params)
{
    const DegreeTwoSpace space(params.k, params.n);
    auto generators = generate_binomials(space);
    auto trinomials = generate_trinomials(params, space);
    generators.insert(generators.end(), trinomials.begin(), trinomials.end());
    return per_character_span_dims(space, generators, params.field());
}

} // namespace gfc
