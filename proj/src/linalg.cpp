#include "gfc/linalg.hpp"

namespace gfc {

SparseVec sparse_from_map(const std::map<std::size_t, Elem>& entries)
{
    SparseVec out;
    for (const auto& [idx, c] : entries)
        if (c != 0)
            out.emplace_back(idx, c);
    return out;
}

SparseVec axpy(const PrimeField& F, const SparseVec& a, Elem c, const SparseVec& b)
{
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            const Elem v = F.mul(c, b[j].second);
            if (v != 0)
                out.emplace_back(b[j].first, v);
            ++j;
        } else {
            const Elem v = F.add(a[i].second, F.mul(c, b[j].second));
            if (v != 0)
                out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec SparseEchelon::reduce(SparseVec v) const
{
    // stored rows only touch indices at or after their pivot
    std::size_t pos = 0;
    while (pos < v.size()) {
        auto it = rows_.find(v[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        // entries before pos are untouched and the entry at pos cancels
        v = axpy(F_, v, F_.neg(v[pos].second), it->second);
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    const Elem scale = F_.inv(v.front().second);
    for (auto& [idx, c] : v)
        c = F_.mul(c, scale);
    rows_.emplace(v.front().first, std::move(v));
    return true;
}

std::size_t sparse_rank(const PrimeField& F, const std::vector<SparseVec>& vectors)
{
    SparseEchelon ech(F);
    for (const auto& v : vectors)
        ech.insert(v);
    return ech.rank();
}

std::size_t dense_rank(const PrimeField& F, DenseMatrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] % F.modulus() == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const Elem inv = F.inv(m[rank][c]);
        for (auto& v : m[rank])
            v = F.mul(v, inv);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Elem f = m[r][c] % F.modulus();
            if (f == 0)
                continue;
            for (std::size_t q = c; q < cols; ++q)
                m[r][q] = F.sub(m[r][q], F.mul(f, m[rank][q]));
        }
        ++rank;
    }
    return rank;
}

} // namespace gfc
