#include "gfc/representations.hpp"

#include <stdexcept>

namespace gfc {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace

int action_exponent(int k, int m, const IndexTuple& t, const GroupElement& g)
{
    long long v = static_cast<long long>(g.e1) * (t.r + m);
    for (std::size_t j = 0; j < t.a.size(); ++j)
        v -= static_cast<long long>(t.a[j]) * g.e.at(j);
    return mod(v, k);
}

CharacterLabel character_of(int k, int d, const IndexTuple& t)
{
    std::vector<int> h(t.a.size());
    for (std::size_t j = 0; j < t.a.size(); ++j)
        h[j] = mod(-t.a[j], k);
    return {mod(t.r + d, k), std::move(h)};
}

std::int64_t nu_closed_raw(int k, int n, int m, const CharacterLabel& h)
{
    if (m < 1)
        throw std::invalid_argument("nu_closed: m must be >= 1");
    // r + m = qk + h1 with r >= 0 reads q >= 0 only for h1 in [m, m+k)
    const std::int64_t h1 = m + mod(static_cast<long long>(h.h1) - m, k);
    std::int64_t weight = h1;
    std::int64_t floors = 0;
    for (int hj : h.h) {
        const int rep = mod(hj, k);
        weight += rep;
        floors += floor_div(m - 1 - rep, k);
    }
    return static_cast<std::int64_t>(n - 1) * (m - 1) - ceil_div(weight + m, k) - floors + 1;
}

std::int64_t nu_closed(int k, int n, int m, const CharacterLabel& h)
{
    const auto raw = nu_closed_raw(k, n, m, h);
    return raw < 0 ? 0 : raw;
}

std::int64_t nu_bruteforce(int k, int n, int m, const CharacterLabel& h)
{
    std::int64_t count = 0;
    for (const auto& t : enumerate_Im(k, n, m))
        if (character_of(k, m, t) == h)
            ++count;
    return count;
}

std::int64_t mu(int k, int n, int d, const CharacterLabel& h)
{
    std::int64_t total = 0;
    for (const auto& t : enumerate_Jd(k, n, d, h))
        total += count_partitions(k, n, d, t);
    return total;
}

std::int64_t syzygy_multiplicity(int k, int n, int d, const CharacterLabel& h)
{
    const auto v = mu(k, n, d, h) - nu_closed(k, n, d, h);
    if (v < 0)
        throw std::logic_error("syzygy_multiplicity: mu < nu for " + to_string(h));
    return v;
}

std::string to_string(MultiplicityKind kind)
{
    switch (kind) {
    case MultiplicityKind::Nu:
        return "nu";
    case MultiplicityKind::Mu:
        return "mu";
    case MultiplicityKind::Syzygy:
        return "syzygy";
    }
    return "?";
}

MultiplicityKind parse_multiplicity_kind(const std::string& s)
{
    if (s == "nu")
        return MultiplicityKind::Nu;
    if (s == "mu")
        return MultiplicityKind::Mu;
    if (s == "syzygy")
        return MultiplicityKind::Syzygy;
    throw std::invalid_argument("unknown multiplicity kind '" + s + "'");
}

std::int64_t MultiplicityTable::total() const
{
    std::int64_t s = 0;
    for (const auto& [label, v] : values)
        s += v;
    return s;
}

MultiplicityTable nu_table(int k, int n, int m)
{
    MultiplicityTable table{MultiplicityKind::Nu, m, {}};
    for (const auto& h : all_characters(k, n))
        table.values[h] = nu_closed(k, n, m, h);
    return table;
}

MultiplicityTable nu_bruteforce_table(int k, int n, int m)
{
    MultiplicityTable table{MultiplicityKind::Nu, m, {}};
    for (const auto& h : all_characters(k, n))
        table.values[h] = 0;
    for (const auto& t : enumerate_Im(k, n, m))
        ++table.values[character_of(k, m, t)];
    return table;
}

MultiplicityTable mu_table(int k, int n, int d)
{
    MultiplicityTable table{MultiplicityKind::Mu, d, {}};
    for (const auto& h : all_characters(k, n))
        table.values[h] = 0;
    for (const auto& [t, count] : partition_counts(k, n, d))
        table.values[character_of(k, d, t)] += count;
    return table;
}

MultiplicityTable syzygy_table(int k, int n, int d)
{
    auto mus = mu_table(k, n, d);
    MultiplicityTable table{MultiplicityKind::Syzygy, d, {}};
    for (const auto& [h, m] : mus.values) {
        const auto v = m - nu_closed(k, n, d, h);
        if (v < 0)
            throw std::logic_error("syzygy_table: mu < nu for " + to_string(h));
        table.values[h] = v;
    }
    return table;
}

} // namespace gfc
