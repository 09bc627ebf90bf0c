#include "gfc/index_sets.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace gfc {

int IndexTuple::weight() const
{
    return std::accumulate(a.begin(), a.end(), 0);
}

IndexTuple operator+(const IndexTuple& lhs, const IndexTuple& rhs)
{
    IndexTuple out{lhs.r + rhs.r, lhs.a};
    for (std::size_t j = 0; j < out.a.size(); ++j)
        out.a[j] += rhs.a.at(j);
    return out;
}

IndexTuple operator-(const IndexTuple& lhs, const IndexTuple& rhs)
{
    IndexTuple out{lhs.r - rhs.r, lhs.a};
    for (std::size_t j = 0; j < out.a.size(); ++j)
        out.a[j] -= rhs.a.at(j);
    return out;
}

std::string to_string(const IndexTuple& t)
{
    std::ostringstream os;
    os << "(" << t.r << ",(";
    for (std::size_t j = 0; j < t.a.size(); ++j)
        os << (j ? "," : "") << t.a[j];
    os << "))";
    return os.str();
}

std::size_t IndexTupleHash::operator()(const IndexTuple& t) const noexcept
{
    std::size_t h = std::hash<int>{}(t.r);
    for (int v : t.a)
        h = h * 1000003u ^ std::hash<int>{}(v);
    return h;
}

bool IndexSet::contains(const IndexTuple& t) const
{
    return std::binary_search(members.begin(), members.end(), t);
}

namespace {

// Every a in prod_j [lo_j, hi_j], then every r in [0, rmax(a)]; result sorted.
template <typename RMax>
std::vector<IndexTuple> box_points(const std::vector<int>& lo, const std::vector<int>& hi, RMax&& rmax)
{
    std::vector<IndexTuple> out;
    const std::size_t len = lo.size();
    for (std::size_t j = 0; j < len; ++j)
        if (lo[j] > hi[j])
            return out;
    std::vector<int> a = lo;
    bool advanced = true;
    while (advanced) {
        const int top = rmax(a);
        for (int r = 0; r <= top; ++r)
            out.push_back({r, a});
        advanced = false;
        for (std::size_t pos = len; pos-- > 0;) {
            if (++a[pos] <= hi[pos]) {
                advanced = true;
                break;
            }
            a[pos] = lo[pos];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int sum(const std::vector<int>& a)
{
    return std::accumulate(a.begin(), a.end(), 0);
}

void require_m(int m)
{
    if (m < 1)
        throw std::invalid_argument("degree parameter must be >= 1");
}

IndexTuple k_offset(int k, int n, int i)
{
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("relation index must lie in 1..n-1");
    IndexTuple t{0, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    t.a[static_cast<std::size_t>(i - 1)] = k;
    return t;
}

} // namespace

bool member_Im(int k, int n, int m, const IndexTuple& t)
{
    require_m(m);
    if (t.a.size() != static_cast<std::size_t>(n - 1))
        return false;
    for (int v : t.a)
        if (v < (m - 1) * (k - 1) || v > m * (k - 1))
            return false;
    return t.r >= 0 && t.r <= t.weight() - 2 * m;
}

IndexSet enumerate_Im(int k, int n, int m)
{
    require_m(m);
    const auto len = static_cast<std::size_t>(n - 1);
    std::vector<int> lo(len, (m - 1) * (k - 1)), hi(len, m * (k - 1));
    return {k, n, SetTag::Im, m, box_points(lo, hi, [m](const std::vector<int>& a) { return sum(a) - 2 * m; })};
}

IndexSet minkowski_dI1(int k, int n, int d)
{
    require_m(d);
    const auto base = enumerate_Im(k, n, 1).members;
    std::set<IndexTuple> current(base.begin(), base.end());
    for (int step = 1; step < d; ++step) {
        std::set<IndexTuple> next;
        for (const auto& s : current)
            for (const auto& t : base)
                next.insert(s + t);
        current = std::move(next);
    }
    return {k, n, SetTag::dI1, d, {current.begin(), current.end()}};
}

IndexSet minkowski_2I1_closed_form(int k, int n)
{
    const auto len = static_cast<std::size_t>(n - 1);
    std::vector<int> lo(len, 0), hi(len, 2 * (k - 1));
    return {k, n, SetTag::dI1, 2, box_points(lo, hi, [](const std::vector<int>& a) { return sum(a) - 4; })};
}

IndexSet enumerate_Ci_definitional(int k, int n, int i)
{
    const auto shift = k_offset(k, n, i);
    const auto sums = minkowski_dI1(k, n, 2);
    IndexSet out{k, n, SetTag::Ci, i, {}};
    const IndexTuple up{k, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    for (const auto& t : sums)
        if (sums.contains(t + up) && sums.contains(t - shift))
            out.members.push_back(t);
    return out;
}

IndexSet enumerate_Ci_closed_form(int k, int n, int i)
{
    k_offset(k, n, i);
    const auto len = static_cast<std::size_t>(n - 1);
    std::vector<int> lo(len, 0), hi(len, 2 * k - 2);
    lo[static_cast<std::size_t>(i - 1)] = k;
    return {k, n, SetTag::Ci, i, box_points(lo, hi, [k](const std::vector<int>& a) { return sum(a) - (k + 4); })};
}

IndexSet enumerate_Ci(int k, int n, int i)
{
    auto definitional = enumerate_Ci_definitional(k, n, i);
    if (definitional.members != enumerate_Ci_closed_form(k, n, i).members)
        throw std::logic_error("enumerate_Ci: definitional and closed forms disagree");
    return definitional;
}

IndexSet standard_point_set(int k, int n)
{
    std::set<IndexTuple> covered;
    for (int i = 1; i <= n - 1; ++i)
        for (const auto& t : enumerate_Ci(k, n, i))
            covered.insert(t);
    IndexSet out{k, n, SetTag::I2cap, 2, {}};
    for (const auto& t : minkowski_dI1(k, n, 2))
        if (!covered.count(t))
            out.members.push_back(t);
    return out;
}

bool standard_set_identity(int k, int n)
{
    return standard_point_set(k, n).members == enumerate_Im(k, n, 2).members;
}

bool shifted_complement_identity(int k, int n)
{
    std::set<IndexTuple> covered;
    for (int i = 1; i <= n - 1; ++i) {
        const auto shift = k_offset(k, n, i);
        for (const auto& t : enumerate_Ci(k, n, i))
            covered.insert(t - shift);
    }
    std::vector<IndexTuple> rest;
    for (const auto& t : minkowski_dI1(k, n, 2))
        if (!covered.count(t))
            rest.push_back(t);
    return rest == enumerate_Im(k, n, 2).members;
}

namespace {

struct PartitionSearch {
    const std::vector<IndexTuple>& items;
    int k;
    std::int64_t count = 0;

    void run(std::size_t start, int left, IndexTuple& rest)
    {
        if (left == 0) {
            if (rest.r == 0 && std::all_of(rest.a.begin(), rest.a.end(), [](int v) { return v == 0; }))
                ++count;
            return;
        }
        // every element of I^(1) has 0 <= a_j <= k-1
        for (int v : rest.a)
            if (v < 0 || v > left * (k - 1))
                return;
        if (rest.r < 0)
            return;
        for (std::size_t idx = start; idx < items.size(); ++idx) {
            const auto& t = items[idx];
            rest.r -= t.r;
            for (std::size_t j = 0; j < rest.a.size(); ++j)
                rest.a[j] -= t.a[j];
            run(idx, left - 1, rest);
            rest.r += t.r;
            for (std::size_t j = 0; j < rest.a.size(); ++j)
                rest.a[j] += t.a[j];
        }
    }
};

} // namespace

std::int64_t count_partitions(int k, int n, int d, const IndexTuple& t)
{
    require_m(d);
    const auto items = enumerate_Im(k, n, 1).members;
    PartitionSearch search{items, k};
    IndexTuple rest = t;
    search.run(0, d, rest);
    return search.count;
}

std::int64_t for_each_multiset(std::size_t items, int d, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    if (d < 0)
        throw std::invalid_argument("multiset size must be >= 0");
    std::int64_t visited = 0;
    if (d == 0) {
        fn({});
        return 1;
    }
    if (items == 0)
        return 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    while (true) {
        fn(idx);
        ++visited;
        std::size_t pos = idx.size();
        while (pos > 0 && idx[pos - 1] == items - 1)
            --pos;
        if (pos == 0)
            return visited;
        const auto v = idx[pos - 1] + 1;
        for (std::size_t q = pos - 1; q < idx.size(); ++q)
            idx[q] = v;
    }
}

std::map<IndexTuple, std::int64_t> partition_counts(int k, int n, int d)
{
    require_m(d);
    const auto items = enumerate_Im(k, n, 1).members;
    std::unordered_map<IndexTuple, std::int64_t, IndexTupleHash> counts;
    IndexTuple zero{0, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    for_each_multiset(items.size(), d, [&](const std::vector<std::size_t>& idx) {
        IndexTuple s = zero;
        for (auto i : idx) {
            s.r += items[i].r;
            for (std::size_t j = 0; j < s.a.size(); ++j)
                s.a[j] += items[i].a[j];
        }
        ++counts[s];
    });
    return {counts.begin(), counts.end()};
}

IndexSet enumerate_Jd(int k, int n, int d, const CharacterLabel& h)
{
    auto sums = minkowski_dI1(k, n, d);
    IndexSet out{k, n, SetTag::Jd, d, {}};
    for (const auto& t : sums) {
        if (mod(t.r + d, k) != h.h1)
            continue;
        bool ok = true;
        for (std::size_t j = 0; j < t.a.size() && ok; ++j)
            ok = mod(-t.a[j], k) == h.h[j];
        if (ok)
            out.members.push_back(t);
    }
    return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace gfc
