#pragma once

#include "gfc/group.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gfc {

// A point (r, a_2, ..., a_n) of Z^n. Coordinate a[j] corresponds to y_{j+2}.
struct IndexTuple {
    int r = 0;
    std::vector<int> a;

    int weight() const; // |a|
    auto operator<=>(const IndexTuple&) const = default;
    bool operator==(const IndexTuple&) const = default;
};

IndexTuple operator+(const IndexTuple& lhs, const IndexTuple& rhs);
IndexTuple operator-(const IndexTuple& lhs, const IndexTuple& rhs);
std::string to_string(const IndexTuple& t);

struct IndexTupleHash {
    std::size_t operator()(const IndexTuple& t) const noexcept;
};

enum class SetTag { Im, dI1, Ci, Jd, I2cap };

// Members are sorted ascending by (r, a) and duplicate free.
struct IndexSet {
    int k = 0;
    int n = 0;
    SetTag tag = SetTag::Im;
    int param = 0; // m, d or i depending on tag
    std::vector<IndexTuple> members;

    std::size_t size() const { return members.size(); }
    bool contains(const IndexTuple& t) const;
    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }
};

bool member_Im(int k, int n, int m, const IndexTuple& t);
IndexSet enumerate_Im(int k, int n, int m);

// d-fold Minkowski sum of I^(1), by iterated sumset.
IndexSet minkowski_dI1(int k, int n, int d);
// {0 <= a_j <= 2(k-1), 0 <= r <= |a| - 4}
IndexSet minkowski_2I1_closed_form(int k, int n);

// i is the 1-based relation index (1..n-1); it offsets coordinate i-1 of a.
// Computes both the definitional and the closed form and throws std::logic_error
// if they disagree.
IndexSet enumerate_Ci(int k, int n, int i);
IndexSet enumerate_Ci_definitional(int k, int n, int i);
IndexSet enumerate_Ci_closed_form(int k, int n, int i);

// (I1+I1) minus the union of the C_i, as a set.
IndexSet standard_point_set(int k, int n);
// True iff standard_point_set(k,n) equals enumerate_Im(k,n,2) as sets.
bool standard_set_identity(int k, int n);
// The same complement taken after shifting each C_i by -k(i); this is the set
// that the counting argument actually identifies with I^(2).
bool shifted_complement_identity(int k, int n);

// Number of multisets of d elements of I^(1) summing to t (depth-first search
// over the sorted I^(1) list with non-decreasing indices).
std::int64_t count_partitions(int k, int n, int d, const IndexTuple& t);
// All nonzero counts at once, keyed by index-sum, from one enumeration of the
// degree-d multisets.
std::map<IndexTuple, std::int64_t> partition_counts(int k, int n, int d);

// Points of d*I^(1) with (r+d, -a) = (h1, h) mod k.
IndexSet enumerate_Jd(int k, int n, int d, const CharacterLabel& h);

// Visits every multiset of size d drawn from items (as non-decreasing index
// sequences). Returns the number visited.
std::int64_t for_each_multiset(std::size_t items, int d, const std::function<void(const std::vector<std::size_t>&)>& fn);

std::int64_t binomial(std::int64_t n, std::int64_t k);

} // namespace gfc
