#pragma once

#include "gfc/group.hpp"
#include "gfc/index_sets.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gfc {

// Exponent of zeta by which sigma_g acts on theta^(m)_t: e1(r+m) - a.e mod k.
int action_exponent(int k, int m, const IndexTuple& t, const GroupElement& g);

// Character carried by a degree-d monomial (or m-differential) with index sum t:
// the class of (r+d, -a) mod k.
CharacterLabel character_of(int k, int d, const IndexTuple& t);

// Closed multiplicity of chi_(h1,h) in V_m. h1 is represented in [m, m+k) and
// the count of integers in [0, Q] is max(0, Q+1).
std::int64_t nu_closed(int k, int n, int m, const CharacterLabel& h);
// The formula value before clamping (may be -1 for an empty range).
std::int64_t nu_closed_raw(int k, int n, int m, const CharacterLabel& h);

// |{t in I^(m) : r+m = h1, a_j = -h_j mod k}| by enumeration.
std::int64_t nu_bruteforce(int k, int n, int m, const CharacterLabel& h);

// Sum of count_partitions over J^(d)_h.
std::int64_t mu(int k, int n, int d, const CharacterLabel& h);

// mu - nu; throws std::logic_error if negative.
std::int64_t syzygy_multiplicity(int k, int n, int d, const CharacterLabel& h);

enum class MultiplicityKind { Nu, Mu, Syzygy };

std::string to_string(MultiplicityKind kind);
MultiplicityKind parse_multiplicity_kind(const std::string& s);

struct MultiplicityTable {
    MultiplicityKind kind = MultiplicityKind::Nu;
    int degree = 0;
    std::map<CharacterLabel, std::int64_t> values; // every label, including zeros

    std::int64_t total() const;
};

// Whole tables over all k^n labels. The mu table uses one multiset
// enumeration; the nu table uses nu_closed.
MultiplicityTable nu_table(int k, int n, int m);
MultiplicityTable nu_bruteforce_table(int k, int n, int m);
MultiplicityTable mu_table(int k, int n, int d);
MultiplicityTable syzygy_table(int k, int n, int d);

} // namespace gfc
