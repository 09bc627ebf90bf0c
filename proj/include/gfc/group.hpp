#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gfc {

// Element (e1, e) of (Z/kZ)^n, naming the automorphism
// (x, y_j) -> (zeta^e1 x, zeta^e_j y_j). Components are kept in [0, k).
struct GroupElement {
    int e1 = 0;
    std::vector<int> e;

    static GroupElement make(int k, int e1, std::vector<int> e);
    auto operator<=>(const GroupElement&) const = default;
};

// Label (h1, h) of the character sigma_(e1,e) -> zeta^(h1 e1 + h.e).
// Components are kept in [0, k).
struct CharacterLabel {
    int h1 = 0;
    std::vector<int> h;

    static CharacterLabel make(int k, int h1, std::vector<int> h);
    auto operator<=>(const CharacterLabel&) const = default;
    bool operator==(const CharacterLabel&) const = default;
};

std::string to_string(const CharacterLabel& label);

// All k^n labels in lexicographic order.
std::vector<CharacterLabel> all_characters(int k, int n);
std::vector<GroupElement> all_group_elements(int k, int n);

inline int mod(long long v, int k)
{
    long long r = v % k;
    return static_cast<int>(r < 0 ? r + k : r);
}

} // namespace gfc
