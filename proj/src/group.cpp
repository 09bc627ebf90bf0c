#include "gfc/group.hpp"

#include <sstream>

namespace gfc {

GroupElement GroupElement::make(int k, int e1, std::vector<int> e)
{
    for (auto& v : e)
        v = mod(v, k);
    return {mod(e1, k), std::move(e)};
}

CharacterLabel CharacterLabel::make(int k, int h1, std::vector<int> h)
{
    for (auto& v : h)
        v = mod(v, k);
    return {mod(h1, k), std::move(h)};
}

std::string to_string(const CharacterLabel& label)
{
    std::ostringstream os;
    os << "(" << label.h1 << ",(";
    for (std::size_t j = 0; j < label.h.size(); ++j)
        os << (j ? "," : "") << label.h[j];
    os << "))";
    return os.str();
}

namespace {

template <typename F>
void odometer(int k, int len, F&& fn)
{
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
        fn(digits);
        int pos = len - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == k)
            digits[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0)
            return;
    }
}

} // namespace

std::vector<CharacterLabel> all_characters(int k, int n)
{
    std::vector<CharacterLabel> out;
    odometer(k, n, [&](const std::vector<int>& d) {
        out.push_back({d[0], std::vector<int>(d.begin() + 1, d.end())});
    });
    return out;
}

std::vector<GroupElement> all_group_elements(int k, int n)
{
    std::vector<GroupElement> out;
    odometer(k, n, [&](const std::vector<int>& d) {
        out.push_back({d[0], std::vector<int>(d.begin() + 1, d.end())});
    });
    return out;
}

} // namespace gfc
