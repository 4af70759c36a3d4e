#include "shuffle/subset.hpp"

#include <stdexcept>

namespace shuffle {

std::vector<int> subset_elements(SubsetMask s) {
    std::vector<int> out;
    for (int i = 1; s != 0; ++i, s >>= 1)
        if (s & 1u) out.push_back(i);
    return out;
}

SubsetMask subset_from_elements(const std::vector<int>& elements) {
    SubsetMask s = 0;
    for (int e : elements) {
        if (e < 1 || e > 31)
            throw std::invalid_argument("subset element out of range 1..31");
        const SubsetMask bit = SubsetMask{1} << (e - 1);
        if (s & bit) throw std::invalid_argument("duplicate subset element");
        s |= bit;
    }
    return s;
}

std::string subset_to_string(SubsetMask s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

}  // namespace shuffle
