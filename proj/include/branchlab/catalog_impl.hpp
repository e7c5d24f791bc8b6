#pragma once

#include <stdexcept>

namespace branchlab {

template <class T>
std::vector<T> alternating_concat(const std::vector<T>& j, const std::vector<T>& k) {
    if (k.size() != j.size() && k.size() + 1 != j.size())
        throw std::invalid_argument("alternating_concat: length mismatch");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(j[i]);
        if (i < k.size()) out.push_back(k[i]);
    }
    return out;
}

}  // namespace branchlab
