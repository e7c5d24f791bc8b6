#pragma once

#include "branchlab/catalog.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

inline const std::vector<branchlab::CaseRecord>& cases() {
    static const auto all = branchlab::all_cases(3);
    return all;
}

inline const branchlab::CaseRecord& get(const std::string& id) {
    for (const auto& c : cases())
        if (c.id() == id) return c;
    throw std::out_of_range("no case " + id);
}

}  // namespace testsupport
