#pragma once

#include <vector>

#include "dgsp/matrix.hpp"

namespace dgsp {

/// Permutation listing eigenpairs by non-decreasing |lambda|, ties by Re then Im.
struct FrequencyOrder {
    std::vector<std::size_t> permutation;

    std::size_t size() const noexcept { return permutation.size(); }
    std::size_t operator[](std::size_t k) const noexcept { return permutation[k]; }
};

FrequencyOrder frequency_order(const CVector& values);

/// True when `order` is a permutation of 0..n-1 along which |values| is non-decreasing.
bool is_frequency_ordered(const CVector& values, const FrequencyOrder& order);

}  // namespace dgsp
