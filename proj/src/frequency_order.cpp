#include "dgsp/frequency_order.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace dgsp {

FrequencyOrder frequency_order(const CVector& values) {
    FrequencyOrder order;
    order.permutation.resize(values.size());
    std::iota(order.permutation.begin(), order.permutation.end(), std::size_t{0});
    std::stable_sort(order.permutation.begin(), order.permutation.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = values[a];
        const auto& y = values[b];
        return std::make_tuple(std::abs(x), x.real(), x.imag()) < std::make_tuple(std::abs(y), y.real(), y.imag());
    });
    return order;
}

bool is_frequency_ordered(const CVector& values, const FrequencyOrder& order) {
    if (order.size() != values.size()) return false;
    std::vector<bool> seen(values.size(), false);
    for (std::size_t idx : order.permutation) {
        if (idx >= values.size() || seen[idx]) return false;
        seen[idx] = true;
    }
    for (std::size_t k = 1; k < order.size(); ++k)
        if (std::abs(values[order[k]]) < std::abs(values[order[k - 1]])) return false;
    return true;
}

}  // namespace dgsp
