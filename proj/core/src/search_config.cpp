#include "grover/search_config.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "grover/errors.hpp"

namespace grover {

SearchConfig::SearchConfig(std::uint64_t n_states, std::vector<std::uint64_t> marked, bool allow_large_r)
    : n_states_(n_states), marked_(std::move(marked)), allow_large_r_(allow_large_r) {
    if (n_states_ < 2) {
        throw ValidationError("n_states must be at least 2, got " + std::to_string(n_states_));
    }
    std::sort(marked_.begin(), marked_.end());
    if (std::adjacent_find(marked_.begin(), marked_.end()) != marked_.end()) {
        throw ValidationError("marked indices must be distinct");
    }
    if (!marked_.empty() && marked_.back() >= n_states_) {
        throw ValidationError("marked index " + std::to_string(marked_.back()) + " out of range [0, " +
                              std::to_string(n_states_) + ")");
    }
    const auto r = marked_.size();
    if (r == 0) {
        throw ValidationError("at least one marked state is required (r = 0)");
    }
    if (r >= n_states_) {
        throw ValidationError("r must be below N; r = N leaves no unmarked states");
    }
    if (!allow_large_r_ && r > n_states_ / 2) {
        throw ValidationError("r = " + std::to_string(r) + " exceeds N/2 = " + std::to_string(n_states_ / 2) +
                              " (pass allow-large-r to permit r <= N-1)");
    }
}

SearchConfig SearchConfig::first_marked(std::uint64_t n_states, std::uint64_t r, bool allow_large_r) {
    // Reject before allocating: r may be arbitrary user input.
    if (r >= n_states) {
        throw ValidationError("r must be below N; got r = " + std::to_string(r) + ", N = " + std::to_string(n_states));
    }
    std::vector<std::uint64_t> marked(r);
    std::iota(marked.begin(), marked.end(), std::uint64_t{0});
    return {n_states, std::move(marked), allow_large_r};
}

bool SearchConfig::is_marked(std::uint64_t index) const noexcept {
    return std::binary_search(marked_.begin(), marked_.end(), index);
}

} // namespace grover
