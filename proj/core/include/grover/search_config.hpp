#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace grover {

/// Geometry of a search problem: N basis states, r of which are marked.
///
/// Marked states are kept as a sorted index set over an unpermuted
/// statevector; nothing assumes the marked states come first.
/// By default 1 <= r <= N/2. With `allow_large_r` any 1 <= r <= N-1 is
/// accepted.
class SearchConfig {
public:
    SearchConfig(std::uint64_t n_states, std::vector<std::uint64_t> marked, bool allow_large_r = false);

    /// Marks indices 0..r-1.
    static SearchConfig first_marked(std::uint64_t n_states, std::uint64_t r, bool allow_large_r = false);

    [[nodiscard]] std::uint64_t n_states() const noexcept { return n_states_; }
    [[nodiscard]] std::uint64_t r() const noexcept { return marked_.size(); }
    [[nodiscard]] std::uint64_t n_unmarked() const noexcept { return n_states_ - marked_.size(); }
    [[nodiscard]] std::span<const std::uint64_t> marked() const noexcept { return marked_; }
    [[nodiscard]] bool allow_large_r() const noexcept { return allow_large_r_; }

    /// O(log r).
    [[nodiscard]] bool is_marked(std::uint64_t index) const noexcept;

    bool operator==(const SearchConfig&) const = default;

private:
    std::uint64_t n_states_;
    std::vector<std::uint64_t> marked_;
    bool allow_large_r_;
};

/// Calls on_marked(i) / on_unmarked(i) for i = 0..N-1 in index order.
template <class MarkedFn, class UnmarkedFn>
void for_each_partition(const SearchConfig& config, MarkedFn&& on_marked, UnmarkedFn&& on_unmarked) {
    const auto marked = config.marked();
    std::size_t cursor = 0;
    for (std::uint64_t i = 0; i < config.n_states(); ++i) {
        if (cursor < marked.size() && marked[cursor] == i) {
            on_marked(i);
            ++cursor;
        } else {
            on_unmarked(i);
        }
    }
}

} // namespace grover
