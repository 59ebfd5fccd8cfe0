#pragma once

// Bit-packed maximum-clique machinery shared by the search operations.

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace equidist::detail {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (std::size_t i = 0; i < size; ++i) b.set(i);
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Lowest set index, or size() if empty.
    std::size_t first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return (k << 6) + std::countr_zero(words_[k]);
        return size_;
    }

    /// Clears every index <= i.
    void clear_through(std::size_t i) {
        const std::size_t k = i >> 6;
        for (std::size_t w = 0; w < k; ++w) words_[w] = 0;
        const unsigned bit = i & 63;
        words_[k] &= (bit == 63) ? 0 : (~std::uint64_t{0} << (bit + 1));
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& and_not(const Bitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                f((k << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct Graph {
    std::size_t order = 0;
    std::vector<Bitset> adjacency;
};

/// Shared node counter and stop conditions for one search.
class SearchControl {
public:
    SearchControl(std::optional<std::uint64_t> node_budget, std::optional<std::chrono::milliseconds> time_budget);

    /// Counts a node; false once the budget or deadline is spent.
    bool tick();
    bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
    void add_untracked(std::uint64_t n) { nodes_.fetch_add(n, std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
    std::optional<std::uint64_t> node_budget_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct CliqueOutcome {
    std::vector<std::size_t> clique;
    bool complete = true;
};

/// Maximum clique; root branches are shared among `threads` workers.
CliqueOutcome maximum_clique(const Graph& g, SearchControl& control, unsigned threads);

/// Lexicographically least clique (by sorted vertex sequence) of exactly k
/// vertices, or empty if none exists. Not subject to the budget.
std::vector<std::size_t> lex_least_clique(const Graph& g, std::size_t k, SearchControl& control);

/// Calls `visit` for every clique of exactly k vertices, in lexicographic order.
void for_each_clique(const Graph& g, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit);

}  // namespace equidist::detail
