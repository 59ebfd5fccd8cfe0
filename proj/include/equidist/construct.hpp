#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "equidist/core.hpp"

namespace equidist {

inline constexpr std::size_t kDefaultMaxHadamardOrder = 4096;

/// A +-1 matrix H of order n with H H^T = n I. Instances can only be obtained
/// through constructors that have verified the defining property.
class HadamardMatrix {
public:
    /// Validates entries, order (1, 2 or a multiple of 4) and H H^T = n I.
    /// Throws InvalidInput on any failure.
    static HadamardMatrix from_entries(std::size_t order, std::vector<std::int8_t> entries);

    std::size_t order() const noexcept { return order_; }
    std::int8_t operator()(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }
    std::span<const std::int8_t> row(std::size_t r) const { return {entries_.data() + r * order_, order_}; }
    const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

    friend bool operator==(const HadamardMatrix&, const HadamardMatrix&) = default;

private:
    HadamardMatrix(std::size_t order, std::vector<std::int8_t> entries) : order_(order), entries_(std::move(entries)) {}

    std::size_t order_;
    std::vector<std::int8_t> entries_;
};

/// True iff the entries are +-1 and H H^T = order * I.
bool verify_hadamard(std::size_t order, std::span<const std::int8_t> entries);

/// Order 2^k, by repeated [[H, H], [H, -H]] doubling from [[1]].
HadamardMatrix hadamard_sylvester(unsigned k, std::size_t max_order = kDefaultMaxHadamardOrder);

/// Paley type I, order p + 1, for a prime p = 3 (mod 4).
HadamardMatrix hadamard_paley(std::uint64_t p, std::size_t max_order = kDefaultMaxHadamardOrder);

HadamardMatrix hadamard_kronecker(const HadamardMatrix& a, const HadamardMatrix& b,
                                  std::size_t max_order = kDefaultMaxHadamardOrder);

/// Picks a construction for `order`: Sylvester for powers of two, Paley when
/// order - 1 is a prime = 3 (mod 4), otherwise 2^a (x) Paley(p). Throws
/// InvalidInput when no supported construction gives this order.
HadamardMatrix hadamard_of_order(std::size_t order, std::size_t max_order = kDefaultMaxHadamardOrder);

/// Rows as 0/1 words: 0 where the entry is -1. The result has `order`
/// members at common distance order/2. Throws InvalidInput for order 1.
Family hadamard_to_family(const HadamardMatrix& h);

}  // namespace equidist
