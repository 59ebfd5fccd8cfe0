#include "equidist/construct.hpp"

#include <bit>
#include <string>

#include "equidist/error.hpp"

namespace equidist {

namespace {

void check_order_limit(std::size_t order, std::size_t max_order) {
    if (order > max_order) {
        throw ResourceLimit("Hadamard order " + std::to_string(order) + " exceeds the limit " +
                            std::to_string(max_order));
    }
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

bool verify_hadamard(std::size_t order, std::span<const std::int8_t> entries) {
    if (order == 0 || entries.size() != order * order) return false;
    if (order > 2 && order % 4 != 0) return false;
    // Pack +1 as a set bit; <r_i, r_j> = order - 2 * popcount(r_i xor r_j).
    const std::size_t words = (order + 63) / 64;
    std::vector<std::uint64_t> bits(order * words, 0);
    for (std::size_t r = 0; r < order; ++r) {
        for (std::size_t c = 0; c < order; ++c) {
            const auto e = entries[r * order + c];
            if (e != 1 && e != -1) return false;
            if (e == 1) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
        }
    }
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            std::size_t diff = 0;
            for (std::size_t w = 0; w < words; ++w) diff += std::popcount(bits[i * words + w] ^ bits[j * words + w]);
            if (2 * diff != order) return false;
        }
    }
    return true;
}

HadamardMatrix HadamardMatrix::from_entries(std::size_t order, std::vector<std::int8_t> entries) {
    if (!verify_hadamard(order, entries)) {
        throw InvalidInput("matrix of order " + std::to_string(order) + " is not a Hadamard matrix");
    }
    return HadamardMatrix(order, std::move(entries));
}

HadamardMatrix hadamard_sylvester(unsigned k, std::size_t max_order) {
    if (k >= 8 * sizeof(std::size_t) - 1) throw ResourceLimit("Sylvester exponent " + std::to_string(k) + " too large");
    const std::size_t order = std::size_t{1} << k;
    check_order_limit(order, max_order);
    std::vector<std::int8_t> h{1};
    for (std::size_t size = 1; size < order; size *= 2) {
        std::vector<std::int8_t> next(4 * size * size);
        const std::size_t width = 2 * size;
        for (std::size_t r = 0; r < size; ++r) {
            for (std::size_t c = 0; c < size; ++c) {
                const std::int8_t e = h[r * size + c];
                next[r * width + c] = e;
                next[r * width + c + size] = e;
                next[(r + size) * width + c] = e;
                next[(r + size) * width + c + size] = static_cast<std::int8_t>(-e);
            }
        }
        h = std::move(next);
    }
    return HadamardMatrix::from_entries(order, std::move(h));
}

HadamardMatrix hadamard_paley(std::uint64_t p, std::size_t max_order) {
    if (!is_prime(p)) throw InvalidInput("Paley construction needs a prime, " + std::to_string(p) + " is not prime");
    if (p % 4 != 3) throw InvalidInput("Paley type I needs p = 3 (mod 4), got p = " + std::to_string(p));
    check_order_limit(p + 1, max_order);

    // Quadratic character of GF(p).
    std::vector<std::int8_t> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x < p; ++x) chi[(x * x) % p] = 1;

    // H = I + S with S = [[0, 1^T], [-1, Q]] and Q_ij = chi(j - i).
    const std::size_t order = p + 1;
    std::vector<std::int8_t> h(order * order);
    auto at = [&](std::size_t r, std::size_t c) -> std::int8_t& { return h[r * order + c]; };
    for (std::size_t c = 1; c < order; ++c) {
        at(0, c) = 1;
        at(c, 0) = -1;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) at(i + 1, j + 1) = chi[(j + p - i) % p];
    for (std::size_t i = 0; i < order; ++i) at(i, i) = static_cast<std::int8_t>(at(i, i) + 1);
    return HadamardMatrix::from_entries(order, std::move(h));
}

HadamardMatrix hadamard_kronecker(const HadamardMatrix& a, const HadamardMatrix& b, std::size_t max_order) {
    const std::size_t na = a.order(), nb = b.order();
    if (nb != 0 && na > max_order / nb) {
        throw ResourceLimit("Kronecker product of orders " + std::to_string(na) + " and " + std::to_string(nb) +
                            " exceeds the limit " + std::to_string(max_order));
    }
    const std::size_t order = na * nb;
    std::vector<std::int8_t> h(order * order);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    h[(i * nb + k) * order + j * nb + l] = static_cast<std::int8_t>(a(i, j) * b(k, l));
    return HadamardMatrix::from_entries(order, std::move(h));
}

HadamardMatrix hadamard_of_order(std::size_t order, std::size_t max_order) {
    if (order == 0) throw InvalidInput("Hadamard order must be positive");
    check_order_limit(order, max_order);
    if (is_power_of_two(order)) return hadamard_sylvester(static_cast<unsigned>(std::countr_zero(order)), max_order);
    // order = 2^a (p + 1), largest Paley factor first.
    for (std::size_t twos = 0; (order >> twos) >= 4 && (order % (std::size_t{1} << twos)) == 0; ++twos) {
        const std::size_t rest = order >> twos;
        if (rest >= 4 && is_prime(rest - 1) && (rest - 1) % 4 == 3) {
            auto paley = hadamard_paley(rest - 1, max_order);
            if (twos == 0) return paley;
            return hadamard_kronecker(hadamard_sylvester(static_cast<unsigned>(twos), max_order), paley, max_order);
        }
    }
    throw InvalidInput("no supported construction (Sylvester, Paley I, Kronecker) for order " +
                       std::to_string(order));
}

Family hadamard_to_family(const HadamardMatrix& h) {
    if (h.order() < 2) throw InvalidInput("Hadamard matrix of order 1 gives a family without pairs");
    const int n = static_cast<int>(h.order());
    std::vector<Word> rows;
    rows.reserve(h.order());
    for (std::size_t r = 0; r < h.order(); ++r) {
        Word w(n);
        for (int c = 0; c < n; ++c) w[c] = h(r, c) == 1 ? 1 : 0;
        rows.push_back(std::move(w));
    }
    return Family(n, 2, std::move(rows));
}

}  // namespace equidist
