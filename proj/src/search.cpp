#include "equidist/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "clique.hpp"
#include "equidist/error.hpp"

namespace equidist {

namespace {

using detail::Bitset;
using detail::Graph;

void validate(int n, int q, int lambda) {
    if (n < 1) throw InvalidInput("n must be positive, got " + std::to_string(n));
    if (q < 2) throw InvalidInput("q must be at least 2, got " + std::to_string(q));
    if (lambda < 1 || lambda > n) {
        throw InvalidInput("lambda must lie in [1, " + std::to_string(n) + "], got " + std::to_string(lambda));
    }
}

std::uint64_t space_size(int n, int q, std::uint64_t limit) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > limit / static_cast<std::uint64_t>(q)) {
            throw ResourceLimit(std::to_string(q) + "^" + std::to_string(n) + " words exceed the enumeration limit " +
                                std::to_string(limit));
        }
        size *= static_cast<std::uint64_t>(q);
    }
    if (size > limit) {
        throw ResourceLimit(std::to_string(q) + "^" + std::to_string(n) + " words exceed the enumeration limit " +
                            std::to_string(limit));
    }
    return size;
}

// All q-ary words of length n, indexed so that index order is lexicographic
// order (coordinate 0 is the most significant digit).
class WordSpace {
public:
    WordSpace(int n, int q, std::uint64_t size) : n_(n), q_(q), size_(size), digits_(size * n) {
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            std::uint64_t x = idx;
            for (int c = n - 1; c >= 0; --c) {
                digits_[idx * n + c] = static_cast<Symbol>(x % q);
                x /= q;
            }
        }
    }

    std::uint64_t size() const { return size_; }

    int distance(std::uint64_t a, std::uint64_t b) const {
        if (q_ == 2) return std::popcount(a ^ b);
        const Symbol* u = &digits_[a * n_];
        const Symbol* v = &digits_[b * n_];
        int d = 0;
        for (int c = 0; c < n_; ++c) d += (u[c] != v[c]);
        return d;
    }

    Word word(std::uint64_t idx) const {
        return Word(digits_.begin() + static_cast<std::ptrdiff_t>(idx * n_),
                    digits_.begin() + static_cast<std::ptrdiff_t>((idx + 1) * n_));
    }

    // 0...0 1...1 with `ones` trailing ones.
    std::uint64_t trailing_ones(int ones) const {
        std::uint64_t idx = 0;
        for (int c = 0; c < n_; ++c) idx = idx * q_ + (c >= n_ - ones ? 1 : 0);
        return idx;
    }

private:
    int n_;
    int q_;
    std::uint64_t size_;
    std::vector<Symbol> digits_;
};

struct ReducedGraph {
    std::vector<std::uint64_t> fixed;       // members forced into every family
    std::vector<std::uint64_t> candidates;  // graph vertex -> word index, ascending
    Graph graph;
};

ReducedGraph build_graph(const WordSpace& space, int lambda, bool reduce) {
    ReducedGraph r;
    if (reduce) {
        r.fixed = {0, space.trailing_ones(lambda)};
        for (std::uint64_t u = 0; u < space.size(); ++u) {
            if (space.distance(u, r.fixed[0]) == lambda && space.distance(u, r.fixed[1]) == lambda) {
                r.candidates.push_back(u);
            }
        }
    } else {
        r.candidates.resize(space.size());
        std::iota(r.candidates.begin(), r.candidates.end(), std::uint64_t{0});
    }
    const std::size_t order = r.candidates.size();
    r.graph.order = order;
    r.graph.adjacency.assign(order, Bitset(order));
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i + 1; j < order; ++j) {
            if (space.distance(r.candidates[i], r.candidates[j]) == lambda) {
                r.graph.adjacency[i].set(j);
                r.graph.adjacency[j].set(i);
            }
        }
    }
    return r;
}

}  // namespace

SearchResult max_equidistant(const SearchProblem& problem) {
    const int n = problem.n, q = problem.q, lambda = problem.lambda;
    validate(n, q, lambda);
    if (problem.thread_count == 0) throw InvalidInput("thread count must be positive");
    if (problem.node_budget && *problem.node_budget == 0) throw InvalidInput("node budget must be positive");

    const WordSpace space(n, q, space_size(n, q, problem.max_vertices));
    const ReducedGraph reduced = build_graph(space, lambda, problem.symmetry_reduction);

    detail::SearchControl control(problem.node_budget, problem.time_budget);
    const auto outcome = detail::maximum_clique(reduced.graph, control, problem.thread_count);

    std::vector<std::size_t> chosen = outcome.clique;
    if (outcome.complete) {
        chosen = detail::lex_least_clique(reduced.graph, outcome.clique.size(), control);
        if (chosen.size() != outcome.clique.size()) throw std::logic_error("witness extraction lost the maximum clique");
    }

    std::vector<std::uint64_t> members = reduced.fixed;
    for (auto v : chosen) members.push_back(reduced.candidates[v]);
    if (members.size() < 2) {
        // Only reachable without symmetry reduction when the budget ran out
        // before any clique was recorded; every distance-lambda pair is a family.
        members = {0, space.trailing_ones(lambda)};
    }

    std::vector<Word> words;
    words.reserve(members.size());
    for (auto idx : members) words.push_back(space.word(idx));

    SearchResult result;
    result.witness = Family(n, q, std::move(words));
    result.max_size = result.witness.size();
    result.nodes_explored = control.nodes();
    result.complete = outcome.complete;
    result.bound_comparison = conjecture_bound(n, q, lambda);

    const auto cert = require_equidistant(result.witness);
    if (cert.lambda != lambda) throw std::logic_error("search witness has the wrong distance");
    if (result.complete && BigInt(result.max_size) > bound_delsarte(n, q, 1)) {
        throw std::logic_error("complete search exceeded the one-distance Delsarte cap");
    }
    return result;
}

std::vector<Family> enumerate_extremal(int n, int lambda) {
    validate(n, 2, lambda);
    if (is_exceptional_binary(n, lambda)) {
        throw InvalidInput("lambda = (n+1)/2 is the excluded case; use max_equidistant (search) to explore it");
    }
    if (n > kMaxExtremalLength) {
        throw ResourceLimit("extremal enumeration is limited to n <= " + std::to_string(kMaxExtremalLength));
    }

    const std::uint64_t size = std::uint64_t{1} << n;
    const WordSpace space(n, 2, size);
    const ReducedGraph reduced = build_graph(space, lambda, true);

    // Coordinate permutations as lookup tables on n-bit words.
    std::vector<std::vector<std::uint32_t>> perm_tables;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<std::uint32_t> table(size);
        for (std::uint32_t w = 0; w < size; ++w) {
            std::uint32_t image = 0;
            for (int c = 0; c < n; ++c)
                if ((w >> c) & 1U) image |= std::uint32_t{1} << perm[c];
            table[w] = image;
        }
        perm_tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // The least image of a family contains 0, so only translations by a
    // member need to be tried.
    auto canonical = [&](const std::vector<std::uint32_t>& fam) {
        std::vector<std::uint32_t> best, image(fam.size());
        for (auto t : fam) {
            for (const auto& table : perm_tables) {
                for (std::size_t i = 0; i < fam.size(); ++i) image[i] = table[fam[i] ^ t];
                std::sort(image.begin(), image.end());
                if (best.empty() || image < best) best = image;
            }
        }
        return best;
    };

    std::set<std::vector<std::uint32_t>> orbits;
    const std::size_t target = static_cast<std::size_t>(n);
    if (target >= reduced.fixed.size()) {
        detail::for_each_clique(reduced.graph, target - reduced.fixed.size(), [&](const std::vector<std::size_t>& c) {
            std::vector<std::uint32_t> fam(reduced.fixed.begin(), reduced.fixed.end());
            for (auto v : c) fam.push_back(static_cast<std::uint32_t>(reduced.candidates[v]));
            orbits.insert(canonical(fam));
        });
    }

    std::vector<Family> out;
    out.reserve(orbits.size());
    for (const auto& rep : orbits) {
        std::vector<Word> words;
        for (auto idx : rep) words.push_back(space.word(idx));
        out.emplace_back(n, 2, std::move(words));
    }
    return out;
}

}  // namespace equidist
