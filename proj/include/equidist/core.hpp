#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace equidist {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Number of coordinates where `u` and `v` differ.
///
/// Throws InvalidInput if the lengths differ or a symbol is not in {0,...,q-1}.
int hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v, int q);

/// An ordered collection of pairwise distinct q-ary words of length n.
///
/// Members are kept in lexicographic order regardless of the order they were
/// supplied in, so two families with the same members compare equal. For
/// q = 2 every member is also held as a packed bit row and distances reduce
/// to a popcount.
class Family {
public:
    Family(int n, int q, std::vector<Word> members = {});

    int n() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }

    const std::vector<Word>& members() const noexcept { return members_; }
    const Word& operator[](std::size_t i) const { return members_[i]; }

    /// Distance between members i and j.
    int distance(std::size_t i, std::size_t j) const;

    friend bool operator==(const Family& a, const Family& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.members_ == b.members_;
    }

private:
    int n_;
    int q_;
    std::vector<Word> members_;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> packed_;
};

struct EquidistanceCertificate {
    int lambda = 0;
    std::uint64_t pair_count = 0;
};

/// Evidence that a family is not equidistant: the first pair (in member
/// order) whose distance differs from the distance of the reference pair (0, 1).
struct EquidistanceViolation {
    std::size_t reference_i = 0;
    std::size_t reference_j = 1;
    int reference_distance = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    int distance = 0;
};

using EquidistanceCheck = std::variant<EquidistanceCertificate, EquidistanceViolation>;

/// Checks every distinct pair. Throws Underdetermined when the family has
/// fewer than two members.
EquidistanceCheck check_equidistant(const Family& f);

/// Like check_equidistant but throws NotEquidistant naming the violating pair.
EquidistanceCertificate require_equidistant(const Family& f);

std::string describe(const Family& f, const EquidistanceViolation& v);

/// Distance-preserving map of {0,...,q-1}^n: each coordinate i has its symbols
/// relabelled by symbol_permutations[i] and is then moved to position
/// coordinate_permutation[i].
struct Isometry {
    std::vector<int> coordinate_permutation;
    std::vector<std::vector<Symbol>> symbol_permutations;

    static Isometry identity(int n, int q);
    static Isometry random(int n, int q, std::mt19937_64& rng);

    int n() const noexcept { return static_cast<int>(coordinate_permutation.size()); }

    /// Throws InvalidInput unless this is a well-formed isometry of {0..q-1}^n.
    void validate(int n, int q) const;

    Word apply(std::span<const Symbol> w) const;
};

Family apply_isometry(const Isometry& iso, const Family& f);

/// Compact rendering: digits concatenated when q <= 10, comma separated otherwise.
std::string format_word(std::span<const Symbol> w, int q);

}  // namespace equidist
