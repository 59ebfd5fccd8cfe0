#include "equidist/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "equidist/error.hpp"

namespace equidist {

namespace {

void check_word(std::span<const Symbol> w, int n, int q, const char* what) {
    if (static_cast<int>(w.size()) != n) {
        std::ostringstream os;
        os << what << " has length " << w.size() << ", expected " << n;
        throw InvalidInput(os.str());
    }
    for (Symbol s : w) {
        if (s >= static_cast<Symbol>(q)) {
            std::ostringstream os;
            os << what << " contains symbol " << s << " outside {0,...," << q - 1 << "}";
            throw InvalidInput(os.str());
        }
    }
}

}  // namespace

int hamming_distance(std::span<const Symbol> u, std::span<const Symbol> v, int q) {
    if (q < 2) throw InvalidInput("alphabet size must be at least 2");
    if (u.size() != v.size()) {
        std::ostringstream os;
        os << "length mismatch: " << u.size() << " vs " << v.size();
        throw InvalidInput(os.str());
    }
    const int n = static_cast<int>(u.size());
    check_word(u, n, q, "first vector");
    check_word(v, n, q, "second vector");
    int d = 0;
    for (int i = 0; i < n; ++i) d += (u[i] != v[i]);
    return d;
}

Family::Family(int n, int q, std::vector<Word> members) : n_(n), q_(q), members_(std::move(members)) {
    if (q_ < 2) throw InvalidInput("alphabet size q must be at least 2");
    if (n_ < 0 || (n_ == 0 && !members_.empty())) throw InvalidInput("vector length n must be positive");
    for (const auto& w : members_) check_word(w, n_, q_, "member");
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw InvalidInput("duplicate member " + format_word(*dup, q_));
    }
    if (q_ == 2) {
        words_per_row_ = (static_cast<std::size_t>(n_) + 63) / 64;
        packed_.assign(words_per_row_ * members_.size(), 0);
        for (std::size_t r = 0; r < members_.size(); ++r) {
            for (int c = 0; c < n_; ++c) {
                if (members_[r][c]) packed_[r * words_per_row_ + c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }
}

int Family::distance(std::size_t i, std::size_t j) const {
    if (q_ == 2) {
        const auto* a = packed_.data() + i * words_per_row_;
        const auto* b = packed_.data() + j * words_per_row_;
        int d = 0;
        for (std::size_t k = 0; k < words_per_row_; ++k) d += std::popcount(a[k] ^ b[k]);
        return d;
    }
    const auto& u = members_[i];
    const auto& v = members_[j];
    int d = 0;
    for (int c = 0; c < n_; ++c) d += (u[c] != v[c]);
    return d;
}

EquidistanceCheck check_equidistant(const Family& f) {
    const std::size_t m = f.size();
    if (m < 2) throw Underdetermined("equidistance needs at least two members, family has " + std::to_string(m));
    const int lambda = f.distance(0, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const int d = f.distance(i, j);
            if (d != lambda) return EquidistanceViolation{0, 1, lambda, i, j, d};
        }
    }
    return EquidistanceCertificate{lambda, static_cast<std::uint64_t>(m) * (m - 1) / 2};
}

EquidistanceCertificate require_equidistant(const Family& f) {
    auto check = check_equidistant(f);
    if (auto* v = std::get_if<EquidistanceViolation>(&check)) throw NotEquidistant(describe(f, *v));
    return std::get<EquidistanceCertificate>(check);
}

std::string describe(const Family& f, const EquidistanceViolation& v) {
    std::ostringstream os;
    os << "pair (" << format_word(f[v.i], f.q()) << ", " << format_word(f[v.j], f.q()) << ") has distance "
       << v.distance << " while (" << format_word(f[v.reference_i], f.q()) << ", "
       << format_word(f[v.reference_j], f.q()) << ") has " << v.reference_distance;
    return os.str();
}

Isometry Isometry::identity(int n, int q) {
    Isometry iso;
    iso.coordinate_permutation.resize(n);
    std::iota(iso.coordinate_permutation.begin(), iso.coordinate_permutation.end(), 0);
    std::vector<Symbol> id(q);
    std::iota(id.begin(), id.end(), Symbol{0});
    iso.symbol_permutations.assign(n, id);
    return iso;
}

Isometry Isometry::random(int n, int q, std::mt19937_64& rng) {
    Isometry iso = identity(n, q);
    std::shuffle(iso.coordinate_permutation.begin(), iso.coordinate_permutation.end(), rng);
    for (auto& p : iso.symbol_permutations) std::shuffle(p.begin(), p.end(), rng);
    return iso;
}

void Isometry::validate(int n, int q) const {
    if (static_cast<int>(coordinate_permutation.size()) != n || static_cast<int>(symbol_permutations.size()) != n) {
        throw InvalidInput("isometry acts on length " + std::to_string(coordinate_permutation.size()) +
                           ", family has length " + std::to_string(n));
    }
    std::vector<char> seen(n, 0);
    for (int p : coordinate_permutation) {
        if (p < 0 || p >= n || seen[p]) throw InvalidInput("coordinate map is not a permutation");
        seen[p] = 1;
    }
    for (const auto& sp : symbol_permutations) {
        if (static_cast<int>(sp.size()) != q) throw InvalidInput("symbol map does not match alphabet size");
        std::vector<char> hit(q, 0);
        for (Symbol s : sp) {
            if (s >= static_cast<Symbol>(q) || hit[s]) throw InvalidInput("symbol map is not a permutation");
            hit[s] = 1;
        }
    }
}

Word Isometry::apply(std::span<const Symbol> w) const {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[coordinate_permutation[i]] = symbol_permutations[i][w[i]];
    return out;
}

Family apply_isometry(const Isometry& iso, const Family& f) {
    iso.validate(f.n(), f.q());
    std::vector<Word> image;
    image.reserve(f.size());
    for (const auto& w : f.members()) image.push_back(iso.apply(w));
    return Family(f.n(), f.q(), std::move(image));
}

std::string format_word(std::span<const Symbol> w, int q) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (q > 10 && i > 0) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace equidist
