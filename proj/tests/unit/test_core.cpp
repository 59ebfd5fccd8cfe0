#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "equidist/construct.hpp"
#include "equidist/core.hpp"
#include "equidist/error.hpp"
#include "equidist/family_io.hpp"
#include "oracles.hpp"

using namespace equidist;

namespace {

Word random_word(std::mt19937_64& rng, int n, int q) {
    std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(q - 1));
    Word w(n);
    for (auto& s : w) s = sym(rng);
    return w;
}

Family random_family(std::mt19937_64& rng, int n, int q, std::size_t m) {
    std::size_t space = 1;
    for (int i = 0; i < n && space < m; ++i) space *= static_cast<std::size_t>(q);
    m = std::min(m, space);
    std::set<Word> members;
    while (members.size() < m) members.insert(random_word(rng, n, q));
    return Family(n, q, {members.begin(), members.end()});
}

Family family(int n, int q, std::vector<Word> members) { return Family(n, q, std::move(members)); }

}  // namespace

TEST_CASE("hamming_distance examples") {
    CHECK(hamming_distance(Word{0, 1, 1, 0}, Word{0, 1, 1, 0}, 2) == 0);
    // F = {1,2}, G = {2,3} in n = 3: |F xor G| = |{1,3}| = 2.
    CHECK(hamming_distance(Word{1, 1, 0}, Word{0, 1, 1}, 2) == 2);
    CHECK(hamming_distance(Word{0, 2}, Word{2, 1}, 3) == 2);
}

TEST_CASE("hamming_distance rejects malformed input") {
    CHECK_THROWS_AS(hamming_distance(Word{0, 1}, Word{0, 1, 1}, 2), InvalidInput);
    CHECK_THROWS_AS(hamming_distance(Word{0, 2}, Word{0, 1}, 2), InvalidInput);
    CHECK_THROWS_AS(hamming_distance(Word{0}, Word{0}, 1), InvalidInput);
}

TEST_CASE("hamming_distance is a metric on random triples") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int q = 2 + trial % 4;
        const int n = 1 + trial % 9;
        const auto u = random_word(rng, n, q), v = random_word(rng, n, q), w = random_word(rng, n, q);
        const int uv = hamming_distance(u, v, q);
        CHECK(uv == hamming_distance(v, u, q));
        CHECK((uv == 0) == (u == v));
        CHECK(hamming_distance(u, w, q) <= uv + hamming_distance(v, w, q));
    }
}

TEST_CASE("binary distance equals the size of the symmetric difference of supports") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + trial % 70;
        const auto u = random_word(rng, n, 2), v = random_word(rng, n, 2);
        std::set<int> f, g;
        for (int i = 0; i < n; ++i) {
            if (u[i]) f.insert(i);
            if (v[i]) g.insert(i);
        }
        std::vector<int> sym;
        std::set_symmetric_difference(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(sym));
        const Family fam(n, 2, u == v ? std::vector<Word>{u} : std::vector<Word>{u, v});
        CHECK(hamming_distance(u, v, 2) == static_cast<int>(sym.size()));
        if (u != v) CHECK(fam.distance(0, 1) == static_cast<int>(sym.size()));
    }
}

TEST_CASE("Family keeps members sorted and rejects invalid members") {
    const Family f = family(3, 2, {{1, 1, 0}, {0, 0, 0}, {0, 1, 1}});
    CHECK(f.members() == std::vector<Word>{{0, 0, 0}, {0, 1, 1}, {1, 1, 0}});
    CHECK(f == family(3, 2, {{0, 1, 1}, {1, 1, 0}, {0, 0, 0}}));

    CHECK_THROWS_AS(family(2, 2, {{0, 1}, {0, 1}}), InvalidInput);
    CHECK_THROWS_AS(family(2, 2, {{0, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(family(2, 2, {{0, 2}}), InvalidInput);
    CHECK_THROWS_AS(family(2, 1, {}), InvalidInput);
    CHECK_NOTHROW(family(2, 2, {}));
    CHECK_NOTHROW(family(2, 2, {{1, 0}}));
}

TEST_CASE("check_equidistant examples") {
    SUBCASE("even-weight words of length 3") {
        const Family f = family(3, 2, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
        // All six pairs, computed directly.
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(oracle::naive_distance(f[i], f[j]) == 2);
        const auto check = check_equidistant(f);
        REQUIRE(std::holds_alternative<EquidistanceCertificate>(check));
        CHECK(std::get<EquidistanceCertificate>(check).lambda == 2);
        CHECK(std::get<EquidistanceCertificate>(check).pair_count == 6);
    }
    SUBCASE("violation names the offending pair") {
        const Family f = family(2, 2, {{0, 0}, {0, 1}, {1, 1}});
        const auto check = check_equidistant(f);
        REQUIRE(std::holds_alternative<EquidistanceViolation>(check));
        const auto& v = std::get<EquidistanceViolation>(check);
        CHECK(f[v.i] == Word{0, 0});
        CHECK(f[v.j] == Word{1, 1});
        CHECK(v.distance == 2);
        CHECK(v.reference_distance == 1);
        CHECK(describe(f, v) == "pair (00, 11) has distance 2 while (00, 01) has 1");
        CHECK_THROWS_AS(require_equidistant(f), NotEquidistant);
    }
    SUBCASE("order-4 Hadamard family") {
        const auto cert = require_equidistant(hadamard_to_family(hadamard_sylvester(2)));
        CHECK(cert.lambda == 2);
    }
    SUBCASE("fewer than two members is underdetermined") {
        CHECK_THROWS_AS(check_equidistant(family(3, 2, {})), Underdetermined);
        CHECK_THROWS_AS(check_equidistant(family(3, 2, {{1, 0, 1}})), Underdetermined);
    }
}

TEST_CASE("apply_isometry examples") {
    const Family f = family(2, 2, {{0, 0}, {0, 1}});
    CHECK(apply_isometry(Isometry::identity(2, 2), f) == f);

    Isometry swap = Isometry::identity(2, 2);
    swap.coordinate_permutation = {1, 0};
    const Family image = apply_isometry(swap, f);
    CHECK(image == family(2, 2, {{0, 0}, {1, 0}}));
    CHECK(image.distance(0, 1) == 1);

    std::mt19937_64 rng(2024);
    const Family h4 = hadamard_to_family(hadamard_sylvester(2));
    for (int i = 0; i < 20; ++i) {
        const Family moved = apply_isometry(Isometry::random(4, 2, rng), h4);
        CHECK(require_equidistant(moved).lambda == 2);
    }
}

TEST_CASE("apply_isometry rejects mismatched dimensions") {
    const Family f = family(2, 3, {{0, 0}, {1, 2}});
    CHECK_THROWS_AS(apply_isometry(Isometry::identity(3, 3), f), InvalidInput);
    CHECK_THROWS_AS(apply_isometry(Isometry::identity(2, 2), f), InvalidInput);
    Isometry bad = Isometry::identity(2, 3);
    bad.coordinate_permutation = {0, 0};
    CHECK_THROWS_AS(apply_isometry(bad, f), InvalidInput);
}

TEST_CASE("isometries preserve every distance and the equidistance verdict") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = 2 + trial % 3;
        const int n = 1 + trial % 6;
        const Isometry iso = Isometry::random(n, q, rng);
        const auto u = random_word(rng, n, q), v = random_word(rng, n, q);
        CHECK(hamming_distance(iso.apply(u), iso.apply(v), q) == hamming_distance(u, v, q));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;
        const Family f = random_family(rng, n, 3, 2 + trial % 3);
        const Family g = apply_isometry(Isometry::random(n, 3, rng), f);
        const auto a = check_equidistant(f), b = check_equidistant(g);
        REQUIRE(a.index() == b.index());
        if (const auto* ca = std::get_if<EquidistanceCertificate>(&a)) {
            CHECK(ca->lambda == std::get<EquidistanceCertificate>(b).lambda);
        }
    }
}

TEST_CASE("family text format") {
    const char* text =
        "# a comment\n"
        "3 2\n"
        "\n"
        "1 1 0\n"
        "  # indented comment\n"
        "0 0 0\n";
    const Family f = parse_family(std::string_view(text));
    CHECK(f.n() == 3);
    CHECK(f.q() == 2);
    CHECK(f.members() == std::vector<Word>{{0, 0, 0}, {1, 1, 0}});
    CHECK(serialize_family(f) == "3 2\n0 0 0\n1 1 0\n");

    CHECK_THROWS_AS(parse_family(std::string_view("")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("3\n")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("2 2\n0 x\n")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("2 2\n0 1 1\n")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("2 2\n0 2\n")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("2 2\n0 -1\n")), InvalidInput);
    CHECK_THROWS_AS(parse_family(std::string_view("2 2\n0 1\n0 1\n")), InvalidInput);
}

TEST_CASE("parse -> serialize -> parse is the identity") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 2 + trial % 12;
        const int n = 1 + trial % 7;
        const Family f = random_family(rng, n, q, 1 + trial % 5);
        const std::string text = serialize_family(f);
        const Family g = parse_family(std::string_view(text));
        CHECK(g == f);
        CHECK(serialize_family(g) == text);
    }
}
