#pragma once

#include <span>
#include <string_view>

#include "equidist/core.hpp"
#include "equidist/exact_linalg.hpp"

namespace equidist {

enum class GramConclusion { bound_n_proven, exceptional_inconclusive };

std::string_view to_string(GramConclusion c);

/// Outcome of running the Gram-matrix argument on a concrete binary family.
struct GramCertificate {
    int m = 0;
    int n = 0;
    int lambda = 0;
    BigInt det_value;
    std::size_t rank_value = 0;
    bool pd = false;
    bool gram_matches_structure = false;
    GramConclusion conclusion = GramConclusion::exceptional_inconclusive;
};

/// m x n matrix with entry +1 where member i has a 1 in coordinate j, -1 elsewhere.
/// Throws UnsupportedAlphabet for q != 2 and InvalidInput for an empty family.
ExactMatrix signed_incidence_matrix(const Family& f);

/// Builds N = M M^T for an equidistant binary family, checks it against
/// (n - 2 lambda) J + 2 lambda I entrywise, and evaluates determinant, rank
/// and definiteness. The closed-form determinant is cross-checked against
/// Bareiss elimination on N; a mismatch is a logic_error.
///
/// Throws NotEquidistant (naming the violating pair), Underdetermined for
/// m < 2, UnsupportedAlphabet for q != 2.
GramCertificate gram_certificate(const Family& f);

/// The quadratic form <sum mu_i v_i, sum mu_i v_i> over the signed rows v_i.
///
/// Evaluated twice, directly from the rows and through the closed form
/// 2 lambda sum mu_i^2 + (n - 2 lambda) (sum mu_i)^2; the two must agree.
/// Requires 2 lambda <= n (OutOfRegime otherwise) and |mu| = m.
Rational quadratic_form_value(const Family& f, std::span<const Rational> mu);

}  // namespace equidist
