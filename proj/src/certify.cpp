#include "equidist/certify.hpp"

#include <stdexcept>
#include <string>

#include "equidist/error.hpp"

namespace equidist {

std::string_view to_string(GramConclusion c) {
    switch (c) {
        case GramConclusion::bound_n_proven: return "bound_n_proven";
        case GramConclusion::exceptional_inconclusive: return "exceptional_inconclusive";
    }
    return "unknown";
}

ExactMatrix signed_incidence_matrix(const Family& f) {
    if (f.q() != 2) throw UnsupportedAlphabet("signed incidence matrix needs q = 2, family has q = " + std::to_string(f.q()));
    if (f.empty()) throw InvalidInput("signed incidence matrix of an empty family");
    ExactMatrix m(f.size(), static_cast<std::size_t>(f.n()));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.n(); ++j) m(i, j) = f[i][j] ? 1 : -1;
    return m;
}

GramCertificate gram_certificate(const Family& f) {
    if (f.q() != 2) throw UnsupportedAlphabet("Gram certificate needs q = 2, family has q = " + std::to_string(f.q()));
    const auto eq = require_equidistant(f);

    GramCertificate cert;
    cert.m = static_cast<int>(f.size());
    cert.n = f.n();
    cert.lambda = eq.lambda;

    const ExactMatrix signed_rows = signed_incidence_matrix(f);
    const ExactMatrix gram = signed_rows * signed_rows.transpose();
    const StructuredMatrixSpec spec{static_cast<std::int64_t>(cert.n) - 2LL * cert.lambda, 2LL * cert.lambda,
                                    f.size()};
    cert.gram_matches_structure = (gram == spec.materialize());
    if (!cert.gram_matches_structure) throw std::logic_error("Gram matrix of an equidistant family is not (n-2l)J + 2lI");

    cert.det_value = structured_det(spec);
    if (det_exact(gram) != cert.det_value) {
        throw std::logic_error("closed-form determinant disagrees with elimination");
    }
    cert.rank_value = rank_exact(gram);
    cert.pd = is_positive_definite_structured(spec);

    // det N = (2 lambda + m (n - 2 lambda)) (2 lambda)^(m-1) and lambda >= 1,
    // so det N vanishes exactly when the leading factor does.
    const long long head = 2LL * cert.lambda + static_cast<long long>(cert.m) * (cert.n - 2LL * cert.lambda);
    cert.conclusion = (cert.det_value != 0) ? GramConclusion::bound_n_proven : GramConclusion::exceptional_inconclusive;
    if ((head != 0) != (cert.det_value != 0)) throw std::logic_error("determinant factorisation inconsistent");
    if (cert.conclusion == GramConclusion::bound_n_proven &&
        (cert.rank_value != f.size() || cert.m > cert.n)) {
        throw std::logic_error("nonsingular Gram matrix without full row rank");
    }
    return cert;
}

Rational quadratic_form_value(const Family& f, std::span<const Rational> mu) {
    if (f.q() != 2) throw UnsupportedAlphabet("quadratic form needs q = 2, family has q = " + std::to_string(f.q()));
    if (mu.size() != f.size()) {
        throw InvalidInput("coefficient vector has length " + std::to_string(mu.size()) + ", family has " +
                           std::to_string(f.size()) + " members");
    }
    const auto eq = require_equidistant(f);
    const int n = f.n();
    if (2 * eq.lambda > n) {
        throw OutOfRegime("quadratic-form argument needs lambda <= n/2, got lambda = " + std::to_string(eq.lambda) +
                          ", n = " + std::to_string(n));
    }

    Rational direct = 0;
    for (int j = 0; j < n; ++j) {
        Rational coord = 0;
        for (std::size_t i = 0; i < f.size(); ++i) coord += f[i][j] ? mu[i] : Rational(-mu[i]);
        direct += coord * coord;
    }

    Rational sum = 0, sum_sq = 0;
    for (const auto& x : mu) {
        sum += x;
        sum_sq += x * x;
    }
    const Rational closed = Rational(2 * eq.lambda) * sum_sq + Rational(n - 2 * eq.lambda) * sum * sum;
    if (direct != closed) throw std::logic_error("quadratic form disagrees with its closed form");
    return direct;
}

}  // namespace equidist
