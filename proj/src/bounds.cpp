#include "equidist/bounds.hpp"

#include <string>

#include "equidist/error.hpp"

namespace equidist {

namespace {

void check_lambda(int n, int lambda) {
    if (n < 1) throw InvalidInput("n must be positive, got " + std::to_string(n));
    if (lambda < 1 || lambda > n) {
        throw InvalidInput("lambda must lie in [1, " + std::to_string(n) + "], got " + std::to_string(lambda));
    }
}

}  // namespace

std::string_view to_string(BoundSource s) {
    switch (s) {
        case BoundSource::delsarte: return "delsarte";
        case BoundSource::corollary_q2: return "corollary_q2";
        case BoundSource::main_theorem: return "main_theorem";
        case BoundSource::conjecture: return "conjecture";
    }
    return "unknown";
}

BigInt bound_delsarte(int n, int q, int s) {
    if (n < 1) throw InvalidInput("n must be positive, got " + std::to_string(n));
    if (q < 2) throw InvalidInput("q must be at least 2, got " + std::to_string(q));
    if (s < 1 || s > n) throw InvalidInput("s must lie in [1, n], got " + std::to_string(s));
    BigInt total = 0;
    BigInt binom = 1;  // C(n, i)
    BigInt power = 1;  // (q-1)^i
    for (int i = 0; i <= s; ++i) {
        total += binom * power;
        binom = binom * (n - i) / (i + 1);
        power *= (q - 1);
    }
    return total;
}

bool is_exceptional_binary(int n, int lambda) { return 2LL * lambda == static_cast<long long>(n) + 1; }

bool is_exceptional_qary(int n, int q, int lambda) {
    return static_cast<long long>(q) * lambda == static_cast<long long>(q - 1) * (n + 1LL);
}

BoundReport bound_single_distance(int n, int lambda) {
    check_lambda(n, lambda);
    BoundReport r;
    r.excluded_value = Rational(n + 1, 2);
    if (!is_exceptional_binary(n, lambda)) {
        r.bound = n;
        r.source = BoundSource::main_theorem;
        r.exceptional = false;
    } else {
        // One distance, q = 2: at most C(n,0) + C(n,1) = n + 1 members.
        r.bound = bound_delsarte(n, 2, 1);
        r.source = BoundSource::corollary_q2;
        r.exceptional = true;
    }
    return r;
}

BoundReport conjecture_bound(int n, int q, int lambda) {
    if (q < 2) throw InvalidInput("q must be at least 2, got " + std::to_string(q));
    check_lambda(n, lambda);
    if (q == 2) return bound_single_distance(n, lambda);
    BoundReport r;
    r.conjectural = true;
    r.excluded_value = Rational(static_cast<long long>(q - 1) * (n + 1), q);
    if (!is_exceptional_qary(n, q, lambda)) {
        r.bound = BigInt(n) * (q - 1);
        r.source = BoundSource::conjecture;
    } else {
        r.bound = bound_delsarte(n, q, 1);
        r.source = BoundSource::delsarte;
        r.exceptional = true;
    }
    return r;
}

}  // namespace equidist
