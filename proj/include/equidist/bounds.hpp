#pragma once

#include <optional>
#include <string_view>

#include "equidist/exact_linalg.hpp"

namespace equidist {

enum class BoundSource { delsarte, corollary_q2, main_theorem, conjecture };

std::string_view to_string(BoundSource s);

/// An upper bound on the size of a family, together with the statement it
/// came from. `exceptional` is set when lambda hits the value excluded by the
/// single-distance statement; the bound is then the fallback named by `source`.
struct BoundReport {
    BigInt bound;
    BoundSource source = BoundSource::delsarte;
    bool exceptional = false;
    std::optional<Rational> excluded_value;
    /// True whenever the report rests on the q-ary conjecture (every q > 2 report).
    bool conjectural = false;
};

/// sum_{i=0}^{s} C(n, i) (q-1)^i, the cap for families with s distinct distances.
BigInt bound_delsarte(int n, int q, int s);

/// Binary single-distance bound: n unless 2*lambda == n+1, where the s = 1
/// binary cap n+1 is returned instead and the report is marked exceptional.
BoundReport bound_single_distance(int n, int lambda);

/// q-ary analogue: n(q-1) unless q*lambda == (q-1)(n+1), where the fallback is
/// bound_delsarte(n, q, 1) = 1 + n(q-1). At q = 2 this is bound_single_distance.
BoundReport conjecture_bound(int n, int q, int lambda);

/// Exact test 2*lambda == n+1, by integer comparison.
bool is_exceptional_binary(int n, int lambda);

/// Exact test q*lambda == (q-1)(n+1), by integer comparison.
bool is_exceptional_qary(int n, int q, int lambda);

}  // namespace equidist
