#pragma once

#include "ggp/signature.hpp"

#include <map>

namespace ggp {

struct PairReport {
    InterleavingPattern signature;
    bool hom_nonzero = false;
    bool coherent = false;
    bool elementary = false;
    int mult_mu = 0;
    int mult_W = 0;
    int degree_G = 0;
    int degree_Gprime = 0;
    std::optional<HalfInt> distance; // present when coherent
};

// He's criterion: Hom_{G'}(pi|_{G'}, pi') is one-dimensional exactly when
// the associated signature is a GGP interleaving pattern.
bool hom_nonzero(const HCParam& lambda, const HCParam& lambda_prime);

// Multiplicities of the coherent parameters and minimal K-types of the
// pair.  Computed by the general U(p)xU(q) -> U(p-1)xU(q) restriction test
// on the explicit weights; under the GGP + Phi^{nc,+}-equality hypotheses
// this reduces to the closed-form parameter conditions.
int mult_W(const HCParam& lambda, const HCParam& lambda_prime);
int mult_mu(const HCParam& lambda, const HCParam& lambda_prime);

PairReport classify_pair(const HCParam& lambda, const HCParam& lambda_prime);

// lambda' := (lambda^(p) - 1/2)(p^) (+) (lambda^(q) + 1/2); requires the
// decoration of lambda to end with '+' and lambda_i - lambda_j >= 2 at
// every +- boundary of the reference parameter.
HCParam elementary_from_G(const HCParam& lambda);

// lambda := (lambda'^(p-1) + 1/2, lambda_p, lambda'^(q) - 1/2); lambda_p
// must lie strictly below min(lambda'_i + 1/2 over the p-block,
// lambda'_j - 1/2 over the q-block) on the correct parity grid.
HCParam elementary_from_Gprime(const HCParam& lambda_prime, HalfInt lambda_p);

struct SupportGroup {
    Decoration delta_prime;
    std::vector<HCParam> members;  // lexicographically descending
    bool truncated = false;        // family continues beyond the box
};

// All lambda' with |lambda'_j| <= box and hom_nonzero, grouped by
// decoration delta' in lexicographic order.
std::vector<SupportGroup> support_enumerate(const HCParam& lambda, HalfInt box);

// min over elementary partners sigma of lambda' with the same signature
// and decoration of the full coordinate sum  sum_i |lambda_i - sigma_i|.
HalfInt distance_to_elementary(const HCParam& lambda, const HCParam& lambda_prime);

} // namespace ggp
