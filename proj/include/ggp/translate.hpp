#pragma once

#include "ggp/params.hpp"

namespace ggp {

struct TranslationStep {
    int index = 0; // 1-based coordinate of lambda
    int sign = 0;  // +1 or -1
    HCParam from;
    HCParam to;
};

struct TranslationChain {
    HCParam start; // elementary-side parameter
    HCParam end;   // the coherent input
    HCParam lambda_prime;
    std::vector<TranslationStep> steps;
};

// lambda +- e_i; must stay regular and keep the decoration.
HCParam translate_param(const HCParam& lambda, int i, int sign);

// The translated symmetry-breaking operator survives on the primary
// component when lambda_i avoids the half-shifted entries of lambda':
// plus steps exclude { lambda'_j - 1/2 }, minus steps { lambda'_j + 1/2 }.
bool step_nonvanishing(const HCParam& lambda, const HCParam& lambda_prime, int i, int sign);

// Connect a coherent pair to its elementary partner with q-block unit
// steps; every step passes translate_param and step_nonvanishing.
TranslationChain chain_to_elementary(const HCParam& lambda, const HCParam& lambda_prime);

} // namespace ggp
