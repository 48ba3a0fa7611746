#include "ggp/translate.hpp"
#include "ggp/pairs.hpp"
#include "ggp/signature.hpp"

#include <algorithm>

namespace ggp {

HCParam translate_param(const HCParam& lambda, int i, int sign) {
    lambda.validate();
    if (i < 1 || i > lambda.n())
        throw std::invalid_argument("coordinate index out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    HCParam out = lambda;
    out.lambda[i - 1] += HalfInt::from_int(sign);
    for (int j = 1; j <= lambda.n(); ++j)
        if (j != i && out.lambda[j - 1] == out.lambda[i - 1])
            throw std::invalid_argument("translation loses regularity: lambda_" + std::to_string(i) +
                                        " would tie lambda_" + std::to_string(j) + " = " +
                                        out.lambda[j - 1].str());
    out.validate();
    if (!(classify_param(out).delta == classify_param(lambda).delta))
        throw std::invalid_argument("translation leaves the chamber: decoration changes at coordinate " +
                                    std::to_string(i));
    return out;
}

bool step_nonvanishing(const HCParam& lambda, const HCParam& lambda_prime, int i, int sign) {
    if (i < 1 || i > lambda.n())
        throw std::invalid_argument("coordinate index out of range");
    HalfInt shift = sign > 0 ? HalfInt(-1) : HalfInt(1);
    for (const auto& lp : lambda_prime.lambda)
        if (lambda.lambda[i - 1] == lp + shift)
            return false;
    return true;
}

TranslationChain chain_to_elementary(const HCParam& lambda, const HCParam& lambda_prime) {
    auto report_pat = build_signature(lambda, lambda_prime);
    auto residue = reduce(report_pat);
    if (!is_ggp(report_pat) || residue.size() != 1 || residue[0] != Sym::P)
        throw std::invalid_argument("pair is not coherent");

    int p = lambda.p, q = lambda.q;
    TranslationChain chain;
    chain.end = lambda;
    chain.lambda_prime = lambda_prime;
    HCParam start;
    start.p = p;
    start.q = q;
    start.lambda = lambda.p_block();
    for (int j = 0; j < q; ++j)
        start.lambda.push_back(lambda_prime.lambda[lambda_prime.p + j] - HalfInt(1));
    start.validate();
    chain.start = start;

    // remaining unit steps per q-coordinate
    std::vector<int> remaining(q);
    for (int j = 0; j < q; ++j) {
        HalfInt diff = start.lambda[p + j] - lambda.lambda[p + j];
        if (diff < HalfInt(0) || !diff.is_integer())
            throw std::logic_error("elementary-side q-block is not above the target");
        remaining[j] = static_cast<int>(diff.twice / 2);
    }

    HCParam cur = start;
    while (std::any_of(remaining.begin(), remaining.end(), [](int r) { return r > 0; })) {
        bool moved = false;
        std::string blockers;
        for (int j = 0; j < q && !moved; ++j) {
            if (remaining[j] == 0)
                continue;
            int coord = p + j + 1;
            if (!step_nonvanishing(cur, lambda_prime, coord, -1)) {
                blockers += " coordinate " + std::to_string(coord) + " at excluded value " +
                            cur.lambda[coord - 1].str() + ";";
                continue;
            }
            HCParam next;
            try {
                next = translate_param(cur, coord, -1);
            } catch (const std::invalid_argument&) {
                blockers += " coordinate " + std::to_string(coord) + " leaves the chamber;";
                continue;
            }
            chain.steps.push_back({coord, -1, cur, next});
            cur = next;
            --remaining[j];
            moved = true;
        }
        if (!moved)
            throw std::invalid_argument("chain blocked:" + blockers);
    }
    if (!(cur == lambda))
        throw std::logic_error("chain did not terminate at the input parameter");
    return chain;
}

} // namespace ggp
