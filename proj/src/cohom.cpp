#include "ggp/cohom.hpp"

namespace ggp {

std::vector<PKEntry> pk_table(const HCParam& lambda) {
    auto d = classify_param(lambda);
    int p = lambda.p, q = lambda.q;
    HalfIntVec rc = rho_c(p, q);
    HalfIntVec rn = rho_g(p, q) - rc; // rho_n
    KWeight w_lambda = kweight_from_vec(lambda.lambda - rc - rn, p, q);
    KWeight w_lambda_minus = kweight_from_vec(lambda.lambda - rc + rn, p, q);
    int deg = d.degree;
    int codeg = p * q - deg;
    return {
        {Parabolic::P_plus, Coefficient::pi_tensor_Wdual, w_lambda, deg},
        {Parabolic::P_plus, Coefficient::pidual_tensor_W, w_lambda_minus, codeg},
        {Parabolic::P_minus, Coefficient::pi_tensor_Wdual, w_lambda_minus, codeg},
        {Parabolic::P_minus, Coefficient::pidual_tensor_W, w_lambda, deg},
    };
}

std::optional<int> nonvanishing_degree(const HCParam& lambda, const KWeight& W, Parabolic parabolic,
                                       Coefficient coefficient) {
    for (const auto& e : pk_table(lambda))
        if (e.parabolic == parabolic && e.coefficient == coefficient) {
            if (e.W == W)
                return e.degree;
            return std::nullopt;
        }
    return std::nullopt;
}

} // namespace ggp
