#pragma once

#include "ggp/kbranch.hpp"
#include "ggp/params.hpp"

#include <optional>

namespace ggp {

enum class Parabolic { P_plus, P_minus };
enum class Coefficient { pi_tensor_Wdual, pidual_tensor_W };

struct PKEntry {
    Parabolic parabolic;
    Coefficient coefficient;
    KWeight W;
    int degree = 0;
};

// The four-convention dictionary of non-vanishing (P,K)-cohomologies:
//   (P+, pi (x) W^vee)    ->  (W_lambda,   q(delta))
//   (P+, pi^vee (x) W)    ->  (W_lambda^-, pq - q(delta))
//   (P-, pi (x) W^vee)    ->  (W_lambda^-, pq - q(delta))
//   (P-, pi^vee (x) W)    ->  (W_lambda,   q(delta))
// with W_lambda = F^K(lambda - rho_c - rho_n), W_lambda^- = F^K(lambda -
// rho_c + rho_n).
std::vector<PKEntry> pk_table(const HCParam& lambda);

// The unique degree when W matches the table entry for the convention.
std::optional<int> nonvanishing_degree(const HCParam& lambda, const KWeight& W, Parabolic parabolic,
                                       Coefficient coefficient);

} // namespace ggp
