#include "ggp/casimir.hpp"

namespace ggp {

int casimir_nvars(int n) { return 2 * n + 1; }

std::vector<std::string> casimir_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i)
        names.push_back("l" + std::to_string(i));
    for (int j = 1; j <= n; ++j)
        names.push_back("l'" + std::to_string(j));
    return names;
}

ExactPoly lam(int n, int i) {
    if (i < 0 || i > n)
        throw std::invalid_argument("lambda index out of range");
    return ExactPoly::variable(casimir_nvars(n), i);
}

ExactPoly lam_prime(int n, int j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("lambda' index out of range");
    return ExactPoly::variable(casimir_nvars(n), n + j);
}

namespace {

// |rho_{gl_N}|^2 = sum ((N-1-2i)/2)^2
Rat rho_norm_sq(int N) {
    Rat total(0);
    for (int i = 0; i < N; ++i) {
        Rat r(N - 1 - 2 * i, 2);
        total = total + r * r;
    }
    return total;
}

} // namespace

ExactPoly sym_A(int n) {
    int nv = casimir_nvars(n);
    ExactPoly out(nv);
    for (int i = 0; i <= n; ++i)
        out = out + lam(n, i) * lam(n, i);
    return out - ExactPoly::constant(nv, rho_norm_sq(n + 1));
}

ExactPoly sym_B(int n) {
    int nv = casimir_nvars(n);
    ExactPoly out(nv);
    for (int j = 1; j <= n; ++j)
        out = out + lam_prime(n, j) * lam_prime(n, j);
    return out - ExactPoly::constant(nv, rho_norm_sq(n));
}

ExactPoly sym_a(int n) {
    ExactPoly out(casimir_nvars(n));
    for (int i = 0; i <= n; ++i)
        out = out + lam(n, i);
    for (int j = 1; j <= n; ++j)
        out = out - lam_prime(n, j);
    return out;
}

ExactPoly chi_E0_poly(int n) {
    int nv = casimir_nvars(n);
    ExactPoly A = sym_A(n), B = sym_B(n), a = sym_a(n);
    ExactPoly sum_lam(nv);
    for (int i = 0; i <= n; ++i)
        sum_lam = sum_lam + lam(n, i);
    ExactPoly np1 = ExactPoly::constant(nv, Rat(n + 1));
    return Rat(1, 2) * (A - a * a - np1 * a + sum_lam - B);
}

namespace {

struct RecurrenceCoefficients {
    ExactPoly drive;  // multiplies b      : A + 2a + n + 1  (tilde drops A)
    ExactPoly diag;   // multiplies B_l    : A + n + 1
    Rat feed;         // B_0 <- feed * b, B_l <- feed * B_{l-1}
    Rat chi_coeff;    // b <- ... + chi_coeff * sum B_l chi_l
    std::vector<ExactPoly> chi; // chi_0, chi_1, ...
};

BRecurrence run_recurrence(int n, int k, const RecurrenceCoefficients& rc, RecurrenceMode mode) {
    int nv = casimir_nvars(n);
    BRecurrence cur;
    cur.b = ExactPoly::constant(nv, Rat(1));
    for (int step = 0; step < k; ++step) {
        BRecurrence next;
        next.b = rc.drive * cur.b;
        for (std::size_t l = 0; l < cur.B.size(); ++l) {
            if (l >= rc.chi.size())
                throw std::invalid_argument("missing chi(E^(" + std::to_string(l) +
                                            ")); supply it explicitly for k >= 3");
            // the worked example's alternative reading halves the chi(E0)
            // contribution at the k=2 step
            Rat coeff = rc.chi_coeff;
            if (mode == RecurrenceMode::example && step == 1 && l == 0)
                coeff = coeff * Rat(1, 2);
            next.b = next.b + (coeff * (cur.B[l] * rc.chi[l]));
        }
        next.B.resize(cur.B.size() + 1, ExactPoly(nv));
        if (step == 0) {
            next.B[0] = ExactPoly::constant(nv, rc.feed);
        } else {
            next.B[0] = rc.diag * cur.B[0] + rc.feed * cur.b;
            for (std::size_t l = 1; l < cur.B.size(); ++l)
                next.B[l] = rc.diag * cur.B[l] + rc.feed * cur.B[l - 1];
            next.B[cur.B.size()] = rc.feed * cur.B[cur.B.size() - 1];
        }
        cur = std::move(next);
    }
    return cur;
}

RecurrenceCoefficients plus_coefficients(int n, bool tilde, const std::vector<ExactPoly>& user_chi) {
    int nv = casimir_nvars(n);
    RecurrenceCoefficients rc;
    ExactPoly A = sym_A(n), a = sym_a(n);
    ExactPoly np1 = ExactPoly::constant(nv, Rat(n + 1));
    rc.drive = a + a + np1;
    rc.diag = np1;
    if (!tilde) {
        rc.drive = rc.drive + A;
        rc.diag = rc.diag + A;
    }
    rc.feed = Rat(2);
    rc.chi_coeff = Rat(2);
    rc.chi.push_back(chi_E0_poly(n));
    for (const auto& c : user_chi)
        rc.chi.push_back(c);
    return rc;
}

RecurrenceCoefficients minus_coefficients(int n, bool tilde) {
    // dual standard representation: a flips sign, the operator chain is
    // transposed, and chi(Ebar0) = chi(E0) + n*a - sum lambda'_j
    int nv = casimir_nvars(n);
    RecurrenceCoefficients rc;
    ExactPoly A = sym_A(n), a = sym_a(n);
    ExactPoly np1 = ExactPoly::constant(nv, Rat(n + 1));
    rc.drive = np1 - a - a;
    rc.diag = np1;
    if (!tilde) {
        rc.drive = rc.drive + A;
        rc.diag = rc.diag + A;
    }
    rc.feed = Rat(-2);
    rc.chi_coeff = Rat(-2);
    ExactPoly chibar = chi_E0_poly(n) + Rat(n) * a;
    for (int j = 1; j <= n; ++j)
        chibar = chibar - lam_prime(n, j);
    rc.chi.push_back(chibar);
    return rc;
}

} // namespace

BRecurrence b_recurrence(int n, int k, bool tilde, RecurrenceMode mode,
                         const std::vector<ExactPoly>& user_chi) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("need n >= 1, k >= 0");
    return run_recurrence(n, k, plus_coefficients(n, tilde, user_chi), mode);
}

ExactPoly elementary_symmetric(int nvars, int k, const std::vector<ExactPoly>& xs) {
    // e_k via the running product of (t + x_j), tracking coefficients of t
    std::vector<ExactPoly> e(k + 1, ExactPoly(nvars));
    e[0] = ExactPoly::constant(nvars, Rat(1));
    int used = 0;
    for (const auto& x : xs) {
        ++used;
        for (int j = std::min(k, used); j >= 1; --j)
            e[j] = e[j] + x * e[j - 1];
    }
    return e[k];
}

ExactPoly g_polynomial(int n, int i, int sign, RecurrenceMode mode) {
    if (n < 1)
        throw std::invalid_argument("need n >= 1");
    if (n > 2)
        throw std::invalid_argument("closed forms for chi(E^(l)), l >= 1 are unavailable: n must be 1 or 2");
    if (i < 0 || i > n)
        throw std::invalid_argument("index i out of range");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    int nv = casimir_nvars(n);

    std::vector<ExactPoly> btilde; // btilde^{(0..n)}
    auto rc = sign > 0 ? plus_coefficients(n, true, {}) : minus_coefficients(n, true);
    for (int kk = 0; kk <= n; ++kk)
        btilde.push_back(run_recurrence(n, kk, rc, mode).b);

    std::vector<ExactPoly> xs;
    for (int j = 0; j <= n; ++j) {
        if (j == i)
            continue;
        ExactPoly two_l = lam(n, j) + lam(n, j);
        ExactPoly one = ExactPoly::constant(nv, Rat(1));
        xs.push_back(sign > 0 ? one + two_l : two_l - one);
    }
    ExactPoly g(nv);
    for (int kk = 0; kk <= n; ++kk) {
        ExactPoly term = btilde[n - kk] * elementary_symmetric(nv, kk, xs);
        // plus case alternates (prod of (ct - x)); minus case does not
        if (sign > 0 && kk % 2 == 1)
            g = g - term;
        else
            g = g + term;
    }
    return g;
}

FactorCheckResult factor_check(int n, int i, int sign, RecurrenceMode mode) {
    ExactPoly g = g_polynomial(n, i, sign, mode);
    int nv = casimir_nvars(n);
    FactorCheckResult best;
    for (int s : {+1, -1}) {
        ExactPoly prod = ExactPoly::constant(nv, Rat(1));
        for (int j = 1; j <= n; ++j)
            prod = prod * (lam(n, i) - lam_prime(n, j) + ExactPoly::constant(nv, Rat(s, 2)));
        // the product is monic in lambda_i^n, so c is the matching coefficient of g
        std::vector<int> lead(nv, 0);
        lead[i] = n;
        Rat c = g.coeff(lead);
        ExactPoly residual = g - c * prod;
        if (residual.is_zero() && c != Rat(0)) {
            best.success = true;
            best.c = c;
            best.shift = s;
            best.residual = residual;
            return best;
        }
        if (s == +1) { // keep one obstruction for reporting
            best.c = c;
            best.shift = s;
            best.residual = residual;
        }
    }
    best.success = false;
    return best;
}

bool vanishing_check(int n, int i, int sign, RecurrenceMode mode) {
    ExactPoly g = g_polynomial(n, i, sign, mode);
    int nv = casimir_nvars(n);
    // g_{i,-} carries the factor (lambda_i - lambda'_1 - 1/2), g_{i,+} the
    // factor (lambda_i - lambda'_1 + 1/2)
    Rat half = sign < 0 ? Rat(1, 2) : Rat(-1, 2);
    ExactPoly value = lam_prime(n, 1) + ExactPoly::constant(nv, half);
    return g.substitute(i, value).is_zero();
}

} // namespace ggp
