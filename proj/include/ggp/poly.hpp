#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ggp {

// Exact rational with small operands; the Casimir identities never leave
// this range.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n) {}
    Rat(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    std::string str() const;

    friend Rat operator+(Rat a, Rat b);
    friend Rat operator-(Rat a, Rat b);
    friend Rat operator*(Rat a, Rat b);
    friend Rat operator/(Rat a, Rat b);
    friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
};

// Exponent vectors ordered by total degree, then lexicographically.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over Rat in a fixed variable list.  For
// the Casimir verifier the variables are lambda_0..lambda_n followed by
// lambda'_1..lambda'_n (nvars = 2n+1).
class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(int nvars) : nvars_(nvars) {}

    static ExactPoly constant(int nvars, Rat c);
    static ExactPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == std::vector<int>(nvars_, 0)); }
    Rat constant_value() const;
    int total_degree() const;
    Rat coeff(const std::vector<int>& exps) const;
    const std::map<std::vector<int>, Rat, GradedLex>& terms() const { return terms_; }

    ExactPoly& add_term(const std::vector<int>& exps, Rat c);

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(Rat c, const ExactPoly& a);
    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // replace variable `index` by `value` (same variable space)
    ExactPoly substitute(int index, const ExactPoly& value) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    // canonical text form, highest-order terms first
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, Rat, GradedLex> terms_;
};

} // namespace ggp
