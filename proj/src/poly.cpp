#include "ggp/poly.hpp"

#include <numeric>

namespace ggp {

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0)
        g = 1;
    num = n / g;
    den = d / g;
}

std::string Rat::str() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
Rat operator/(Rat a, Rat b) {
    if (b.num == 0)
        throw std::invalid_argument("division by zero rational");
    return Rat(a.num * b.den, a.den * b.num);
}

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

ExactPoly ExactPoly::constant(int nvars, Rat c) {
    ExactPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

ExactPoly ExactPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("variable index out of range");
    ExactPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rat(1));
    return p;
}

Rat ExactPoly::constant_value() const {
    if (terms_.empty())
        return Rat(0);
    if (!is_constant())
        throw std::logic_error("polynomial is not constant");
    return terms_.begin()->second;
}

int ExactPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Rat ExactPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rat(0) : it->second;
}

ExactPoly& ExactPoly::add_term(const std::vector<int>& exps, Rat c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (c.is_zero())
        return *this;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial variable spaces differ");
    ExactPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, c);
    return out;
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial variable spaces differ");
    ExactPoly out = a;
    for (const auto& [e, c] : b.terms_)
        out.add_term(e, -c);
    return out;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("polynomial variable spaces differ");
    ExactPoly out(a.nvars_);
    std::vector<int> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

ExactPoly operator*(Rat c, const ExactPoly& a) {
    ExactPoly out(a.nvars_);
    for (const auto& [e, k] : a.terms_)
        out.add_term(e, c * k);
    return out;
}

ExactPoly ExactPoly::substitute(int index, const ExactPoly& value) const {
    if (value.nvars_ != nvars_)
        throw std::invalid_argument("substitution value lives in a different variable space");
    ExactPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        ExactPoly term = ExactPoly::constant(nvars_, c);
        std::vector<int> rest = e;
        int k = rest[index];
        rest[index] = 0;
        ExactPoly mono(nvars_);
        mono.add_term(rest, Rat(1));
        term = term * mono;
        for (int t = 0; t < k; ++t)
            term = term * value;
        out = out + term;
    }
    return out;
}

Rat ExactPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point length mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k)
                term = term * point[i];
        total = total + term;
    }
    return total;
}

std::string ExactPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string coeff = c.str();
        if (!out.empty())
            out += c.num >= 0 ? " + " : " - ";
        else if (c.num < 0)
            out += "-";
        std::string mag = (c.num < 0 ? Rat(-c.num, c.den) : c).str();
        if (mono.empty())
            out += mag;
        else if (mag == "1")
            out += mono;
        else
            out += mag + "*" + mono;
    }
    return out;
}

} // namespace ggp
