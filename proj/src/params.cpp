#include "ggp/params.hpp"

#include <algorithm>
#include <numeric>

namespace ggp {

Decoration::Decoration(std::string s) : signs(std::move(s)) {
    for (char c : signs)
        if (c != '+' && c != '-')
            throw std::invalid_argument("decoration may contain only '+' and '-'");
}

int Decoration::p() const { return static_cast<int>(std::count(signs.begin(), signs.end(), '+')); }
int Decoration::q() const { return static_cast<int>(std::count(signs.begin(), signs.end(), '-')); }

int KostantPerm::winv(int i) const {
    for (int a = 1; a <= static_cast<int>(perm.size()); ++a)
        if (perm[a - 1] == i)
            return a;
    throw std::invalid_argument("index not in permutation");
}

bool KostantPerm::is_kostant() const {
    // positions of 1..p must increase, positions of p+1..p+q must increase
    int prev = 0;
    for (int i = 1; i <= p; ++i) {
        int pos = winv(i);
        if (i > 1 && pos <= prev)
            return false;
        prev = pos;
    }
    prev = 0;
    for (int i = p + 1; i <= p + q; ++i) {
        int pos = winv(i);
        if (i > p + 1 && pos <= prev)
            return false;
        prev = pos;
    }
    return true;
}

int KostantPerm::length() const {
    int inv = 0;
    int n = static_cast<int>(perm.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (perm[a] > perm[b])
                ++inv;
    return inv;
}

void HCParam::validate() const {
    if (static_cast<int>(lambda.size()) != p + q)
        throw std::invalid_argument("parameter length != p+q");
    // parity: 2*lambda_i = p+q+1 (mod 2)
    for (int i = 0; i < p + q; ++i) {
        if ((((lambda[i].twice - (p + q + 1)) % 2) + 2) % 2 != 0)
            throw std::invalid_argument("entry " + lambda[i].str() + " violates the parity 2*lambda_i = p+q+1 (mod 2)");
    }
    for (int i = 1; i < p; ++i)
        if (!(lambda[i - 1] > lambda[i]))
            throw std::invalid_argument("p-block not strictly decreasing: lambda_" + std::to_string(i) +
                                        " = " + lambda[i - 1].str() + " <= lambda_" + std::to_string(i + 1) +
                                        " = " + lambda[i].str());
    for (int i = p + 1; i < p + q; ++i)
        if (!(lambda[i - 1] > lambda[i]))
            throw std::invalid_argument("q-block not strictly decreasing: lambda_" + std::to_string(i) +
                                        " = " + lambda[i - 1].str() + " <= lambda_" + std::to_string(i + 1) +
                                        " = " + lambda[i].str());
    for (int i = 0; i < p + q; ++i)
        for (int j = i + 1; j < p + q; ++j)
            if (lambda[i] == lambda[j])
                throw std::invalid_argument("parameter not regular: lambda_" + std::to_string(i + 1) +
                                            " = lambda_" + std::to_string(j + 1) + " = " + lambda[i].str());
}

std::vector<Decoration> enumerate_decorations(int p, int q) {
    if (p < 0 || q < 0)
        throw std::invalid_argument("p, q must be non-negative");
    std::vector<Decoration> out;
    std::string cur;
    // lexicographic with '+' < '-' (ASCII order already)
    auto rec = [&](auto&& self, int np, int nq) -> void {
        if (np == 0 && nq == 0) {
            out.emplace_back(cur);
            return;
        }
        if (np > 0) {
            cur.push_back('+');
            self(self, np - 1, nq);
            cur.pop_back();
        }
        if (nq > 0) {
            cur.push_back('-');
            self(self, np, nq - 1);
            cur.pop_back();
        }
    };
    rec(rec, p, q);
    return out;
}

KostantPerm deco_to_w(const Decoration& delta) {
    KostantPerm w;
    w.p = delta.p();
    w.q = delta.q();
    int ip = 0, im = 0;
    for (char c : delta.signs)
        w.perm.push_back(c == '+' ? ++ip : w.p + ++im);
    return w;
}

Decoration w_to_deco(const KostantPerm& w) {
    if (!w.is_kostant())
        throw std::invalid_argument("permutation fails the Kostant condition");
    std::string s;
    for (int i : w.perm)
        s.push_back(i <= w.p ? '+' : '-');
    return Decoration(s);
}

HalfIntVec rho_g(int p, int q) {
    int n = p + q;
    HalfIntVec out(n);
    for (int i = 0; i < n; ++i)
        out[i] = HalfInt::half(n - 1 - 2 * i);
    return out;
}

HalfIntVec rho_c(int p, int q) {
    HalfIntVec out(p + q);
    for (int i = 0; i < p; ++i)
        out[i] = HalfInt::half(p - 1 - 2 * i);
    for (int j = 0; j < q; ++j)
        out[p + j] = HalfInt::half(q - 1 - 2 * j);
    return out;
}

HalfIntVec apply_perm(const KostantPerm& w, const HalfIntVec& nu) {
    int n = static_cast<int>(nu.size());
    HalfIntVec out(n);
    for (int a = 1; a <= n; ++a)
        out[w.w(a) - 1] = nu[a - 1]; // coordinate w(a) carries the a-th value
    return out;
}

HalfIntVec rho_delta(const Decoration& delta) {
    return apply_perm(deco_to_w(delta), rho_g(delta.p(), delta.q()));
}

std::vector<std::pair<int, int>> phi_nc_plus(const Decoration& delta) {
    std::vector<std::pair<int, int>> out;
    int p = delta.p();
    std::vector<int> pluses_seen;
    int ip = 0, im = 0;
    for (char c : delta.signs) {
        if (c == '+') {
            pluses_seen.push_back(++ip);
        } else {
            ++im;
            for (int i : pluses_seen)
                out.emplace_back(i, p + im);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int degree(const Decoration& delta) { return static_cast<int>(phi_nc_plus(delta).size()); }

HalfIntVec t_delta(const Decoration& delta) {
    HalfIntVec out(delta.size(), HalfInt(0));
    for (auto [i, j] : phi_nc_plus(delta)) {
        out[i - 1] += HalfInt::from_int(1);
        out[j - 1] -= HalfInt::from_int(1);
    }
    return out;
}

DiscreteSeriesData classify_param(const HCParam& lambda) {
    lambda.validate();
    DiscreteSeriesData d;
    d.lambda = lambda;
    int n = lambda.n();

    // sort indices by value descending: position a holds original index w(a)
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 1);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return lambda.lambda[a - 1] > lambda.lambda[b - 1]; });
    d.w.perm = idx;
    d.w.p = lambda.p;
    d.w.q = lambda.q;
    d.lambda_plus.resize(n);
    for (int a = 0; a < n; ++a)
        d.lambda_plus[a] = lambda.lambda[idx[a] - 1];
    d.delta = w_to_deco(d.w);
    d.mu = lambda.lambda + rho_delta(d.delta) - rho_c(lambda.p, lambda.q) - rho_c(lambda.p, lambda.q);
    d.capital_lambda = lambda.lambda - rho_g(lambda.p, lambda.q);
    d.phi_nc = phi_nc_plus(d.delta);
    d.degree = static_cast<int>(d.phi_nc.size());
    d.t_delta = t_delta(d.delta);
    return d;
}

HCParam assemble_param(const HalfIntVec& lambda_plus, const Decoration& delta) {
    if (static_cast<int>(lambda_plus.size()) != delta.size())
        throw std::invalid_argument("reference parameter length != decoration length");
    for (std::size_t a = 1; a < lambda_plus.size(); ++a)
        if (!(lambda_plus[a - 1] > lambda_plus[a]))
            throw std::invalid_argument("reference parameter not strictly decreasing");
    HCParam out;
    out.p = delta.p();
    out.q = delta.q();
    out.lambda = apply_perm(deco_to_w(delta), lambda_plus);
    out.validate();
    return out;
}

HCParam dual_param(const HCParam& lambda) {
    HCParam out;
    out.p = lambda.p;
    out.q = lambda.q;
    out.lambda.resize(lambda.n());
    for (int i = 0; i < lambda.p; ++i)
        out.lambda[i] = -lambda.lambda[lambda.p - 1 - i];
    for (int j = 0; j < lambda.q; ++j)
        out.lambda[lambda.p + j] = -lambda.lambda[lambda.p + lambda.q - 1 - j];
    return out;
}

DiscreteSeriesData dual(const DiscreteSeriesData& data) { return classify_param(dual_param(data.lambda)); }

HCParam parse_param(const std::string& text) {
    HCParam out;
    auto parse_block = [](const std::string& s, HalfIntVec& v) {
        std::size_t start = 0;
        while (start <= s.size()) {
            auto comma = s.find(',', start);
            std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!tok.empty())
                v.push_back(parse_halfint(tok));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
    };
    auto semi = text.find(';');
    HalfIntVec pb, qb;
    parse_block(text.substr(0, semi), pb);
    if (semi != std::string::npos)
        parse_block(text.substr(semi + 1), qb);
    out.p = static_cast<int>(pb.size());
    out.q = static_cast<int>(qb.size());
    out.lambda = pb;
    out.lambda.insert(out.lambda.end(), qb.begin(), qb.end());
    out.validate();
    return out;
}

std::string format_param(const HCParam& lambda) {
    std::string out = to_string(lambda.p_block());
    if (lambda.q > 0) {
        out += ';';
        out += to_string(lambda.q_block());
    }
    return out;
}

} // namespace ggp
