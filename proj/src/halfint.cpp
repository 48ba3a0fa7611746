#include "ggp/halfint.hpp"

#include <cstdlib>

namespace ggp {

std::string HalfInt::str() const {
    if (twice % 2 == 0)
        return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

HalfInt parse_halfint(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty half-integer token");
    auto slash = text.find('/');
    std::size_t pos = 0;
    if (slash == std::string::npos) {
        long long n = std::stoll(text, &pos);
        if (pos != text.size())
            throw std::invalid_argument("bad half-integer token '" + text + "'");
        return HalfInt::from_int(n);
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (den != "2")
        throw std::invalid_argument("denominator must be 2 in '" + text + "'");
    long long n = std::stoll(num, &pos);
    if (pos != num.size())
        throw std::invalid_argument("bad half-integer token '" + text + "'");
    return HalfInt::half(n);
}

bool uniform_parity(const HalfIntVec& v) {
    if (v.empty())
        return true;
    auto par = ((v[0].twice % 2) + 2) % 2;
    for (const auto& x : v)
        if (((x.twice % 2) + 2) % 2 != par)
            return false;
    return true;
}

std::string to_string(const HalfIntVec& v, char separator) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += separator;
        out += v[i].str();
    }
    return out;
}

HalfIntVec operator+(const HalfIntVec& a, const HalfIntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch in +");
    HalfIntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

HalfIntVec operator-(const HalfIntVec& a, const HalfIntVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector length mismatch in -");
    HalfIntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

} // namespace ggp
