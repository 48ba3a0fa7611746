#include <doctest.h>

#include "ggp/params.hpp"

#include <set>

using namespace ggp;

namespace {
HalfIntVec hv(std::initializer_list<double> xs) {
    HalfIntVec v;
    for (double x : xs)
        v.push_back(HalfInt(static_cast<std::int64_t>(2 * x)));
    return v;
}
} // namespace

TEST_CASE("half-integer parsing and printing") {
    CHECK(parse_halfint("15").twice == 30);
    CHECK(parse_halfint("-3").twice == -6);
    CHECK(parse_halfint("29/2").twice == 29);
    CHECK(parse_halfint("-1/2").twice == -1);
    CHECK(HalfInt(29).str() == "29/2");
    CHECK(HalfInt(-1).str() == "-1/2");
    CHECK(HalfInt::from_int(7).str() == "7");
    CHECK_THROWS_AS(parse_halfint("1/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_halfint("x"), std::invalid_argument);
}

TEST_CASE("decoration enumeration is lexicographic and complete") {
    auto d21 = enumerate_decorations(2, 1);
    REQUIRE(d21.size() == 3);
    CHECK(d21[0].signs == "++-");
    CHECK(d21[1].signs == "+-+");
    CHECK(d21[2].signs == "-++");

    CHECK(enumerate_decorations(3, 0).size() == 1);
    CHECK(enumerate_decorations(3, 0)[0].signs == "+++");
    CHECK(enumerate_decorations(3, 2).size() == 10);
}

TEST_CASE("decoration <-> Kostant representative bijection") {
    Decoration d("-+-++");
    auto w = deco_to_w(d);
    CHECK(w.perm == std::vector<int>{4, 1, 5, 2, 3});
    CHECK(w.is_kostant());
    CHECK(w_to_deco(w).signs == "-+-++");

    auto e = deco_to_w(Decoration("+++--"));
    CHECK(e.perm == std::vector<int>{1, 2, 3, 4, 5});

    for (const auto& deco : enumerate_decorations(3, 2))
        CHECK(w_to_deco(deco_to_w(deco)) == deco);

    KostantPerm bad;
    bad.perm = {2, 1, 3};
    bad.p = 2;
    bad.q = 1;
    CHECK_THROWS_AS(w_to_deco(bad), std::invalid_argument);
}

TEST_CASE("rho vectors") {
    CHECK(rho_g(3, 2) == hv({2, 1, 0, -1, -2}));
    CHECK(rho_c(3, 2) == hv({1, 0, -1, 0.5, -0.5}));
    CHECK(rho_delta(Decoration("-+-++")) == hv({1, -1, -2, 2, 0}));
}

TEST_CASE("phi_nc_plus and degree") {
    CHECK(phi_nc_plus(Decoration("-+-++")) == std::vector<std::pair<int, int>>{{1, 5}});
    CHECK(phi_nc_plus(Decoration("--++")).empty());
    CHECK(phi_nc_plus(Decoration("++-")) == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
    CHECK(degree(Decoration("++-")) == 2);
}

TEST_CASE("classify_param on the worked U(3,2) example") {
    HCParam lam = parse_param("15,5,0;20,10");
    auto d = classify_param(lam);
    CHECK(d.lambda_plus == hv({20, 15, 10, 5, 0}));
    CHECK(d.w.perm == std::vector<int>{4, 1, 5, 2, 3});
    CHECK(d.delta.signs == "-+-++");
    CHECK(d.mu == hv({14, 4, 0, 21, 11}));
    CHECK(d.capital_lambda == hv({13, 4, 0, 21, 12}));
    CHECK(d.degree == 1);
    CHECK(d.phi_nc == std::vector<std::pair<int, int>>{{1, 5}});
    CHECK(d.w.length() == 5);
    CHECK(d.t_delta == hv({1, 0, 0, 0, -1}));
}

TEST_CASE("classify_param small cases and diagnostics") {
    auto d1 = classify_param(parse_param("1,0;2"));
    CHECK(d1.delta.signs == "-++");
    CHECK(d1.degree == 0);

    auto d2 = classify_param(parse_param("1,0;-1")); // rho_g of U(2,1)
    CHECK(d2.delta.signs == "++-");
    CHECK(d2.degree == 2);

    CHECK_THROWS_WITH_AS(classify_param(parse_param("0,1;2")), doctest::Contains("p-block"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify_param(parse_param("1,0;1")), doctest::Contains("regular"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(classify_param(parse_param("3/2,0;2")), doctest::Contains("parity"),
                         std::invalid_argument);
}

TEST_CASE("dual of the worked example") {
    auto d = classify_param(parse_param("15,5,0;20,10"));
    auto dd = dual(d);
    CHECK(dd.delta.signs == "++-+-");
    CHECK(dd.degree == 5);
    CHECK(dd.lambda.lambda == hv({0, -5, -15, -10, -20}));
}

TEST_CASE("dual is an involution and complements the degree") {
    std::vector<HCParam> params;
    for (int a = 3; a >= -3; --a)
        for (int b = a - 1; b >= -4; --b)
            for (int c = 4; c >= -3; --c)
                for (int e = c - 1; e >= -4; --e) {
                    HCParam lam;
                    lam.p = lam.q = 2;
                    lam.lambda = {HalfInt(2 * a + 1), HalfInt(2 * b + 1), HalfInt(2 * c + 1),
                                  HalfInt(2 * e + 1)};
                    try {
                        lam.validate();
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    params.push_back(lam);
                }
    REQUIRE(params.size() > 100);
    for (const auto& lam : params) {
        auto d = classify_param(lam);
        auto dd = dual(d);
        CHECK(dual(dd).lambda == lam);
        CHECK(dd.degree == lam.p * lam.q - d.degree);
        CHECK(dd.delta.signs == std::string(d.delta.signs.rbegin(), d.delta.signs.rend()));
        HalfIntVec expect(lam.n());
        for (int i = 0; i < lam.p; ++i)
            expect[i] = -d.mu[lam.p - 1 - i];
        for (int j = 0; j < lam.q; ++j)
            expect[lam.p + j] = -d.mu[lam.p + lam.q - 1 - j];
        CHECK(dd.mu == expect);
    }
}

TEST_CASE("bijection triple, degree identity, rho identity up to p+q <= 7") {
    for (int p = 0; p <= 7; ++p)
        for (int q = 0; p + q <= 7; ++q) {
            auto decos = enumerate_decorations(p, q);
            long long binom = 1;
            for (int i = 1; i <= q; ++i)
                binom = binom * (p + q - i + 1) / i;
            CHECK(static_cast<long long>(decos.size()) == binom);
            std::set<std::vector<int>> perms;
            for (const auto& d : decos) {
                auto w = deco_to_w(d);
                CHECK(w.is_kostant());
                CHECK(w_to_deco(w) == d);
                perms.insert(w.perm);
                CHECK(degree(d) + w.length() == p * q);
                if (p + q >= 1) {
                    auto lhs = rho_g(p, q) + rho_delta(d);
                    auto rhs = t_delta(d) + rho_c(p, q) + rho_c(p, q);
                    CHECK(lhs == rhs);
                }
            }
            CHECK(perms.size() == decos.size());
        }
}

TEST_CASE("classify_param round-trips through (lambda+, delta)") {
    auto d = classify_param(parse_param("15,5,0;20,10"));
    CHECK(assemble_param(d.lambda_plus, d.delta).lambda == d.lambda.lambda);
    CHECK(apply_perm(d.w, d.lambda_plus) == d.lambda.lambda);

    for (int a = 5; a >= -5; --a)
        for (int b = a - 1; b >= -6; --b)
            for (int c = 5; c >= -5; --c) {
                HCParam lam;
                lam.p = 2;
                lam.q = 1;
                lam.lambda = {HalfInt::from_int(a), HalfInt::from_int(b), HalfInt::from_int(c)};
                try {
                    lam.validate();
                } catch (const std::invalid_argument&) {
                    continue;
                }
                auto data = classify_param(lam);
                CHECK(assemble_param(data.lambda_plus, data.delta).lambda == lam.lambda);
                // coherent parameter stays K-dominant
                CHECK(data.capital_lambda[0] >= data.capital_lambda[1]);
            }
}

TEST_CASE("parameter text round trip") {
    CHECK(format_param(parse_param("15,5,0;20,10")) == "15,5,0;20,10");
    CHECK(format_param(parse_param("11/2,1/2;15/2,7/2")) == "11/2,1/2;15/2,7/2");
    CHECK(parse_param("3/2,1/2").q == 0);
}
