#include <doctest.h>

#include <random>

#include "toridiv/linalg.hpp"

using namespace toridiv;

namespace {

QMatrix qmat(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m;
    for (auto& r : rows) {
        QVec row;
        for (long x : r) row.push_back(Rat(x));
        m.push_back(std::move(row));
    }
    return m;
}

ZMatrix zmat(std::initializer_list<std::initializer_list<long>> rows) {
    ZMatrix m;
    for (auto& r : rows) {
        ZVec row;
        for (long x : r) row.push_back(Int(x));
        m.push_back(std::move(row));
    }
    return m;
}

QVec qvec(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.push_back(Rat(x));
    return v;
}

} // namespace

TEST_CASE("solve_rational: identity") {
    auto res = solve_rational(qmat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), qvec({1, 2, 3}));
    REQUIRE(res.consistent());
    CHECK(res.solution->x == qvec({1, 2, 3}));
    CHECK(res.solution->kernel.empty());
}

TEST_CASE("solve_rational: family cone data solve") {
    // rows are the first three rays of the accumulating family; unique solution
    auto a = qmat({{2, -1, 0}, {2, 0, 1}, {1, 1, 1}});
    auto res = solve_rational(a, qvec({-1, -1, -1}));
    REQUIRE(res.consistent());
    CHECK(res.solution->x == qvec({-1, -1, 1}));
    CHECK(res.solution->kernel.empty());
    // re-substitution
    for (size_t i = 0; i < a.size(); ++i) CHECK(dot(a[i], res.solution->x) == Rat(-1));
}

TEST_CASE("solve_rational: quadric cone inconsistency with certificate") {
    auto a = qmat({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    QVec b = qvec({-1, 0, 0, 0});
    auto res = solve_rational(a, b);
    REQUIRE(!res.consistent());
    const QVec& y = res.certificate;
    REQUIRE(y.size() == 4);
    for (int j = 0; j < 3; ++j) {
        Rat acc(0);
        for (int i = 0; i < 4; ++i) acc += y[i] * a[i][j];
        CHECK(acc == Rat(0));
    }
    Rat yb(0);
    for (int i = 0; i < 4; ++i) yb += y[i] * b[i];
    CHECK(yb != Rat(0));
}

TEST_CASE("solve_rational: kernel spans the solution space") {
    auto a = qmat({{1, 2, 3}, {2, 4, 6}});
    auto res = solve_rational(a, qvec({6, 12}));
    REQUIRE(res.consistent());
    CHECK(res.solution->kernel.size() == 2);
    for (const QVec& k : res.solution->kernel)
        for (const auto& row : a) CHECK(dot(row, k) == Rat(0));
}

TEST_CASE("solve_rational: random reproduction property") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long> coeff(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + (int)(rng() % 4), n = 1 + (int)(rng() % 4);
        QMatrix a(m, QVec(n));
        QVec x(n);
        for (auto& row : a)
            for (auto& e : row) e = Rat(coeff(rng));
        for (auto& e : x) e = make_rat(Int(coeff(rng)), Int(1 + (rng() % 3)));
        QVec b(m, Rat(0));
        for (int i = 0; i < m; ++i) b[i] = dot(a[i], x);
        auto res = solve_rational(a, b);
        REQUIRE(res.consistent());
        for (int i = 0; i < m; ++i) CHECK(dot(a[i], res.solution->x) == b[i]);
        for (const QVec& k : res.solution->kernel)
            for (int i = 0; i < m; ++i) CHECK(dot(a[i], k) == Rat(0));
    }
}

TEST_CASE("primitivize") {
    CHECK(primitivize(ZVec{2, 4, 6}) == ZVec{1, 2, 3});
    CHECK(primitivize(ZVec{5, 0, 2}) == ZVec{5, 0, 2});
    CHECK(primitivize(ZVec{-4, -6}) == ZVec{-2, -3});
    CHECK_THROWS_AS(primitivize(ZVec{0, 0}), DomainError);
}

TEST_CASE("smith_normal_form: fixed cases") {
    {
        auto snf = smith_normal_form(zmat({{1, 0}, {0, 1}}));
        CHECK(snf.s == zmat({{1, 0}, {0, 1}}));
    }
    {
        auto snf = smith_normal_form(zmat({{2, 0}, {0, 4}}));
        CHECK(snf.s == zmat({{2, 0}, {0, 4}}));
    }
    {
        auto snf = smith_normal_form(zmat({{0, 3}, {2, 0}}));
        CHECK(snf.s == zmat({{1, 0}, {0, 6}}));
    }
}

TEST_CASE("smith_normal_form: random verified recomposition") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 1 + (int)(rng() % 4), n = 1 + (int)(rng() % 4);
        ZMatrix a(m, ZVec(n));
        for (auto& row : a)
            for (auto& e : row) e = Int(coeff(rng));
        auto snf = smith_normal_form(a); // throws on any internal check failure
        CHECK(multiply(multiply(snf.u, a), snf.v) == snf.s);
        if (m == n) CHECK(abs(det(a)) == abs(det(snf.s))); // |det| preserved
    }
}

TEST_CASE("minimal_integral_scaling") {
    // x1 + 2 x2 = k/2, 2 x2 = k/2 forces x1 = 0, x2 = k/4: minimal k is 4
    ZMatrix a = zmat({{1, 2}, {0, 2}});
    QVec b{make_rat(1, 2), make_rat(1, 2)};
    auto sol = minimal_integral_scaling(a, b);
    REQUIRE(sol.has_value());
    CHECK(sol->k == 4);
    for (size_t i = 0; i < a.size(); ++i) CHECK(Rat(dot(a[i], sol->x)) == Rat(sol->k) * b[i]);

    // inconsistent system
    ZMatrix bad = zmat({{1, 0}, {1, 0}});
    CHECK(!minimal_integral_scaling(bad, QVec{Rat(0), Rat(1)}).has_value());
}

TEST_CASE("rational parse and print round trip") {
    CHECK(rat_str(parse_rat("3/4")) == "3/4");
    CHECK(rat_str(parse_rat("-3/4")) == "-3/4");
    CHECK(rat_str(parse_rat("−5/7")) == "-5/7"); // U+2212 minus accepted
    CHECK(rat_str(parse_rat("42")) == "42");
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rat("x"), UsageError);
    CHECK_THROWS_AS(parse_rat("1/2/3"), UsageError);
    CHECK_THROWS_AS(parse_rat(""), UsageError);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coeff(-10000, 10000);
    for (int i = 0; i < 200; ++i) {
        Rat q = make_rat(Int(coeff(rng)), Int(1 + std::abs(coeff(rng))));
        Rat sum = q + make_rat(1, 3);
        CHECK(parse_rat(rat_str(sum)) == sum);
    }
}

TEST_CASE("make_rat normalizes signs and reduces") {
    CHECK(make_rat(4, -6) == make_rat(-2, 3));
    CHECK(denominator(make_rat(4, -6)) == 3);
    CHECK(numerator(make_rat(4, -6)) == -2);
    CHECK_THROWS_AS(make_rat(1, 0), DomainError);
}
