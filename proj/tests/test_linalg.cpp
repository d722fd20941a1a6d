#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "stacky/errors.hpp"
#include "stacky/linalg.hpp"
#include "oracles.hpp"

using namespace stacky;

namespace {

IntMatrix columns(int rows, const std::vector<std::vector<long>>& cols) {
    IntMatrix m(rows, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < rows; ++i)
            m(i, static_cast<Eigen::Index>(j)) = Int(cols[j][static_cast<std::size_t>(i)]);
    return m;
}

IntVector vec(const std::vector<long>& entries) {
    IntVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = Int(entries[i]);
    return v;
}

} // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(IntMatrix::Identity(3, 3)) == 1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(IntMatrix::Zero(2, 3)), DimensionError);

    // Ray triples of the running example fan.
    const IntMatrix d125 = columns(3, {{1, 0, 1}, {0, 2, 1}, {0, 0, -1}});
    CHECK(boost::multiprecision::abs(determinant(d125)) == 2);
    const IntMatrix d012 = columns(3, {{0, 1, 4}, {1, 0, 1}, {0, 2, 1}});
    CHECK(boost::multiprecision::abs(determinant(d012)) == 7);
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(20240811u);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = size(rng);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Int(entry(rng));
        CHECK(determinant(m) == oracles::laplace_determinant(m));
    }
}

TEST_CASE("elementary divisors: pinned values") {
    const IntMatrix diag23 = columns(2, {{2, 0}, {0, 3}});
    CHECK(elementary_divisors(diag23) == std::vector<Int>{Int(1), Int(6)});
    // Oracle confirmation of the same value.
    CHECK(oracles::gcd_minors_elementary_divisors(diag23) == std::vector<Int>{Int(1), Int(6)});

    CHECK(elementary_divisors(columns(2, {{2, 0}})) == std::vector<Int>{Int(2)});

    // Columns (0,1,4) and (0,-1,1): gcd of 2x2 minors is 5.
    const IntMatrix v04 = columns(3, {{0, 1, 4}, {0, -1, 1}});
    CHECK(oracles::gcd_minors_elementary_divisors(v04) == std::vector<Int>{Int(1), Int(5)});
    CHECK(elementary_divisors(v04) == std::vector<Int>{Int(1), Int(5)});

    CHECK(elementary_divisors(IntMatrix::Zero(3, 2)).empty());
    CHECK(elementary_divisors(IntMatrix(0, 0)).empty());
}

TEST_CASE("elementary divisors match the gcd-of-minors oracle and divide in a chain") {
    std::mt19937 rng(77u);
    std::uniform_int_distribution<int> entry(-8, 8);
    std::uniform_int_distribution<int> rows(1, 4), cols(1, 4);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(rows(rng), cols(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = Int(entry(rng));
        const std::vector<Int> divisors = elementary_divisors(m);
        CHECK(divisors == oracles::gcd_minors_elementary_divisors(m));
        for (std::size_t i = 1; i < divisors.size(); ++i)
            CHECK(divisors[i] % divisors[i - 1] == 0);
    }
}

TEST_CASE("|det| equals the product of elementary divisors for nonsingular matrices") {
    std::mt19937 rng(99u);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = Int(entry(rng));
        const Int det = determinant(m);
        if (det == 0) continue;
        Int product(1);
        for (const Int& d : elementary_divisors(m)) product *= d;
        CHECK(product == boost::multiprecision::abs(det));
    }
}

TEST_CASE("solve_unique reproduces the example relations") {
    const IntMatrix basis = columns(3, {{0, 1, 4}, {1, 0, 1}, {0, 2, 1}});

    const RatVector b3 = solve_unique(basis, vec({-1, 0, 1}));
    CHECK(b3(0) == make_rational(Int(-4), Int(7)));
    CHECK(b3(1) == Rational(1));
    CHECK(b3(2) == make_rational(Int(2), Int(7)));

    const RatVector b4 = solve_unique(basis, vec({0, -1, 1}));
    CHECK(b4(0) == make_rational(Int(-3), Int(7)));
    CHECK(b4(1) == Rational(0));
    CHECK(b4(2) == make_rational(Int(5), Int(7)));
}

TEST_CASE("solve_unique sign convention and errors") {
    const IntMatrix id = IntMatrix::Identity(3, 3);
    const RatVector b = solve_unique(id, vec({0, 1, 0}));
    CHECK(b(0) == Rational(0));
    CHECK(b(1) == Rational(-1));
    CHECK(b(2) == Rational(0));

    CHECK_THROWS_AS(solve_unique(columns(2, {{1, 0}, {2, 0}}), vec({1, 1})), SingularityError);
    CHECK_THROWS_AS(solve_unique(columns(2, {{1, 0}}), vec({1, 1})), DimensionError);
}

TEST_CASE("solve_unique recombination: target + sum b_i basis_i = 0 exactly") {
    std::mt19937 rng(5u);
    std::uniform_int_distribution<int> entry(-7, 7);
    int done = 0;
    while (done < 30) {
        IntMatrix basis(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) basis(i, j) = Int(entry(rng));
        if (determinant(basis) == 0) continue;
        IntVector target = vec({entry(rng), entry(rng), entry(rng)});
        const RatVector b = solve_unique(basis, target);
        for (int i = 0; i < 3; ++i) {
            Rational acc(Int(target(i)));
            for (int j = 0; j < 3; ++j) acc += b(j) * Rational(basis(i, j));
            CHECK(acc == 0);
        }
        ++done;
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-12/8")) == "-3/2");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(make_rational(Int(4), Int(-6))) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("rank and kernel") {
    const IntMatrix m = columns(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK(rank(m) == 2);
    RatMatrix k = kernel_basis(to_rational(m));
    CHECK(k.cols() == 1);
    // m * k == 0
    for (int i = 0; i < 3; ++i) {
        Rational acc(0);
        for (int j = 0; j < 3; ++j) acc += Rational(m(i, j)) * k(j, 0);
        CHECK(acc == 0);
    }
    CHECK(primitive(vec({-4, 2, 6})) == vec({-2, 1, 3}));
    CHECK(primitive(vec({0, 0})) == vec({0, 0}));
}
