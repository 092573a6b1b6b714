#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "symcay/perm.hpp"

using namespace symcay;

namespace {

Permutation random_perm(int degree, std::mt19937& rng) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("identity basics") {
    Permutation id(5);
    CHECK(id.degree() == 5);
    CHECK(id.is_identity());
    CHECK(id(3) == 3);
    CHECK(id.order() == 1);
    CHECK(id.is_even());
    CHECK(id.is_two_element());
    CHECK(format_cycles(id) == "()");
}

TEST_CASE("from_images validates bijections") {
    CHECK_NOTHROW(Permutation::from_images({1, 0, 2}));
    CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InvalidParameter);
    CHECK_THROWS_AS(Permutation::from_images({0, 3, 1}), InvalidParameter);
    CHECK_THROWS_AS(Permutation::from_images({-1, 0, 1}), InvalidParameter);
}

TEST_CASE("composition applies the left factor first") {
    auto p = parse_cycles("(1,2,3)", 3);
    auto q = parse_cycles("(1,2)", 3);
    // (p*q)(i) = q(p(i)): 1 -> 2 -> 1, 2 -> 3 -> 3, 3 -> 1 -> 2.
    CHECK(format_cycles(p * q) == "(2,3)");
    CHECK(format_cycles(q * p) == "(1,3)");
    CHECK((p * q).degree() == 3);

    Permutation a(4);
    CHECK_THROWS_AS(a * p, DegreeMismatch);
}

TEST_CASE("inverse and power") {
    auto p = parse_cycles("(1,2,3,4)(5,6)", 7);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
    CHECK(p.power(0).is_identity());
    CHECK(p.power(1) == p);
    CHECK(p.power(4) == parse_cycles("(5,6)", 7).power(0) * parse_cycles("(5,6)", 7).power(0));
    CHECK(p.power(-1) == p.inverse());
    CHECK(p.power(-3) == p.inverse().power(3));
    CHECK(p.power(4) == p * p * p * p);
}

TEST_CASE("conjugation convention") {
    auto p = parse_cycles("(1,2)", 4);
    auto q = parse_cycles("(1,3)(2,4)", 4);
    // q^-1 p q relabels the moved points of p through q.
    CHECK(p.conjugated_by(q) == parse_cycles("(3,4)", 4));
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(parse_cycles("(1,2)(3,4,5)", 5).order() == 6);
    CHECK(parse_cycles("(1,2,3,4)", 6).order() == 4);
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_perm(12, rng);
        BigCount claimed = p.order();
        Permutation acc(12);
        BigCount brute = 0;
        for (int k = 1; k <= 5000; ++k) {
            acc = acc * p;
            if (acc.is_identity()) {
                brute = k;
                break;
            }
        }
        CHECK(claimed == brute);
    }
}

TEST_CASE("parity") {
    CHECK_FALSE(parse_cycles("(1,2)", 4).is_even());
    CHECK(parse_cycles("(1,2,3)", 4).is_even());
    CHECK(parse_cycles("(1,2)(3,4)", 4).is_even());
    CHECK_FALSE(parse_cycles("(1,2,3,4)", 4).is_even());

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_perm(9, rng);
        auto q = random_perm(9, rng);
        // sign is a homomorphism
        CHECK((p * q).is_even() == (p.is_even() == q.is_even()));
    }
}

TEST_CASE("two-element detection") {
    CHECK(parse_cycles("(1,2)", 4).is_two_element());
    CHECK(parse_cycles("(1,2,3,4)(5,6)", 8).is_two_element());
    CHECK_FALSE(parse_cycles("(1,2,3)", 4).is_two_element());
    CHECK_FALSE(parse_cycles("(1,2)(3,4,5)", 5).is_two_element());
    CHECK(Permutation(6).is_two_element());
}

TEST_CASE("cycle type includes fixed points") {
    auto p = parse_cycles("(1,2)(3,4,5)", 7);
    CHECK(p.cycle_type() == std::vector<int>{1, 1, 2, 3});
    CHECK(Permutation(3).cycle_type() == std::vector<int>{1, 1, 1});
}

TEST_CASE("codec round-trips") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 1000; ++trial) {
        int degree = 1 + static_cast<int>(rng() % 40);
        auto p = random_perm(degree, rng);
        CHECK(parse_cycles(format_cycles(p), degree) == p);
    }
}

TEST_CASE("parser accepts whitespace and empty forms") {
    CHECK(parse_cycles("", 5).is_identity());
    CHECK(parse_cycles("()", 5).is_identity());
    CHECK(parse_cycles(" ( 1 , 2 ) ( 3 , 5 ) ", 5) == parse_cycles("(1,2)(3,5)", 5));
    CHECK(parse_cycles("(3)", 5).is_identity());  // length-1 cycle is a fixed point
}

TEST_CASE("parser rejects malformed text") {
    CHECK_THROWS_AS(parse_cycles("(1,2", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("1,2)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,,2)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(0,1)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,6)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 5), ParseError);  // repeated label
    CHECK_THROWS_AS(parse_cycles("(1,1)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(1 2)", 5), ParseError);
    CHECK_THROWS_AS(parse_cycles("(a,b)", 5), ParseError);

    try {
        parse_cycles("(1,2)(2,3)", 5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("cycle words compose left to right") {
    // Not disjoint: (1,2) then (2,3) sends 1 -> 2 -> 3.
    auto w = parse_cycle_word("(1,2)(2,3)", 3);
    CHECK(w == parse_cycles("(1,2)", 3) * parse_cycles("(2,3)", 3));
    CHECK(format_cycles(w) == "(1,3,2)");
    // Still rejects a repeat inside one cycle.
    CHECK_THROWS_AS(parse_cycle_word("(1,2,1)", 3), ParseError);
    // Agrees with the strict codec on disjoint input.
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_perm(10, rng);
        CHECK(parse_cycle_word(format_cycles(p), 10) == p);
    }
}

TEST_CASE("ordering and hashing") {
    auto p = parse_cycles("(1,2)", 3);
    auto q = parse_cycles("(1,3)", 3);
    CHECK(p != q);
    CHECK((p < q || q < p));
    CHECK_FALSE(p < p);
    CHECK(PermHash{}(p) == PermHash{}(parse_cycles("(1,2)", 3)));
}
