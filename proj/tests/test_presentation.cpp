#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "halg/parser.hpp"
#include "halg/presentation.hpp"
#include "oracles.hpp"

using namespace halg;

namespace {

std::string word_str(const Monomial& m, const std::string& alphabet) {
    std::string s;
    for (auto l : m.data) s += alphabet[l];
    return s;
}

}  // namespace

TEST_CASE("monomial enumeration") {
    auto nc = enumerate_monomials(Flavor::noncommutative, 2, 2);
    REQUIRE(nc.size() == 4);
    CHECK(word_str(nc[0], "xy") == "xx");
    CHECK(word_str(nc[1], "xy") == "xy");
    CHECK(word_str(nc[2], "xy") == "yx");
    CHECK(word_str(nc[3], "xy") == "yy");

    auto comm = enumerate_monomials(Flavor::commutative, 3, 2);
    REQUIRE(comm.size() == 6);
    CHECK(comm[0].data == std::vector<std::uint32_t>{2, 0, 0});
    CHECK(comm[1].data == std::vector<std::uint32_t>{1, 1, 0});
    CHECK(comm[2].data == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(comm[3].data == std::vector<std::uint32_t>{0, 2, 0});
    CHECK(comm[5].data == std::vector<std::uint32_t>{0, 0, 2});

    CHECK(enumerate_monomials(Flavor::noncommutative, 3, 4).size() == 81);
    CHECK(monomial_count(Flavor::noncommutative, 3, 4) == 81);
    CHECK(monomial_count(Flavor::commutative, 3, 2) == 6);
    CHECK(enumerate_monomials(Flavor::commutative, 4, 0).size() == 1);
    CHECK(enumerate_monomials(Flavor::noncommutative, 4, 0).size() == 1);
}

TEST_CASE("ordering is total, degree-compatible, index-consistent") {
    for (Flavor f : {Flavor::noncommutative, Flavor::commutative}) {
        for (std::uint32_t n : {1u, 2u, 3u, 4u}) {
            for (std::uint32_t d : {0u, 1u, 2u, 3u}) {
                auto monos = enumerate_monomials(f, n, d);
                CHECK(monos.size() == monomial_count(f, n, d));
                for (std::size_t i = 0; i < monos.size(); ++i) {
                    CHECK(monomial_index(f, n, monos[i]) == i);
                    CHECK(monomial_degree(f, monos[i]) == d);
                    if (i + 1 < monos.size()) {
                        CHECK(monomial_less(f, monos[i], monos[i + 1]));
                        CHECK_FALSE(monomial_less(f, monos[i + 1], monos[i]));
                    }
                }
            }
        }
    }
    // degree dominates
    CHECK(monomial_less(Flavor::noncommutative, Monomial::word({1, 1}),
                        Monomial::word({0, 0, 0})));
    CHECK(monomial_less(Flavor::commutative, Monomial::exponents({0, 2}),
                        Monomial::exponents({3, 0})));
}

TEST_CASE("form construction merges and validates") {
    PrimeField F(7);
    Form f = Form::make(Flavor::noncommutative, 2, 2,
                        {{Monomial::word({0, 1}), {3}},
                         {Monomial::word({0, 1}), {4}},
                         {Monomial::word({1, 0}), {2}}},
                        F);
    CHECK(f.terms.size() == 1);  // 3 + 4 = 0 mod 7 dropped
    CHECK(f.coeff(Monomial::word({1, 0})).value == 2);
    CHECK(f.coeff(Monomial::word({0, 1})).value == 0);
    CHECK_THROWS_AS(Form::make(Flavor::noncommutative, 2, 2,
                               {{Monomial::word({0}), {1}}}, F),
                    std::invalid_argument);  // wrong degree
    CHECK_THROWS_AS(Form::make(Flavor::commutative, 2, 2,
                               {{Monomial::exponents({2, 0, 0}), {1}}}, F),
                    std::invalid_argument);  // wrong width
}

TEST_CASE("presentation validation") {
    PrimeField F(7);
    CHECK_THROWS_AS(Presentation(Flavor::commutative, {"x", "x"}, F, {}),
                    std::invalid_argument);
    Form linearish = Form::make(Flavor::noncommutative, 1, 2,
                                {{Monomial::word({0, 0}), {1}}}, F);
    linearish.degree = 1;  // corrupt
    CHECK_THROWS_AS(Presentation(Flavor::noncommutative, {"x"}, F, {linearish}),
                    std::invalid_argument);
}

TEST_CASE("expand_lie") {
    Presentation c = parse_presentation(
        "flavor lie\nvars a, b, c\nrel b*b\nrel [a,b] - c*c\nrel [a,c]\n");
    Presentation nc = expand_lie(c);
    CHECK(nc.flavor == Flavor::noncommutative);
    REQUIRE(nc.relations.size() == 3);
    // [a,b] - c^2 expands to ab + ba - cc
    const Form& f1 = nc.relations[1];
    CHECK(f1.coeff(Monomial::word({0, 1})).value == 1);
    CHECK(f1.coeff(Monomial::word({1, 0})).value == 1);
    CHECK(f1.coeff(Monomial::word({2, 2})) ==
          nc.field.neg(nc.field.one()));
    CHECK(nc.relations[0].coeff(Monomial::word({1, 1})).value == 1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(nc.relations[i].degree == c.relations[i].degree);

    // a*b alone is not in the allowed span
    PrimeField F;
    Form bad = Form::make(Flavor::noncommutative, 2, 2,
                          {{Monomial::word({0, 1}), {1}}}, F);
    CHECK_THROWS_WITH_AS(
        Presentation(Flavor::lie, {"a", "b"}, F, {bad}),
        "not a Lie-type relation", std::invalid_argument);
    CHECK_THROWS_AS(expand_lie(nc), std::invalid_argument);
}

TEST_CASE("type of presentation") {
    Presentation exat_i = parse_presentation(
        "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y\n");
    CHECK(type_of_presentation(exat_i) == AlgebraType(2, {2, 2, 3}));
    Presentation free4(Flavor::noncommutative, {"a", "b", "c", "d"},
                       PrimeField(), {});
    CHECK(type_of_presentation(free4) == AlgebraType(4, {}));
}

TEST_CASE("parser: grammar and error positions") {
    Presentation p = parse_presentation(
        "# a comment\nflavor commutative\nprime 7\nvars x, y\nrel x*x + "
        "3*x*y\n");
    CHECK(p.field.modulus() == 7);
    CHECK(p.n == 2);
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].coeff(Monomial::exponents({1, 1})).value == 3);

    auto expect_error = [](const std::string& text, std::uint32_t line,
                           const std::string& needle) {
        try {
            parse_presentation(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("flavor commutative\nvars x, y\nrel x*x + y\n", 3,
                 "non-homogeneous");
    expect_error("flavor commutative\nvars x\nrel x*q\n", 3,
                 "unknown generator");
    expect_error("flavor commutative\nvars x\nrel x*x $\n", 3, "malformed");
    expect_error("flavor commutative\nvars x, x\nrel x*x\n", 2, "duplicate");
    expect_error("flavor commutative\nprime 6\nvars x\nrel x*x\n", 2,
                 "prime");
    expect_error("flavor commutative\nprime 2\nvars x\nrel x*x\n", 2, "odd");
    expect_error("flavor noncommutative\nvars x, y\nrel [x,y]\n", 3,
                 "bracket token requires lie flavor");
    expect_error("flavor commutative\nvars x\nrel x\n", 3, "degree >= 2");
    expect_error("vars x\nrel x*x\n", 2, "flavor");
    expect_error("flavor lie\nvars a, b\nrel a*b\n", 3, "Lie-type");
    expect_error("flavor commutative\nvars x\nrel 7*x*x\nprime 7\n", 4,
                 "precede");
    expect_error("flavor commutative\nvars x\nrel x*x - x*x\n", 3,
                 "vanishes");
    expect_error("bogus line\n", 1, "unknown directive");

    // column information points at the offending token
    try {
        parse_presentation("flavor commutative\nvars x\nrel x*x + zz*x\n");
        FAIL_CHECK("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.col() == 11);
    }
}

TEST_CASE("parser: rational coefficients reduce mod p") {
    Presentation p = parse_presentation(
        "flavor commutative\nprime 7\nvars x, y\nrel 1/2*x*x + y*y\n");
    // 1/2 = 4 mod 7
    CHECK(p.relations[0].coeff(Monomial::exponents({2, 0})).value == 4);
    CHECK_THROWS_AS(
        parse_presentation(
            "flavor commutative\nprime 7\nvars x\nrel 1/7*x*x\n"),
        ParseError);
}

TEST_CASE("parse/serialize round trip") {
    const char* texts[] = {
        "flavor commutative\nvars x, y\nrel x*x\nrel x*y\nrel y*y*y\n",
        "flavor noncommutative\nvars a, b, c, d\nrel a*b - a*c\nrel b*c - c*b "
        "- c*c\nrel b*d\n",
        "flavor lie\nvars a, b, c, d\nrel [a,b]\nrel [b,c]\nrel [a,c] + "
        "[b,d]\nrel [a,d] + d*d\n",
        "flavor lie\nprime 101\nvars x, y\nrel 3*[x,y] - 2*x*x\n",
        "flavor commutative\nprime 31\nvars x, y, z\nrel x*y + 30*z*z\n",
    };
    for (const char* text : texts) {
        Presentation p = parse_presentation(text);
        Presentation q = parse_presentation(serialize_presentation(p));
        CHECK(p == q);
    }
    // NC word order is preserved verbatim, commutative is normalized
    Presentation nc = parse_presentation(
        "flavor noncommutative\nvars x, y\nrel y*x\n");
    CHECK(nc.relations[0].coeff(Monomial::word({1, 0})).value == 1);
    CHECK(nc.relations[0].coeff(Monomial::word({0, 1})).value == 0);
    Presentation cm = parse_presentation(
        "flavor commutative\nvars x, y\nrel y*x + x*y\n");
    CHECK(cm.relations[0].coeff(Monomial::exponents({1, 1})).value == 2);
}
