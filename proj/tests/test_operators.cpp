#include "blockrb/operators.hpp"

#include "blockrb/report.hpp"
#include "doctest.h"
#include "support/generators.hpp"

using namespace blockrb;

namespace {
const Scalar one = Scalar(1);
}

TEST_CASE("line indicator evaluation") {
    ProfileSpec f = ProfileSpec::single_line(-1, ConstantProfile{one});
    CHECK(f.eval(-1, 7) == one);
    CHECK(f.eval(0, 7).is_zero());
}

TEST_CASE("exponential profiles evaluate exactly for negative i") {
    ProfileSpec f = ProfileSpec::single_line(0, ExponentialProfile{Rational(2)});
    CHECK(f.eval(0, -2) == Scalar(Rational(1, 4)));
    CHECK(f.eval(0, 10) == Scalar(1024));
    CHECK(f.eval(1, 3).is_zero());
}

TEST_CASE("kronecker profiles") {
    ProfileSpec f = ProfileSpec::single_line(2, KroneckerProfile{3, Scalar(5)});
    CHECK(f.eval(2, 3) == Scalar(5));
    CHECK(f.eval(2, 4).is_zero());
}

TEST_CASE("polynomial and periodic profiles") {
    PolynomialProfile poly{{Scalar(0), Scalar(1)}};  // g(i) = i
    CHECK(profile_value(poly, -7) == Scalar(-7));
    PolynomialProfile quad{{Scalar(1), Scalar(0), Scalar(2)}};  // 1 + 2 i^2
    CHECK(profile_value(quad, -3) == Scalar(19));

    PeriodicProfile per{{Scalar(1), Scalar(2)}};
    CHECK(profile_value(per, 0) == Scalar(1));
    CHECK(profile_value(per, -1) == Scalar(2));  // mathematical modulus
    CHECK(profile_value(per, -2) == Scalar(1));
    // periodicity over a window
    for (std::int64_t i = -8; i <= 8; ++i)
        CHECK(profile_value(per, i) == profile_value(per, i + 2));
}

TEST_CASE("apply_operator") {
    SUBCASE("zero profile annihilates") {
        OperatorSpec zero{1, 0, ProfileSpec::single_line(-1, ConstantProfile{Scalar()})};
        auto rng = gen::make_rng(41);
        CHECK(apply_operator(zero, gen::random_element(rng)).is_zero());
    }
    SUBCASE("definition unfolding and off-support") {
        OperatorSpec op{1, 0, ProfileSpec::single_line(-1, ConstantProfile{one})};
        CHECK(apply_operator(op, GradedElement::basis(-1, 5)) == GradedElement::basis(0, 5));
        CHECK(apply_operator(op, GradedElement::basis(2, 5)).is_zero());
    }
    SUBCASE("grading shift by (k, k')") {
        OperatorSpec op{2, -3, ProfileSpec::single_line(0, ExponentialProfile{Rational(3)})};
        GradedElement out = apply_operator(op, GradedElement::basis(0, 4));
        REQUIRE(out.terms().size() == 1);
        CHECK(out.terms().begin()->first == Bidegree{2, 1});
    }
    SUBCASE("linearity") {
        OperatorSpec op{1, 1, ProfileSpec::single_line(-1, PolynomialProfile{{Scalar(0), one}})};
        auto rng = gen::make_rng(42);
        for (int t = 0; t < 60; ++t) {
            GradedElement u = gen::random_element(rng);
            GradedElement v = gen::random_element(rng);
            Scalar a = gen::random_scalar(rng);
            CHECK(apply_operator(op, a * u + v) ==
                  a * apply_operator(op, u) + apply_operator(op, v));
        }
    }
}

TEST_CASE("support lines") {
    ProfileSpec single = ProfileSpec::single_line(-2, ConstantProfile{one});
    CHECK(single.support_lines() == std::vector<std::int64_t>{-2});

    ProfileSpec two;
    two.lines.emplace_back(1, ConstantProfile{one});
    two.lines.emplace_back(0, KroneckerProfile{0, one});
    CHECK(two.support_lines() == std::vector<std::int64_t>{0, 1});

    ProfileSpec zero = ProfileSpec::single_line(3, ConstantProfile{Scalar()});
    CHECK(zero.support_lines().empty());

    ProfileSpec with_extra;
    with_extra.extra[Bidegree{5, -1}] = Scalar(2);
    CHECK(with_extra.support_lines() == std::vector<std::int64_t>{5});
}

TEST_CASE("profile invariants are validated") {
    CHECK_THROWS_AS(validate_profile(ExponentialProfile{Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(validate_profile(PeriodicProfile{{}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_profile(TableProfile{{{0, Scalar()}}}), std::invalid_argument);

    ProfileSpec dup;
    dup.lines.emplace_back(0, ConstantProfile{one});
    dup.lines.emplace_back(0, ConstantProfile{one});
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}

TEST_CASE("non-constancy predicate") {
    CHECK(profile_is_constant(ConstantProfile{Scalar(7)}));
    CHECK(profile_is_constant(PeriodicProfile{{one, one}}));
    CHECK_FALSE(profile_is_constant(PeriodicProfile{{Scalar(1), Scalar(2)}}));
    CHECK(profile_is_constant(PolynomialProfile{{Scalar(4)}}));
    CHECK_FALSE(profile_is_constant(PolynomialProfile{{Scalar(0), one}}));
    CHECK_FALSE(profile_is_constant(KroneckerProfile{0, one}));
}

TEST_CASE("shorthand parsing") {
    ProfileSpec f = parse_profile_shorthand("constant:1", -1);
    CHECK(f.eval(-1, 3) == one);

    f = parse_profile_shorthand("kronecker:3:5", -2);
    CHECK(f.eval(-2, 3) == Scalar(5));

    f = parse_profile_shorthand("exp:2", 0);
    CHECK(f.eval(0, -2) == Scalar(Rational(1, 4)));

    f = parse_profile_shorthand("poly:0,1", -1);
    CHECK(f.eval(-1, 4) == Scalar(4));

    f = parse_profile_shorthand("periodic:1;2", -1);
    CHECK(f.eval(-1, 1) == Scalar(2));

    f = parse_profile_shorthand("table:0=1,1=1", -1);
    CHECK(f.eval(-1, 1) == one);
    CHECK(f.eval(-1, 2).is_zero());

    f = parse_profile_shorthand("m0=0:constant:1+m0=1:constant:c", -1);
    CHECK(f.eval(0, 9) == one);
    CHECK(f.eval(1, 9) == Scalar::symbol('c'));

    CHECK_THROWS_AS(parse_profile_shorthand("nope:1", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile_shorthand("exp:0", 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile_shorthand("m0=0:constant:1+m0=0:constant:2", 0),
                    std::invalid_argument);
}

TEST_CASE("profile JSON round trip") {
    auto rng = gen::make_rng(43);
    std::vector<Profile1D> samples = {
        ConstantProfile{Scalar::symbol('c')},
        KroneckerProfile{-2, Scalar(3)},
        TableProfile{{{0, Scalar(1)}, {4, Rational(1, 2) * Scalar::symbol('q')}}},
        ExponentialProfile{Rational(-3, 2)},
        PolynomialProfile{{Scalar(1), Scalar(0), Scalar(2)}},
        PeriodicProfile{{Scalar(1), Scalar(2), Scalar(-1)}},
    };
    for (const Profile1D& g : samples) {
        nlohmann::json j = g;
        Profile1D back = j.get<Profile1D>();
        for (int i = -6; i <= 6; ++i)
            CHECK(profile_value(back, i) == profile_value(g, i));
    }

    for (int t = 0; t < 20; ++t) {
        ProfileSpec f;
        f.lines.emplace_back(-1, ConstantProfile{gen::random_scalar(rng)});
        f.lines.emplace_back(2, TableProfile{{{1, Scalar(2)}}});
        f.extra[Bidegree{0, 0}] = Scalar(gen::random_nonzero_rational(rng));
        nlohmann::json j = f;
        ProfileSpec back = j.get<ProfileSpec>();
        for (std::int64_t m = -2; m <= 2; ++m)
            for (std::int64_t i = -2; i <= 2; ++i)
                CHECK(back.eval(m, i) == f.eval(m, i));
    }
}
