#include "wittleib/algebra.hpp"
#include "wittleib/families.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace wittleib;

TEST_CASE("witt bracket on basis elements") {
    CHECK(witt_bracket(d(2), d(3)) == Scalar(-1) * d(5));
    CHECK(witt_bracket(d(1), d(1)).is_zero());
    CHECK(witt_bracket(d(2), d(-2)) == Scalar(4) * d(0));
}

TEST_CASE("module action on basis elements") {
    ModuleParams half(parse_scalar("1/2"), Scalar(0));
    CHECK(module_action(v(0), d(1), half) == parse_scalar("1/2") * v(1));

    ModuleParams zero01(Scalar(0), Scalar(0));
    CHECK(module_action(v(-1), d(1), zero01) == Scalar(-1) * v(0));

    ModuleParams p21(Scalar(2), Scalar(1));
    CHECK(module_action(v(1), d(2), p21) == Scalar(5) * v(3));
}

TEST_CASE("elements never store zero coefficients") {
    WittElement x = d(1) + d(2);
    x -= d(2);
    CHECK(x.support_size() == 1);
    x -= d(1);
    CHECK(x.is_zero());
    WittElement y;
    y.add_term(3, Scalar(0));
    CHECK(y.is_zero());
    CHECK((Scalar(0) * d(5)).is_zero());
}

TEST_CASE("witt bracket satisfies the Jacobi-type identity on a window") {
    // [x,[y,z]] = [[x,y],z] - [[x,z],y] for all basis triples
    for (Index i = -4; i <= 4; ++i)
        for (Index j = -4; j <= 4; ++j)
            for (Index k = -4; k <= 4; ++k) {
                WittElement lhs = witt_bracket(d(i), witt_bracket(d(j), d(k)));
                WittElement rhs = witt_bracket(witt_bracket(d(i), d(j)), d(k)) -
                                  witt_bracket(witt_bracket(d(i), d(k)), d(j));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("module action is a right action for sampled parameters") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (int rep = 0; rep < 4; ++rep) {
        ModuleParams p(Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))),
                       Scalar(Rational(num(rng), den(rng))));
        for (Index k = -3; k <= 3; ++k)
            for (Index i = -3; i <= 3; ++i)
                for (Index j = -3; j <= 3; ++j) {
                    ModuleElement lhs = module_action(v(k), witt_bracket(d(i), d(j)), p);
                    ModuleElement rhs = module_action(module_action(v(k), d(i), p), d(j), p) -
                                        module_action(module_action(v(k), d(j), p), d(i), p);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("reducibility criterion") {
    CHECK(is_reducible(ModuleParams(Scalar(1), Scalar(0))));
    CHECK_FALSE(is_reducible(ModuleParams(parse_scalar("1/2"), Scalar(0))));
    CHECK_FALSE(is_reducible(ModuleParams(Scalar(0), Scalar(3))));
    CHECK(is_reducible(ModuleParams(Scalar(-3), Scalar(1))));
}

TEST_CASE("leibniz product structure") {
    StructureTable t1 = build_table(FamilyId::i, ModuleParams(Scalar(5), Scalar(2)));
    // family I: pure Witt product on W x W
    CHECK(leibniz_product(t1, embed(d(2)), embed(d(3))) == embed(Scalar(-1) * d(5)));
    CHECK(leibniz_product(t1, embed(d(4)), embed(d(1))) == embed(Scalar(3) * d(5)));

    // (V,V) and (W,V) vanish; (V,W) is the module action
    StructureTable t3 = build_table(FamilyId::iii, ModuleParams(Scalar(2), Scalar(1)));
    CHECK(leibniz_product(t3, embed(v(3)), embed(v(5))).is_zero());
    CHECK(leibniz_product(t3, embed(d(3)), embed(v(5))).is_zero());
    CHECK(leibniz_product(t3, embed(v(3)), embed(d(5))) ==
          embed(module_action(v(3), d(5), t3.params())));

    // family III: [d_2,d_3] = -d_5 + 15 v(3) at alpha = 2
    LeibnizElement p = leibniz_product(t3, embed(d(2)), embed(d(3)));
    LeibnizElement expect = embed(Scalar(-1) * d(5)) + embed(Scalar(15) * v(3));
    CHECK(p == expect);
}

TEST_CASE("leibniz defect examples") {
    StructureTable t1 = build_table(FamilyId::i, ModuleParams(Scalar(0), Scalar(4)));
    CHECK(leibniz_defect(t1, embed(d(1)), embed(d(2)), embed(d(3))).is_zero());

    StructureTable thm1 = build_table(FamilyId::thm1, ModuleParams(parse_scalar("1/2"), Scalar(2)));
    CHECK(leibniz_defect(thm1, embed(d(1)), embed(d(2)), embed(d(3))).is_zero());
}

TEST_CASE("table constructors reject inconsistent parameters") {
    CHECK_THROWS_AS(build_table(FamilyId::thm1, ModuleParams(Scalar(1), Scalar(0))),
                    contract_error);
    CHECK_THROWS_AS(build_table(FamilyId::i, ModuleParams(parse_scalar("1/2"), Scalar(0))),
                    contract_error);
    CHECK_THROWS_AS(build_table(FamilyId::ii, ModuleParams(Scalar(0), Scalar(2))),
                    contract_error);
    CHECK_THROWS_AS(build_table(FamilyId::iii, ModuleParams(Scalar(0), Scalar(3))),
                    contract_error);
    CHECK_THROWS_AS(build_table(FamilyId::iv, ModuleParams(Scalar(0), Scalar(1))),
                    contract_error);
    CHECK_THROWS_AS(build_table(FamilyId::ii, ModuleParams(parse_scalar("1/3"), Scalar(3))),
                    contract_error);
}
