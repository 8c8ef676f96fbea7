#include "doctest.h"

#include <random>

#include "jacksf/json_io.hpp"

using namespace jacksf;

TEST_CASE("AlphaRat wire format") {
    AlphaRat value(AlphaPoly({Rat(0), Rat(2)}), AlphaPoly({Rat(1), Rat(1)})); // 2α/(α+1)
    json encoded = coeff_to_json(value);
    CHECK(encoded["num"] == json::parse(R"([[1,"2"]])"));
    CHECK(encoded["den"] == json::parse(R"([[0,"1"],[1,"1"]])"));
    CHECK(coeff_from_json<AlphaRat>(encoded) == value);

    CHECK(coeff_from_json<AlphaRat>(json::parse(R"("3/4")")) == AlphaRat::from_rat(Rat(3, 4)));
    CHECK(coeff_from_json<AlphaRat>(json(5)) == AlphaRat::from_int(5));
    CHECK_THROWS_AS(coeff_from_json<AlphaRat>(json::parse(R"({"num":[]})")), argument_error);
    CHECK_THROWS_AS(alpha_poly_from_json(json::parse(R"([[0,"1/0"]])")), argument_error);
}

TEST_CASE("SymFun wire format round-trips bit-exactly") {
    std::mt19937_64 rng(2025);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        SymFun f(trial % 2 == 0 ? Basis::p : Basis::m);
        for (int w = 0; w <= 4; ++w)
            for (const Partition& la : enumerate_partitions(w)) {
                int c = coeff(rng);
                if (c != 0 && coeff(rng) > 0)
                    f.add_term(la, AlphaRat(AlphaPoly({Rat(c), Rat(coeff(rng))}),
                                            AlphaPoly({Rat(1), Rat(0), Rat(1)})));
            }
        json encoded = symfun_to_json(f);
        CHECK(symfun_from_json<AlphaRat>(encoded) == f);
        // serialized twice gives identical bytes
        CHECK(encoded.dump() == symfun_to_json(symfun_from_json<AlphaRat>(encoded)).dump());
    }
}

TEST_CASE("terms are serialized in reverse lexicographic order") {
    SymFun f(Basis::m);
    f.add_term(Partition{1, 1}, AlphaRat::one());
    f.add_term(Partition{2}, AlphaRat::one());
    f.add_term(Partition{3}, AlphaRat::one());
    json encoded = symfun_to_json(f);
    REQUIRE(encoded["terms"].size() == 3);
    CHECK(encoded["terms"][0]["partition"] == json::array({3}));
    CHECK(encoded["terms"][1]["partition"] == json::array({2}));
    CHECK(encoded["terms"][2]["partition"] == json::array({1, 1}));
    CHECK(encoded["basis"] == "m");
}

TEST_CASE("constants parse from bare numbers and strings") {
    SymFun one = symfun_from_json<AlphaRat>(json(1));
    CHECK(one == SymFun::one(Basis::p));
    CHECK(symfun_from_json<AlphaRat>(json::parse(R"("2/3")")) ==
          SymFun::constant(AlphaRat::from_rat(Rat(2, 3))));
}

TEST_CASE("partition JSON") {
    CHECK(partition_from_json(json::array({3, 1})) == Partition{3, 1});
    CHECK(partition_to_json(Partition{2, 2, 1}) == json::array({2, 2, 1}));
    CHECK_THROWS_AS(partition_from_json(json::array({1, 3})), argument_error);
    CHECK_THROWS_AS(partition_from_json(json::array({0})), argument_error);
}

TEST_CASE("PsiInstance JSON") {
    PsiInstance inst = psi_instance_from_json(json::parse(R"({"x":["2","3"],"psi":["1"]})"));
    CHECK(inst.xvals == std::vector<Rat>{Rat(2), Rat(3)});
    CHECK(inst.psivals == std::vector<Rat>{Rat(1)});
    json back = psi_instance_to_json(inst);
    CHECK(back["x"] == json::array({"2", "3"}));
    CHECK(back["psi"] == json::array({"1"}));
    CHECK_THROWS_AS(psi_instance_from_json(json::parse(R"({"x":["2","2"]})")), argument_error);
}

TEST_CASE("numeric-mode coefficients evaluate symbolic input") {
    NumericAlpha::set_alpha(Rat(3));
    json two_over_ap1 = json::parse(R"({"num":[[0,"2"]],"den":[[0,"1"],[1,"1"]]})");
    CHECK(coeff_from_json<NumericAlpha>(two_over_ap1).value() == Rat(1, 2));
    json pole = json::parse(R"({"num":[[0,"1"]],"den":[[0,"-3"],[1,"1"]]})");
    CHECK_THROWS_AS(coeff_from_json<NumericAlpha>(pole), pole_error);
}
