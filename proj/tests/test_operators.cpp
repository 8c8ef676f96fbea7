#include "doctest.h"

#include "jacksf/operators.hpp"
#include "jacksf/verify.hpp"

using namespace jacksf;

namespace {

const AlphaRat kAlpha = AlphaRat::alpha();

SymFun p_unit(std::initializer_list<int> parts) {
    return SymFun::unit(Partition(parts), Basis::p);
}

UPolyRat<AlphaRat> upr(std::initializer_list<AlphaRat> num, std::initializer_list<AlphaRat> den) {
    return UPolyRat<AlphaRat>(UPoly<AlphaRat>(std::vector<AlphaRat>(num)),
                              UPoly<AlphaRat>(std::vector<AlphaRat>(den)));
}

} // namespace

TEST_CASE("Sekiguchi operators at infinity") {
    CHECK(apply_A(1, p_unit({1})) == (-kAlpha) * p_unit({1}));
    CHECK(apply_A(2, p_unit({1})).is_zero());

    SymFun p1_squared = p_unit({1, 1});
    SymFun expected = (kAlpha * kAlpha) * (p_unit({1, 1}) - p_unit({2}));
    CHECK(apply_A(2, p1_squared) == expected);

    // A^(1) is -α·deg on homogeneous elements
    for (int w = 0; w <= 5; ++w)
        for (const Partition& la : enumerate_partitions(w))
            CHECK(apply_A(1, SymFun::unit(la, Basis::p)) ==
                  (-kAlpha * AlphaRat::from_int(w)) * SymFun::unit(la, Basis::p));
    CHECK_THROWS_AS(apply_A(0, p_unit({1})), argument_error);
}

TEST_CASE("eigenvalue series and Pochhammer expansion") {
    CHECK(eigenvalue_A_series<AlphaRat>(Partition()) == UPolyRat<AlphaRat>::one());
    CHECK(eigenvalue_A_series<AlphaRat>(Partition{1}) ==
          upr({-kAlpha, AlphaRat::one()}, {AlphaRat::zero(), AlphaRat::one()}));

    auto series11 = eigenvalue_A_series<AlphaRat>(Partition{1, 1});
    auto coeffs = expand_pochhammer(series11, 2);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == AlphaRat::one());
    CHECK(coeffs[1] == -AlphaRat::from_int(2) * kAlpha);
    CHECK(coeffs[2] == kAlpha * (kAlpha + AlphaRat::one()));

    CHECK(expand_pochhammer(upr({-kAlpha, AlphaRat::one()}, {AlphaRat::zero(), AlphaRat::one()}),
                            1) == std::vector<AlphaRat>{AlphaRat::one(), -kAlpha});
    CHECK(expand_pochhammer(UPolyRat<AlphaRat>::one(), 0) ==
          std::vector<AlphaRat>{AlphaRat::one()});

    // reconstruction inverts the expansion for every eigenvalue series
    for (int w = 0; w <= 6; ++w)
        for (const Partition& la : enumerate_partitions(w)) {
            auto v = eigenvalue_A_series<AlphaRat>(la);
            CHECK(pochhammer_series_value(expand_pochhammer(v, la.length())) == v);
        }

    CHECK(eigenvalue_A_k<AlphaRat>(Partition{1}, 1) == -kAlpha);
    CHECK(eigenvalue_A_k<AlphaRat>(Partition{1}, 2).is_zero());
    CHECK(eigenvalue_A_k<AlphaRat>(Partition{1, 1}, 2) == kAlpha * (kAlpha + AlphaRat::one()));

    // e_0 = 1: the series A(u) is normalized as 1 + Σ A^(k)/(u)_k
    for (int w = 1; w <= 6; ++w)
        for (const Partition& la : enumerate_partitions(w))
            CHECK(expand_pochhammer(eigenvalue_A_series<AlphaRat>(la), la.length())[0] ==
                  AlphaRat::one());

    CHECK_THROWS_AS(
        expand_pochhammer(upr({AlphaRat::one()}, {AlphaRat::one(), AlphaRat::one()}), 1),
        argument_error);
}

TEST_CASE("raising operators B^(k)") {
    CHECK(apply_B(1, p_unit({2})) == p_unit({2, 1}));
    SymFun expected_b2 = (-kAlpha) * (p_unit({1, 1}) - p_unit({2})); // -2α·m_(1,1)
    CHECK(apply_B(2, p_unit({1})) == expected_b2);
    CHECK(apply_B(2, SymFun::one(Basis::p)).is_zero());
}

TEST_CASE("lowering operators C^(k)") {
    CHECK(apply_C(1, p_unit({1})) == SymFun::constant(kAlpha));
    SymFun m11 = SymFun::unit(Partition{1, 1}, Basis::m);
    CHECK(apply_C(2, m11) == (-kAlpha * (kAlpha + AlphaRat::one())) * p_unit({1}));
    CHECK(apply_C(2, p_unit({1})).is_zero());
}

TEST_CASE("collective-variable Hamiltonians") {
    CHECK(apply_H1(p_unit({1})) == kAlpha * p_unit({1}));
    CHECK(apply_H1(p_unit({2, 1})) == (AlphaRat::from_int(3) * kAlpha) * p_unit({2, 1}));
    CHECK(apply_H1(SymFun::one(Basis::p)).is_zero());

    CHECK(apply_H2(p_unit({1})) == (kAlpha * (kAlpha - AlphaRat::one())) * p_unit({1}));
    SymFun expected = (AlphaRat::from_int(2) * kAlpha) * p_unit({1, 1}) +
                      (AlphaRat::from_int(4) * kAlpha * (kAlpha - AlphaRat::one())) * p_unit({2});
    CHECK(apply_H2(p_unit({2})) == expected);
    CHECK(apply_H2(SymFun::one(Basis::p)).is_zero());
}

TEST_CASE("Heisenberg generators") {
    CHECK(heisenberg_a(-2, SymFun::one(Basis::p)) == p_unit({2}));
    CHECK(heisenberg_a(1, p_unit({1})) == SymFun::constant(kAlpha));
    SymFun f = p_unit({2});
    CHECK(heisenberg_a(1, heisenberg_a(-1, f)) - heisenberg_a(-1, heisenberg_a(1, f)) ==
          kAlpha * f);
    CHECK_THROWS_AS(heisenberg_a(0, f), argument_error);
}

TEST_CASE("matrix elements of B(u) and C(u)") {
    UPoly<AlphaRat> u_poly = UPoly<AlphaRat>::linear(AlphaRat::zero());
    UPolyRat<AlphaRat> inv_u(UPoly<AlphaRat>::one(), u_poly);

    CHECK(matrix_element_B<AlphaRat>(Partition{1}, Partition()) == inv_u);
    CHECK(matrix_element_B<AlphaRat>(Partition{2}, Partition{1}) == inv_u);

    // ((1,1),(1)): (2α/(α+1)) (u-α)/(u(u+1))
    UPolyRat<AlphaRat> expected(
        UPoly<AlphaRat>(std::vector<AlphaRat>{-kAlpha, AlphaRat::one()}),
        UPoly<AlphaRat>(std::vector<AlphaRat>{AlphaRat::zero(), AlphaRat::one(), AlphaRat::one()}));
    expected = UPolyRat<AlphaRat>(
                   UPoly<AlphaRat>((AlphaRat::from_int(2) * kAlpha) / (kAlpha + AlphaRat::one())),
                   UPoly<AlphaRat>::one()) *
               expected;
    CHECK(matrix_element_B<AlphaRat>(Partition{1, 1}, Partition{1}) == expected);

    CHECK(matrix_element_C<AlphaRat>(Partition(), Partition{1}) ==
          UPolyRat<AlphaRat>(UPoly<AlphaRat>(kAlpha), u_poly));
    UPolyRat<AlphaRat> expected_c(
        UPoly<AlphaRat>(std::vector<AlphaRat>{-kAlpha * kAlpha, kAlpha}),
        UPoly<AlphaRat>(std::vector<AlphaRat>{AlphaRat::zero(), AlphaRat::one(), AlphaRat::one()}));
    CHECK(matrix_element_C<AlphaRat>(Partition{1}, Partition{1, 1}) == expected_c);
    CHECK(matrix_element_C<AlphaRat>(Partition{1}, Partition{2}) ==
          UPolyRat<AlphaRat>(
              UPoly<AlphaRat>((AlphaRat::from_int(2) * kAlpha) / (kAlpha + AlphaRat::one())),
              u_poly));

    CHECK_THROWS_AS(matrix_element_B<AlphaRat>(Partition{2, 1}, Partition{1}), argument_error);
    CHECK_THROWS_AS(matrix_element_C<AlphaRat>(Partition{2}, Partition{2, 2}), argument_error);
}

TEST_CASE("step operator evaluations") {
    auto [mu1, c1] = step_up<AlphaRat>(Partition{1}, 1);
    CHECK(mu1 == Partition());
    CHECK(c1 == AlphaRat::one() / kAlpha);

    auto [mu2, c2] = step_up<AlphaRat>(Partition{2}, 1);
    CHECK(mu2 == Partition{1});
    CHECK(c2 == AlphaRat::one() / (AlphaRat::from_int(2) * kAlpha));

    // two routes: the closed product and the reduced matrix element at the point
    auto [mu3, c3] = step_up<AlphaRat>(Partition{1, 1}, 2);
    CHECK(mu3 == Partition{1});
    AlphaRat point = kAlpha - AlphaRat::one();
    CHECK(c3 == matrix_element_B<AlphaRat>(Partition{1, 1}, Partition{1}).eval(point));
    CHECK(c3 == -AlphaRat::from_int(2) / (kAlpha * kAlpha - AlphaRat::one()));

    auto [md1, d1] = step_down<AlphaRat>(Partition{1}, 1);
    CHECK(md1 == Partition());
    CHECK(d1 == AlphaRat::one());

    auto [md2, d2] = step_down<AlphaRat>(Partition{1, 1}, 2);
    CHECK(md2 == Partition{1});
    CHECK(d2 == -AlphaRat::one() / (kAlpha - AlphaRat::one()));

    auto [md3, d3] = step_down<AlphaRat>(Partition{2}, 1);
    CHECK(md3 == Partition{1});
    CHECK(d3 == AlphaRat::one() / (kAlpha + AlphaRat::one()));

    CHECK_THROWS_AS(step_up<AlphaRat>(Partition{2, 2}, 1), argument_error);
    CHECK_THROWS_AS(step_down<AlphaRat>(Partition{2, 2}, 1), argument_error);
}

TEST_CASE("operator identity suites at property-test bounds") {
    CHECK(verify_commute<AlphaRat>(5, 3).pass);
    CHECK(verify_self_adjoint<AlphaRat>(6, 4).pass);
    CHECK(verify_hs<AlphaRat>(5).pass);
    CHECK(verify_bc_commutators<AlphaRat>(4, 3).pass);
    CHECK(verify_bc_adjoint<AlphaRat>(5, 4).pass);
    CHECK(verify_matrix_elements<AlphaRat>(6).pass);
    CHECK(verify_steps<AlphaRat>(4).pass);
    CHECK(verify_eigen_A<AlphaRat>(5, 3).pass);
    CHECK(verify_heisenberg<AlphaRat>(4, 3).pass);
}

TEST_CASE("operator identities hold at a specialized rational α") {
    NumericAlpha::set_alpha(Rat(7, 3));
    CHECK(verify_eigen_A<NumericAlpha>(4, 3).pass);
    CHECK(verify_hs<NumericAlpha>(4).pass);
    CHECK(verify_steps<NumericAlpha>(3).pass);

    // specialization commutes with the symbolic computation
    SymFun symbolic = apply_A(2, SymFun::unit(Partition{2, 1}, Basis::p));
    SymFunT<NumericAlpha> numeric =
        apply_A(2, SymFunT<NumericAlpha>::unit(Partition{2, 1}, Basis::p));
    for (const auto& [la, c] : symbolic.terms())
        CHECK(numeric.coeff(la).value() == c.eval_at(Rat(7, 3)));
    CHECK(numeric.term_count() == symbolic.term_count());
}
