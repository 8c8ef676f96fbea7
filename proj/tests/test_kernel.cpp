#include "doctest.h"

#include "jacksf/kernel.hpp"

using namespace jacksf;

namespace {

// Oracle: exponentiate Σ_{n≤d} p_n(x)p_n(y)/(αn) as a truncated series and
// keep the diagonal total-degree window, independently of the closed form.
BiSymFun<AlphaRat> kernel_by_exponential(int d) {
    BiSymFun<AlphaRat> log_term;
    for (int n = 1; n <= d; ++n)
        log_term.add_term(Partition{n}, Partition{n},
                          AlphaRat::one() / (AlphaRat::alpha() * AlphaRat::from_int(n)));
    BiSymFun<AlphaRat> total = BiSymFun<AlphaRat>::one();
    BiSymFun<AlphaRat> power = BiSymFun<AlphaRat>::one();
    Rat fact(1);
    for (int j = 1; j <= d; ++j) {
        power = BiSymFun<AlphaRat>::mul_truncated(power, log_term, d);
        fact *= j;
        BiSymFun<AlphaRat> scaled;
        for (const auto& [key, c] : power.terms())
            scaled.add_term(key.first, key.second, c * AlphaRat::from_rat(Rat(1) / fact));
        total += scaled;
    }
    return total;
}

} // namespace

TEST_CASE("kernel truncation: the first few degrees, frozen") {
    BiSymFun<AlphaRat> d0 = kernel_truncated<AlphaRat>(0);
    REQUIRE(d0.terms().size() == 1);
    CHECK(d0.terms().begin()->second == AlphaRat::one());

    BiSymFun<AlphaRat> d1 = kernel_truncated<AlphaRat>(1);
    CHECK(d1.terms().size() == 2);
    CHECK(d1.terms().at({Partition{1}, Partition{1}}) == AlphaRat::one() / AlphaRat::alpha());

    BiSymFun<AlphaRat> d2 = kernel_truncated<AlphaRat>(2);
    AlphaRat alpha = AlphaRat::alpha();
    CHECK(d2.terms().at({Partition{2}, Partition{2}}) ==
          AlphaRat::one() / (AlphaRat::from_int(2) * alpha));
    CHECK(d2.terms().at({Partition{1, 1}, Partition{1, 1}}) ==
          AlphaRat::one() / (AlphaRat::from_int(2) * alpha * alpha));
}

TEST_CASE("closed diagonal form matches the exponential expansion") {
    for (int d = 0; d <= 5; ++d)
        CHECK(kernel_truncated<AlphaRat>(d) == kernel_by_exponential(d));
}

TEST_CASE("reproducing-kernel lemma") {
    CHECK(kernel_lemma_check(SymFun::unit(Partition{1}, Basis::p), 3));
    CHECK(kernel_lemma_check(SymFun::one(Basis::p), 0));
    CHECK(kernel_lemma_check(SymFun::unit(Partition{2, 1}, Basis::p), 5));

    for (int w = 0; w <= 4; ++w)
        for (const Partition& la : enumerate_partitions(w))
            CHECK(kernel_lemma_check(SymFun::unit(la, Basis::p), 4));

    // a non-basis element exercises bilinearity of the adjoint
    SymFun f = SymFun::unit(Partition{2}, Basis::p) +
               AlphaRat::alpha() * SymFun::unit(Partition{1, 1}, Basis::p);
    CHECK(kernel_lemma_check(f, 4));

    CHECK_THROWS_AS(kernel_lemma_check(SymFun::unit(Partition{3}, Basis::p), 2), argument_error);
    CHECK_THROWS_AS(kernel_truncated<AlphaRat>(-1), argument_error);
}
