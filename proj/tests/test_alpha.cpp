#include "doctest.h"

#include <random>

#include "jacksf/alpha.hpp"

using namespace jacksf;

namespace {

AlphaRat ar(std::initializer_list<Rat> num, std::initializer_list<Rat> den) {
    return AlphaRat(AlphaPoly(num), AlphaPoly(den));
}

// Random small element of Q(α); nonzero denominator by construction.
AlphaRat random_alpha_rat(std::mt19937_64& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, 3);
    auto poly = [&](bool force_nonzero) {
        while (true) {
            std::vector<Rat> c(static_cast<size_t>(deg(rng)) + 1);
            for (auto& v : c)
                v = coeff(rng);
            AlphaPoly p(std::move(c));
            if (!force_nonzero || !p.is_zero())
                return p;
        }
    };
    AlphaPoly num = poly(!allow_zero);
    AlphaPoly den = poly(true);
    return AlphaRat(std::move(num), std::move(den));
}

} // namespace

TEST_CASE("field arithmetic on the worked ratios") {
    AlphaRat alpha = AlphaRat::alpha();
    AlphaRat one = AlphaRat::one();

    // α/(α+1) + 1/(α+1) = 1
    AlphaRat a = ar({Rat(0), Rat(1)}, {Rat(1), Rat(1)});
    AlphaRat b = ar({Rat(1)}, {Rat(1), Rat(1)});
    CHECK(a + b == one);

    // (α+1) · 1/(α+1) = 1
    AlphaRat c = ar({Rat(1), Rat(1)}, {Rat(1)});
    CHECK(c * c.inverse() == one);
    CHECK(c * b == one);

    // (α²-1)/(α-1) = α+1
    AlphaRat d = ar({Rat(-1), Rat(0), Rat(1)}, {Rat(1)}) / ar({Rat(-1), Rat(1)}, {Rat(1)});
    CHECK(d == c);
    // multiplicative round trip confirms the quotient
    CHECK(d * ar({Rat(-1), Rat(1)}, {Rat(1)}) == ar({Rat(-1), Rat(0), Rat(1)}, {Rat(1)}));

    CHECK((alpha - alpha).is_zero());
    CHECK_THROWS_AS(one / AlphaRat::zero(), division_by_zero);
    CHECK_THROWS_AS(AlphaRat::zero().inverse(), division_by_zero);
}

TEST_CASE("canonical form: monic denominator, reduced, unique") {
    // 2α/2(α+1): scale both sides, expect the canonical representative
    AlphaRat scaled = ar({Rat(0), Rat(2)}, {Rat(2), Rat(2)});
    AlphaRat canonical = ar({Rat(0), Rat(1)}, {Rat(1), Rat(1)});
    CHECK(scaled == canonical);
    CHECK(scaled.den().leading() == 1);

    // common polynomial factor cancels
    AlphaPoly factor({Rat(3), Rat(1)});
    AlphaRat with_factor(AlphaPoly({Rat(0), Rat(1)}) * factor, AlphaPoly({Rat(1), Rat(1)}) * factor);
    CHECK(with_factor == canonical);
}

TEST_CASE("evaluation at rational points") {
    AlphaRat f = ar({Rat(2)}, {Rat(1), Rat(1)}); // 2/(α+1)
    CHECK(f.eval_at(Rat(1)) == 1);
    CHECK(AlphaRat::alpha().eval_at(Rat(3, 2)) == Rat(3, 2));
    AlphaRat pole = ar({Rat(1)}, {Rat(-1), Rat(1)}); // 1/(α-1)
    CHECK_THROWS_AS(pole.eval_at(Rat(1)), pole_error);
}

TEST_CASE("field axioms and normalization idempotence on random samples") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        AlphaRat a = random_alpha_rat(rng);
        AlphaRat b = random_alpha_rat(rng);
        AlphaRat c = random_alpha_rat(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + AlphaRat::zero() == a);
        CHECK(a * AlphaRat::one() == a);
        CHECK((a - a).is_zero());
        if (!a.is_zero())
            CHECK(a * a.inverse() == AlphaRat::one());
        // re-normalizing an already canonical value changes nothing
        if (!a.is_zero())
            CHECK(AlphaRat(a.num(), a.den()) == a);
        CHECK(a.den().leading() == 1);
    }
}

TEST_CASE("evaluation is a ring homomorphism away from poles") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> pts(2, 12);
    int done = 0;
    while (done < 40) {
        AlphaRat a = random_alpha_rat(rng);
        AlphaRat b = random_alpha_rat(rng);
        Rat r(pts(rng), pts(rng));
        r.canonicalize();
        try {
            Rat va = a.eval_at(r), vb = b.eval_at(r);
            CHECK((a + b).eval_at(r) == va + vb);
            CHECK((a * b).eval_at(r) == va * vb);
            CHECK((a - b).eval_at(r) == va - vb);
            ++done;
        } catch (const pole_error&) {
            // resample
        }
    }
}

TEST_CASE("rendering of canonical strings") {
    CHECK(ar({Rat(2)}, {Rat(1), Rat(1)}).to_string() == "2/(α+1)");
    CHECK(AlphaRat::alpha().to_string() == "α");
    CHECK(ar({Rat(0), Rat(2)}, {Rat(1), Rat(1)}).to_string() == "(2*α)/(α+1)");
    CHECK(AlphaRat::zero().to_string() == "0");
    CHECK(ar({Rat(-1), Rat(0), Rat(1)}, {Rat(1)}).to_string() == "α^2-1");
}
