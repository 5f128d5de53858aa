#include "doctest.h"

#include "embrace/signs.hpp"

using namespace embrace;

TEST_CASE("koszul swap sign is the product of the degrees") {
    CHECK(koszul_swap_sign(1, 1).negative());
    CHECK(koszul_swap_sign(3, 5).negative());
    CHECK_FALSE(koszul_swap_sign(2, 1).negative());
    CHECK_FALSE(koszul_swap_sign(0, 5).negative());
    CHECK_FALSE(koszul_swap_sign(-1, 2).negative());
    CHECK(koszul_swap_sign(-1, -3).negative());
}

TEST_CASE("canonical isomorphism sign: shifts against degrees") {
    // alpha = (s_1+...+s_n)*deg_phi + sum_{l>=2} s_l*(m_1+...+m_{l-1})
    CHECK_FALSE(canonical_iso_sign(0, {}, 3, {}).negative());
    CHECK(canonical_iso_sign(0, {1}, 1, {4}).negative());         // 1*1
    CHECK(canonical_iso_sign(0, {1, 1}, 1, {1, 0}).negative());   // 2*1 + 1*1 = 3
    CHECK(canonical_iso_sign(0, {1, 1}, 0, {1, 1}).negative());   // 0 + 1*1 = 1
    CHECK_FALSE(canonical_iso_sign(0, {2, 0}, 1, {1, 1}).negative());  // 2*1 + 0*1 = 2
    // the target shift never enters the exponent
    CHECK(canonical_iso_sign(5, {1, 1}, 1, {1, 0}).parity ==
          canonical_iso_sign(0, {1, 1}, 1, {1, 0}).parity);
}

TEST_CASE("suspension sign: n*i plus weighted tail degrees") {
    // exponent = n*i + sum_{l=2..n} (l-1)*deg(f_l), degrees in path order
    CHECK_FALSE(suspension_sign(2, 0, {0, 0}).negative());
    CHECK(suspension_sign(1, 1, {0}).negative());            // 1*1
    CHECK(suspension_sign(2, 0, {0, 1}).negative());         // 1*1
    CHECK(suspension_sign(3, 1, {1, 0, 1}).negative());      // 3 + 0 + 2 = 5
    CHECK_FALSE(suspension_sign(3, 1, {0, 1, 0}).negative());  // 3 + 1 = 4
}

TEST_CASE("sign exponents compose additively") {
    CHECK((SignExponent::of(3) + SignExponent::of(5)).parity == 0);
    CHECK((SignExponent::of(-1)).negative());
    FieldSpec f = FieldSpec::rational();
    CHECK(SignExponent::of(1).scalar(f) == -Scalar::one(f));
    CHECK(SignExponent::of(2).apply(Scalar::from_int(f, 5)) == Scalar::from_int(f, 5));
    CHECK(SignExponent::of(1).apply(Scalar::from_int(f, 5)) == Scalar::from_int(f, -5));
}

TEST_CASE("sign fault hook flattens the koszul sign and restores cleanly") {
    REQUIRE_FALSE(fault::koszul_signs_corrupted());
    CHECK(koszul_swap_sign(1, 1).negative());
    fault::corrupt_koszul_signs(true);
    CHECK(fault::koszul_signs_corrupted());
    CHECK_FALSE(koszul_swap_sign(1, 1).negative());
    CHECK_FALSE(koszul_swap_sign(3, 5).negative());
    fault::corrupt_koszul_signs(false);
    CHECK_FALSE(fault::koszul_signs_corrupted());
    CHECK(koszul_swap_sign(1, 1).negative());
}
