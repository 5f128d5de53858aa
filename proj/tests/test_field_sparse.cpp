#include "doctest.h"

#include "embrace/sparse.hpp"

using namespace embrace;

namespace {

Scalar q(long long num, long long den = 1) {
    return Scalar::from_rational(Rational(num, den));
}

Vec vec(const FieldSpec& f, std::initializer_list<long long> xs) {
    Vec v;
    for (long long x : xs) v.push_back(Scalar::from_int(f, x));
    return v;
}

}  // namespace

TEST_CASE("rational scalars: exact arithmetic and parsing") {
    FieldSpec f = FieldSpec::rational();
    CHECK(q(2, 3) + q(1, 6) == q(5, 6));
    CHECK(q(1, 2) * q(2, 3) == q(1, 3));
    CHECK(q(1) / q(-4) == q(-1, 4));
    CHECK((-q(3, 7)) == q(-3, 7));
    CHECK(q(5, 10) == q(1, 2));  // normalization
    CHECK(q(7, 4).inverse() == q(4, 7));
    CHECK(Scalar::zero(f).is_zero());
    CHECK(Scalar::one(f).is_one());
    CHECK_THROWS(q(1) / Scalar::zero(f));

    CHECK(Scalar::parse(f, "-7/4") == q(-7, 4));
    CHECK(Scalar::parse(f, "3") == q(3));
    CHECK(q(-7, 4).str() == "-7/4");
    CHECK(Scalar::parse(f, q(22, 7).str()) == q(22, 7));
}

TEST_CASE("prime-field scalars: residues, inverses, parsing") {
    FieldSpec f = FieldSpec::prime(7);
    Scalar three = Scalar::from_int(f, 3);
    Scalar five = Scalar::from_int(f, 5);
    CHECK(three * five == Scalar::one(f));  // 15 = 1 mod 7
    CHECK(three.inverse() == five);
    CHECK(Scalar::from_int(f, -1) == Scalar::from_int(f, 6));
    CHECK(Scalar::from_int(f, 10) == three);
    CHECK((five / three) == five * five);  // 5/3 = 5*5 = 25 = 4
    CHECK(Scalar::from_residue(f, 4) == five * five);

    CHECK(Scalar::parse(f, three.str()) == three);
    CHECK(Scalar::parse(f, "12") == five);
    CHECK_THROWS(FieldSpec::prime(6));  // not prime
}

TEST_CASE("from_triplets canonicalizes duplicates and zeros") {
    FieldSpec f = FieldSpec::rational();
    SparseMatrix m = SparseMatrix::from_triplets(
        f, 2, 2,
        {{0, 0, q(1)}, {0, 0, q(2)}, {1, 1, q(5)}, {1, 1, q(-5)}, {0, 1, Scalar::zero(f)}});
    CHECK(m.at(0, 0) == q(3));
    CHECK(m.at(1, 1).is_zero());
    CHECK(m.entries().size() == 1);
}

TEST_CASE("rref and rank over Q and GF(5)") {
    FieldSpec f = FieldSpec::rational();
    SparseMatrix m = SparseMatrix::from_triplets(f, 2, 2,
                                                 {{0, 0, q(1)}, {0, 1, q(2)},
                                                  {1, 0, q(2)}, {1, 1, q(4)}});
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{0});
    CHECK(r.matrix.at(0, 0).is_one());
    CHECK(r.matrix.at(0, 1) == q(2));
    CHECK(rank(m) == 1);

    FieldSpec g = FieldSpec::prime(5);
    SparseMatrix p = SparseMatrix::from_triplets(g, 2, 2,
                                                 {{0, 0, Scalar::from_int(g, 2)},
                                                  {0, 1, Scalar::from_int(g, 1)},
                                                  {1, 0, Scalar::from_int(g, 4)},
                                                  {1, 1, Scalar::from_int(g, 3)}});
    // second row = 2*first + (0,1): full rank mod 5
    CHECK(rank(p) == 2);
    RrefResult rp = rref(p);
    CHECK(rp.matrix.at(0, 0).is_one());
    CHECK(rp.matrix.at(0, 1).is_zero());
    CHECK(rp.matrix.at(1, 1).is_one());
}

TEST_CASE("solve: unique, underdetermined, inconsistent") {
    FieldSpec f = FieldSpec::rational();
    SparseMatrix m = SparseMatrix::from_triplets(f, 2, 2,
                                                 {{0, 0, q(1)}, {0, 1, q(1)}, {1, 1, q(1)}});
    auto x = solve(m, vec(f, {3, 1}));
    REQUIRE(x.has_value());
    CHECK(*x == vec(f, {2, 1}));
    CHECK(m.apply(*x) == vec(f, {3, 1}));

    SparseMatrix under = SparseMatrix::from_triplets(f, 1, 2, {{0, 0, q(1)}, {0, 1, q(1)}});
    auto y = solve(under, vec(f, {3}));
    REQUIRE(y.has_value());
    CHECK(*y == vec(f, {3, 0}));  // free variable pinned to zero

    SparseMatrix bad = SparseMatrix::from_triplets(f, 2, 2,
                                                   {{0, 0, q(1)}, {0, 1, q(1)},
                                                    {1, 0, q(2)}, {1, 1, q(2)}});
    CHECK_FALSE(solve(bad, vec(f, {1, 3})).has_value());
}

TEST_CASE("kernel basis and quotient dimension") {
    FieldSpec f = FieldSpec::rational();
    SparseMatrix m = SparseMatrix::from_triplets(f, 1, 2, {{0, 0, q(1)}, {0, 1, q(1)}});
    std::vector<Vec> k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == Vec{q(-1), q(1)});  // free coordinate normalized to 1
    CHECK(m.apply(k[0]) == Vec{Scalar::zero(f)});

    std::vector<Vec> span_a = {vec(f, {1, 0}), vec(f, {0, 1})};
    std::vector<Vec> span_b = {vec(f, {1, 1})};
    CHECK(quotient_dim(f, span_a, span_b, 2) == 1);
    CHECK(quotient_dim(f, span_a, span_a, 2) == 0);
    CHECK_THROWS(quotient_dim(f, span_b, span_a, 2));  // span_a ⊄ span_b
}
