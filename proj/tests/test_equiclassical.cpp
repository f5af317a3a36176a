#include <catch_amalgamated.hpp>

#include "testutil.hpp"

using namespace curveclass;

namespace {
ClassTriple T(long d, long g, long c) { return ClassTriple{Integer(d), Integer(g), Integer(c)}; }
DeltaKappa DK(long d, long de, long ka) { return DeltaKappa{Integer(d), Integer(de), Integer(ka)}; }
NodalCuspidal NC(long d, long n, long k) { return NodalCuspidal{Integer(d), Integer(n), Integer(k)}; }
}  // namespace

TEST_CASE("triple to delta/kappa conversions") {
    CHECK(to_delta_kappa(T(3, 0, 4)) == DK(3, 1, 2));
    CHECK(to_delta_kappa(T(3, 1, 6)) == DK(3, 0, 0));
    CHECK(to_delta_kappa(T(7, 0, 6)) == DK(7, 15, 36));
    CHECK_THROWS_AS(to_delta_kappa(T(3, 5, 1)), NotAdmissible);   // delta < 0
    CHECK_THROWS_AS(to_delta_kappa(T(3, 0, 9)), NotAdmissible);   // kappa < 0
}

TEST_CASE("nodal-cuspidal conversions") {
    CHECK(from_nodal_cuspidal(NC(3, 1, 0)) == DK(3, 1, 2));
    CHECK(from_nodal_cuspidal(NC(3, 0, 1)) == DK(3, 1, 3));
    CHECK(from_nodal_cuspidal(NC(7, 9, 6)) == DK(7, 15, 36));
    CHECK(virtual_counts(DK(3, 1, 3)) == NC(3, 0, 1));
    CHECK(virtual_counts(DK(7, 15, 36)) == NC(7, 9, 6));
    CHECK(virtual_counts(DK(12, 25, 75)) == NC(12, 0, 25));
    CHECK_THROWS_AS(virtual_counts(DK(3, 0, 2)), NotAdmissible);
}

TEST_CASE("duality on triples") {
    CHECK(dual_triple(T(3, 0, 3)) == T(3, 0, 3));
    CHECK(dual_triple(T(3, 0, 4)) == T(4, 0, 3));
    // nodal cubic <-> tricuspidal quartic
    CHECK(to_delta_kappa(T(4, 0, 3)) == DK(4, 3, 9));
    CHECK(virtual_counts(DK(4, 3, 9)) == NC(4, 0, 3));
    // dual of (7,0,6) and its virtual counts
    CHECK(dual_triple(T(7, 0, 6)) == T(6, 0, 7));
    CHECK(virtual_counts(to_delta_kappa(T(6, 0, 7))) == NC(6, 7, 3));
}

TEST_CASE("admissibility") {
    CHECK(is_admissible(DK(3, 1, 3)));
    CHECK_FALSE(is_admissible(DK(3, 1, 4)));   // kappa > 3 delta
    CHECK_FALSE(is_admissible(DK(5, 7, 14)));  // delta > (d-1)(d-2)/2
    CHECK(is_admissible(DK(3, 0, 0)));         // smooth
    CHECK_FALSE(is_admissible(DK(3, -1, 0)));
}

TEST_CASE("expected dimension") {
    CHECK(expected_dim(T(3, 0, 4)) == 8);
    CHECK(expected_dim(T(3, 0, 4)) == 3 * 3 + 0 - 1);  // Severi dimension 3d + g - 1
    CHECK(expected_dim(T(3, 0, 3)) == 7);
    CHECK(expected_dim(T(7, 0, 6)) == 14);
}

TEST_CASE("gamma invariant of an equiclassical point") {
    CHECK(gamma_point(Integer(2), Integer(1)) == Rational(4));   // node
    CHECK(gamma_point(Integer(3), Integer(1)) == Rational(9));   // cusp
    const Rational g = gamma_point(Integer(36), Integer(15));
    CHECK(g == Rational(Integer(432), Integer(5)));
    CHECK(g <= Rational(5 * 36 - 6 * 15));
    CHECK_THROWS_AS(gamma_point(Integer(2), Integer(0)), NotAdmissible);
    CHECK_THROWS_AS(gamma_point(Integer(7), Integer(2)), NotAdmissible);  // kappa > 3 delta
}

TEST_CASE("gamma inequality kappa^2/delta <= 5 kappa - 6 delta on the admissible cone") {
    for (long delta = 1; delta <= 40; ++delta)
        for (long kappa = 2 * delta; kappa <= 3 * delta; ++kappa) {
            // cleared form: kappa^2 <= delta (5 kappa - 6 delta)
            CHECK(Integer(kappa) * kappa <= Integer(delta) * (5 * kappa - 6 * delta));
        }
}

TEST_CASE("round trips between the three parameterizations") {
    for (long d = 1; d <= 12; ++d) {
        const Integer gmax = max_delta(Integer(d));
        for (Integer delta(0); delta <= gmax; ++delta)
            for (Integer kappa = 2 * delta; kappa <= 3 * delta; ++kappa) {
                const DeltaKappa dk{Integer(d), delta, kappa};
                CHECK(to_delta_kappa(triple_of(dk)) == dk);
                CHECK(from_nodal_cuspidal(virtual_counts(dk)) == dk);
                const ClassTriple t = triple_of(dk);
                CHECK(dual_triple(dual_triple(t)) == t);
                CHECK(expected_dim(t) == expected_dim(dual_triple(t)));
            }
    }
}

TEST_CASE("linear identities linking the parameterizations") {
    for (long d = 1; d <= 30; d += 3)
        for (long g = 0; g <= 20; g += 4)
            for (long c = 0; c <= 40; c += 5) {
                const ClassTriple t = T(d, g, c);
                const DeltaKappa dk = delta_kappa_of(t);
                CHECK(2 * t.d - 2 - t.c + 2 * t.g == dk.kappa - 2 * dk.delta);
                CHECK(2 * (t.c - 3 * t.g) + t.d * t.d - 7 * t.d + 6 == 2 * (3 * dk.delta - dk.kappa));
            }
}

TEST_CASE("incidence defects are nonnegative on admissible families") {
    for (long d = 1; d <= 12; ++d) {
        const Integer gmax = max_delta(Integer(d));
        for (Integer delta(0); delta <= gmax; ++delta)
            for (Integer kappa = 2 * delta; kappa <= 3 * delta; ++kappa) {
                const ClassTriple t = triple_of(DeltaKappa{Integer(d), delta, kappa});
                CHECK(2 * t.d - 2 - t.c + 2 * t.g >= 0);
                CHECK(2 * (t.c - 3 * t.g) + t.d * t.d - 7 * t.d + 6 >= 0);
            }
    }
}
