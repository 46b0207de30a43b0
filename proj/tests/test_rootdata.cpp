#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "covdual/builders.hpp"
#include "covdual/dynkin.hpp"
#include "covdual/isomorphism.hpp"
#include "covdual/root_datum.hpp"

using namespace covdual;

namespace {

size_t expected_root_count(char fam, size_t l) {
    switch (fam) {
        case 'A': return l * (l + 1);
        case 'B':
        case 'C': return 2 * l * l;
        case 'D': return 2 * l * (l - 1);
        case 'E': return l == 6 ? 72 : (l == 7 ? 126 : 240);
        case 'F': return 48;
        case 'G': return 12;
    }
    return 0;
}

}  // namespace

TEST_CASE("SL2 standard datum validates") {
    RootDatum sl2 = build_by_name("SL2");
    CHECK(sl2.rank == 1);
    CHECK(sl2.roots.size() == 2);
    CHECK(validate(sl2).empty());
    CHECK(pairing(sl2.simple_root(0), sl2.simple_coroot(0)) == 2);
    // coroot is the basis vector, root is (2)
    CHECK(sl2.simple_coroot(0) == IntVec{Int(1)});
    CHECK(sl2.simple_root(0) == IntVec{Int(2)});
}

TEST_CASE("validate reports pairing violation") {
    RootDatum bad;
    bad.rank = 1;
    bad.roots = {{Int(1)}, {Int(-1)}};
    bad.coroots = {{Int(1)}, {Int(-1)}};
    bad.simple = {0};
    auto v = validate(bad);
    bool found = false;
    for (const auto &s : v)
        if (s.rfind("pairing-not-2", 0) == 0) found = true;
    CHECK(found);
}

TEST_CASE("weyl closure sizes match the classical counts") {
    CHECK(build_simply_connected('A', 2).roots.size() == 6);
    CHECK(build_by_name("G2").roots.size() == 12);
    CHECK(build_by_name("F4").roots.size() == 48);
    CHECK(build_by_name("E6sc").roots.size() == 72);
    CHECK(build_by_name("E7sc").roots.size() == 126);
    CHECK(build_by_name("E8").roots.size() == 240);
    // closure of a non-finite system hits the bound
    std::vector<IntVec> r{{Int(2), Int(-2)}, {Int(-2), Int(2)}};
    std::vector<IntVec> rv{{Int(1), Int(-1)}, {Int(-1), Int(1)}};
    CHECK_THROWS_AS((void)weyl_closure(r, rv, 100), std::domain_error);
}

TEST_CASE("every catalog datum validates with the right root count") {
    for (const auto &name : catalog_names()) {
        INFO("builder ", name);
        RootDatum rd = build_by_name(name);
        CHECK(validate(rd).empty());
        DynkinType t = classify_datum(rd);
        if (t.components.size() == 1) {
            const auto &c = t.components[0];
            CHECK(rd.roots.size() == expected_root_count(c.family, c.rank));
        }
    }
}

TEST_CASE("dynkin classification of explicit matrices") {
    CHECK(classify_dynkin(IntMatrix{{2, -1}, {-1, 2}}).to_string() == "A2");
    // rank-2 double edge canonicalizes to B2 either way
    CHECK(classify_dynkin(IntMatrix{{2, -1}, {-2, 2}}).to_string() == "B2");
    CHECK(classify_dynkin(IntMatrix{{2, -2}, {-1, 2}}).to_string() == "B2");
    CHECK(classify_dynkin(IntMatrix{{2, -1}, {-3, 2}}).to_string() == "G2");
    // D3 comes out as A3
    CHECK(classify_dynkin(cartan_of_type('D', 3)).to_string() == "A3");
    // direct sums
    RootDatum prod = datum_product(build_by_name("SL3"), build_by_name("Sp4"));
    CHECK(classify_datum(prod).to_string() == "A2+B2");  // rank-2 C canonicalizes to B2
    CHECK_THROWS_AS((void)classify_dynkin(IntMatrix{{2, -4}, {-1, 2}}), std::domain_error);
    // affine A2: a 3-cycle
    CHECK_THROWS_AS((void)classify_dynkin(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                    std::domain_error);
}

TEST_CASE("exhaustive rank-2 cartan enumeration agrees with the classifier") {
    // all finite-type rank-2 matrices [[2,a],[b,2]] with ab in {0,1,2,3}
    for (long a = -3; a <= 0; ++a)
        for (long b = -3; b <= 0; ++b) {
            IntMatrix c{{2, a}, {b, 2}};
            long w = a * b;
            bool finite = (w < 4) && ((a == 0) == (b == 0));
            if (!finite) {
                CHECK_THROWS((void)classify_dynkin(c));
                continue;
            }
            auto t = classify_dynkin(c);
            if (w == 0) CHECK(t.to_string() == "A1+A1");
            if (w == 1) CHECK(t.to_string() == "A2");
            if (w == 2) CHECK(t.to_string() == "B2");
            if (w == 3) CHECK(t.to_string() == "G2");
        }
}

TEST_CASE("classification round-trips the simply connected catalog") {
    const std::pair<char, size_t> cases[] = {{'A', 1}, {'A', 5}, {'B', 3}, {'B', 8}, {'C', 3},
                                             {'C', 5}, {'D', 4}, {'D', 9}, {'E', 6}, {'E', 7},
                                             {'E', 8}, {'F', 4}, {'G', 2}};
    for (auto [fam, rank] : cases) {
        RootDatum rd = build_simply_connected(fam, rank);
        DynkinType t = classify_datum(rd);
        REQUIRE(t.components.size() == 1);
        CHECK(t.components[0].family == fam);
        CHECK(t.components[0].rank == rank);
        CHECK(t.torus_rank == 0);
    }
}

TEST_CASE("center invariants match the classical centers") {
    // X / root-span of the group itself
    CHECK(center_invariants(build_by_name("Spin7")).to_string() == "(2)");
    CHECK(center_invariants(build_by_name("Spin9")).to_string() == "(2)");
    CHECK(center_invariants(build_by_name("Spin8")).to_string() == "(2,2)");
    CHECK(center_invariants(build_by_name("Spin16")).to_string() == "(2,2)");
    CHECK(center_invariants(build_by_name("Spin10")).to_string() == "(4)");
    CHECK(center_invariants(build_by_name("Spin14")).to_string() == "(4)");
    CHECK(center_invariants(build_by_name("E6sc")).to_string() == "(3)");
    CHECK(center_invariants(build_by_name("E7sc")).to_string() == "(2)");
    CHECK(center_invariants(build_by_name("E8")).trivial());
    CHECK(center_invariants(build_by_name("F4")).trivial());
    CHECK(center_invariants(build_by_name("G2")).trivial());
    CHECK(center_invariants(build_by_name("SL4")).to_string() == "(4)");
    CHECK(center_invariants(build_by_name("Sp6")).to_string() == "(2)");
    // adjoint groups have trivial center
    CHECK(center_invariants(build_by_name("PGL5")).trivial());
    CHECK(center_invariants(build_by_name("PGO12")).trivial());
    // GL_2: connected center of rank 1
    auto gl2 = center_invariants(build_by_name("GL2"));
    CHECK(gl2.factors.empty());
    CHECK(gl2.free_rank == 1);
}

TEST_CASE("fundamental group (Y / coroot span)") {
    // SL_2: Y = Z alpha_vee, quotient trivial
    CHECK(fundamental_group(build_by_name("SL2")).trivial());
    CHECK(fundamental_group(build_by_name("PGL2")).to_string() == "(2)");
    auto gl2 = fundamental_group(build_by_name("GL2"));
    CHECK(gl2.factors.empty());
    CHECK(gl2.free_rank == 1);
    CHECK(fundamental_group(build_by_name("SO10")).to_string() == "(2)");
    CHECK(fundamental_group(build_by_name("HSpin12")).to_string() == "(2)");
}

TEST_CASE("GSp datum uses the paper basis") {
    RootDatum gsp4 = build_by_name("GSp4");  // rank 3, basis e_0, e_1, e_2
    CHECK(gsp4.rank == 3);
    CHECK(validate(gsp4).empty());
    // alpha_r_vee = e_r, alpha_r = 2 f_r - f_0
    CHECK(gsp4.simple_coroot(1) == IntVec{Int(0), Int(0), Int(1)});
    CHECK(gsp4.simple_root(1) == IntVec{Int(-1), Int(0), Int(2)});
    CHECK(classify_datum(gsp4).to_string() == "B2+T1");  // rank-2 C canonicalizes to B2
}

TEST_CASE("levi subdatum") {
    RootDatum sp6 = build_by_name("Sp6");
    // full subset returns the datum itself (same roots)
    RootDatum full = levi_subdatum(sp6, {0, 1, 2});
    CHECK(full.roots.size() == sp6.roots.size());
    // empty subset is toral
    RootDatum toral = levi_subdatum(sp6, {});
    CHECK(toral.roots.empty());
    CHECK(toral.rank == 3);
    // {alpha_1, alpha_2} is a type-A2 Levi with 6 roots
    RootDatum levi = levi_subdatum(sp6, {0, 1});
    CHECK(levi.roots.size() == 6);
    CHECK(validate(levi).empty());
    auto t = classify_datum(levi);
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0].family == 'A');
    CHECK(t.components[0].rank == 2);
    // Levi of a Levi = Levi of the intersection
    RootDatum l1 = levi_subdatum(levi, {0});
    RootDatum l2 = levi_subdatum(sp6, {0});
    CHECK(l1.roots == l2.roots);
    CHECK_THROWS((void)levi_subdatum(sp6, {7}));
}

TEST_CASE("dualize is involutive and swaps the sides") {
    for (const auto &name : {"SL2", "Sp6", "GSp4", "Spin8", "GL3"}) {
        RootDatum rd = build_by_name(name);
        RootDatum dd = dualize_datum(dualize_datum(rd));
        CHECK(dd.roots == rd.roots);
        CHECK(dd.coroots == rd.coroots);
        CHECK(validate(dualize_datum(rd)).empty());
    }
    // dual of SL_2 is the PGL_2-shaped datum
    RootDatum d = dualize_datum(build_by_name("SL2"));
    CHECK(root_datum_isomorphic(d, build_by_name("PGL2")));
}

TEST_CASE("root datum isomorphism") {
    RootDatum sl2 = build_by_name("SL2");
    CHECK(root_datum_isomorphic(sl2, sl2));
    CHECK_FALSE(root_datum_isomorphic(sl2, build_by_name("PGL2")));
    CHECK(root_datum_isomorphic(build_by_name("GL2"), build_by_name("GL2")));
    // Sp4 = Spin5
    CHECK(root_datum_isomorphic(build_by_name("Sp4"), build_by_name("Spin5")));
    CHECK(root_datum_isomorphic(build_by_name("SO6"), build_by_name("SL4")) == false);
    // SL4 = Spin6
    CHECK(root_datum_isomorphic(build_by_name("SL4"), build_by_name("Spin6")));
    // GSp4 is self-dual
    CHECK(root_datum_isomorphic(dualize_datum(build_by_name("GSp4")), build_by_name("GSp4")));
    // symmetric and reflexive on a catalog sample
    for (const auto &name : {"SL5", "Spin11", "HSpin8", "GSp6"}) {
        RootDatum rd = build_by_name(name);
        CHECK(root_datum_isomorphic(rd, rd));
    }
}

TEST_CASE("isogeny quotient builders place the lattice correctly") {
    // SO_{2l} sits between Spin and PGO
    RootDatum so10 = build_by_name("SO10");
    CHECK(validate(so10).empty());
    CHECK(classify_datum(so10).to_string() == "D5");
    CHECK(center_invariants(so10).to_string() == "(2)");
    RootDatum hs12 = build_by_name("HSpin12");
    CHECK(validate(hs12).empty());
    CHECK(center_invariants(hs12).to_string() == "(2)");
    CHECK_FALSE(root_datum_isomorphic(hs12, build_by_name("SO12")));
    CHECK_THROWS((void)build_by_name("HSpin10"));  // odd half-rank has no half-spin quotient
}

TEST_CASE("cartan symmetrizer normalizes short coroots to 1") {
    // B3: short coroot vectors are the first l-1, symmetrizer (1,1,2)
    auto db = cartan_symmetrizer(cartan_of_type('B', 3));
    CHECK(db == IntVec{Int(1), Int(1), Int(2)});
    auto dc = cartan_symmetrizer(cartan_of_type('C', 3));
    CHECK(dc == IntVec{Int(2), Int(2), Int(1)});
    auto dg = cartan_symmetrizer(cartan_of_type('G', 2));
    CHECK(dg == IntVec{Int(3), Int(1)});
    auto df = cartan_symmetrizer(cartan_of_type('F', 4));
    CHECK(df == IntVec{Int(1), Int(1), Int(2), Int(2)});
    auto da = cartan_symmetrizer(cartan_of_type('A', 4));
    CHECK(da == IntVec(4, Int(1)));
}
