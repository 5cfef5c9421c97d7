#include <doctest.h>

#include "yangcheck/matrix_model.hpp"

using namespace yangcheck;

namespace {

LieAlgebra build_tagged(const std::string& tags, int m, int n) {
    return build_lie_algebra(m, n, BorelChoice::from_tag_string(tags, m, n));
}

RatMat realize(const LieAlgebra& la, const BracketRow& row) {
    int N = 2 * la.m + 1 + 2 * la.n;
    RatMat out(N, N);
    for (const auto& [idx, c] : row) out = out + la.basis[idx].mat.scaled(c);
    return out;
}

}  // namespace

TEST_CASE("algebra dimensions across the small cases") {
    CHECK(build_tagged("de", 1, 1).dim() == 12);
    CHECK(build_tagged("d", 0, 1).dim() == 5);
    CHECK(build_tagged("dee", 2, 1).dim() == 23);
    CHECK(build_tagged("dde", 1, 2).dim() == 25);
    std::size_t odd = 0;
    LieAlgebra la = build_tagged("ed", 1, 1);
    for (const auto& b : la.basis) odd += static_cast<std::size_t>(b.parity);
    CHECK(odd == 6);
    CHECK(la.dim() - odd == 6);
}

TEST_CASE("form calibration is one half of the supertrace") {
    for (const char* tags : {"de", "ed"}) {
        LieAlgebra la = build_tagged(tags, 1, 1);
        CHECK(la.kappa == Rational(1, 2));
    }
    CHECK(build_tagged("d", 0, 1).kappa == Rational(1, 2));
    CHECK(build_tagged("ede", 2, 1).kappa == Rational(1, 2));
    CHECK(build_tagged("dde", 1, 2).kappa == Rational(1, 2));
}

TEST_CASE("form matches the Cartan matrix and root pairings are unital") {
    LieAlgebra la = build_tagged("de", 1, 1);
    int rank = static_cast<int>(la.rank());
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            CHECK(la.pairing(la.hpos(i), la.hpos(j)) ==
                  Rational(static_cast<long>(la.cartan.at(i, j))));
    for (std::size_t k = 0; k < la.positive_count(); ++k) {
        CHECK(la.pairing(la.epos(k), la.fpos(k)) == 1);
        int par = la.roots.positive[k].parity;
        CHECK(la.pairing(la.fpos(k), la.epos(k)) == (par ? Rational(-1) : Rational(1)));
    }
    // distinct root spaces are orthogonal
    CHECK(la.pairing(la.epos(0), la.fpos(1)) == 0);
    CHECK(la.pairing(la.epos(0), la.epos(3)) == 0);
    CHECK(la.pairing(la.hpos(1), la.epos(0)) == 0);
}

TEST_CASE("bracket of paired root vectors is the weight coroot") {
    for (const char* tags : {"de", "ed"}) {
        LieAlgebra la = build_tagged(tags, 1, 1);
        for (std::size_t k = 0; k < la.positive_count(); ++k) {
            RatMat got = realize(la, la.bracket(la.epos(k), la.fpos(k)));
            // the coroot expands over the Cartan with the root coefficients
            int N = 2 * la.m + 1 + 2 * la.n;
            RatMat want(N, N);
            for (std::size_t i = 0; i < la.rank(); ++i)
                want = want +
                       la.basis[la.hpos(static_cast<int>(i) + 1)].mat.scaled(Rational(
                           static_cast<long>(la.roots.positive[k].coeffs[i])));
            CHECK(got == want);
        }
    }
}

TEST_CASE("structure constants close and satisfy super antisymmetry and Jacobi") {
    LieAlgebra la = build_tagged("de", 1, 1);
    auto mat = [&](std::size_t i) { return la.basis[i].mat; };
    auto par = [&](std::size_t i) { return la.basis[i].parity; };
    for (std::size_t i = 0; i < la.dim(); ++i)
        for (std::size_t j = 0; j < la.dim(); ++j) {
            RatMat direct = super_bracket(mat(i), mat(j), par(i), par(j));
            CHECK(realize(la, la.bracket(i, j)) == direct);
            RatMat flipped = super_bracket(mat(j), mat(i), par(j), par(i));
            CHECK(direct == ((par(i) & par(j)) ? flipped : flipped.scaled(-1)));
        }
    // graded Jacobi on every basis triple
    for (std::size_t x = 0; x < la.dim(); ++x)
        for (std::size_t y = 0; y < la.dim(); ++y)
            for (std::size_t z = 0; z < la.dim(); ++z) {
                RatMat lhs = super_bracket(mat(x), super_bracket(mat(y), mat(z), par(y), par(z)),
                                           par(x), par(y) ^ par(z));
                RatMat r1 = super_bracket(super_bracket(mat(x), mat(y), par(x), par(y)), mat(z),
                                          par(x) ^ par(y), par(z));
                RatMat r2 = super_bracket(mat(y), super_bracket(mat(x), mat(z), par(x), par(z)),
                                          par(y), par(x) ^ par(z));
                RatMat rhs = (par(x) & par(y)) ? r1 - r2 : r1 + r2;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("supertrace vanishes on every basis element") {
    LieAlgebra la = build_tagged("ed", 1, 1);
    for (const auto& b : la.basis) CHECK(supertrace(b.mat, 2 * la.m + 1) == 0);
}

TEST_CASE("defining relations hold in every Borel of the rank-2 cases") {
    for (const char* tags : {"de", "ed"}) {
        SerreReport rep = verify_serre(build_tagged(tags, 1, 1));
        CHECK(rep.all_ok);
    }
    SerreReport rep = verify_serre(build_tagged("d", 0, 1));
    CHECK(rep.all_ok);
    CHECK(!rep.checks.empty());
}

TEST_CASE("defining relations hold in every Borel of B(2,1) and B(1,2)") {
    for (const auto& b : enumerate_borels(2, 1)) {
        SerreReport rep = verify_serre(build_lie_algebra(2, 1, b));
        CHECK(rep.all_ok);
    }
    for (const auto& b : enumerate_borels(1, 2)) {
        SerreReport rep = verify_serre(build_lie_algebra(1, 2, b));
        CHECK(rep.all_ok);
    }
}

TEST_CASE("serre sweep covers the expected families") {
    SerreReport rep = verify_serre(build_tagged("dee", 2, 1));
    auto has = [&](const std::string& name) {
        for (const auto& [check, ok] : rep.checks)
            if (check == name) return true;
        return false;
    };
    CHECK(has("cartan-commute[1,2]"));
    CHECK(has("pairing[2,3]"));
    CHECK(has("isotropic-square[1]"));
    CHECK(has("distant-commute[1,3]"));
    CHECK(has("adjacent-cubic[2,1]"));
    CHECK(has("adjacent-cubic[2,3]"));
    CHECK(has("terminal-quartic"));
    CHECK(has("mixed-quartic[2]"));
}

TEST_CASE("borel shape mismatch is rejected") {
    CHECK_THROWS_AS(build_lie_algebra(1, 1, BorelChoice::from_tag_string("dee", 2, 1)),
                    std::invalid_argument);
}
