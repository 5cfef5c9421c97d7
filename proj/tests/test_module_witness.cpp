#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "test_models.hpp"
#include "yangcheck/module_witness.hpp"

using namespace yangcheck;
using testutil::shared_model;

TEST_CASE("scalar matrices do exact shape-checked arithmetic") {
    ScalarMat a(2, 2);
    a.at(0, 0) = Scalar(1);
    a.at(0, 1) = Scalar::hbar();
    CHECK(a * ScalarMat::identity(2) == a);
    CHECK(ScalarMat::identity(2) * a == a);
    CHECK((a - a).is_zero());
    CHECK(a + a == a.scaled(Scalar(2)));
    CHECK((a * ScalarMat(2, 2)).is_zero());
    CHECK_FALSE(a.is_zero());
    ScalarMat wide(2, 3);
    CHECK_THROWS_AS(a + wide, std::invalid_argument);
    CHECK_THROWS_AS(wide * a, std::invalid_argument);
    CHECK(ScalarMat::identity(2).to_string() == "[[1, 0]; [0, 1]]");
}

TEST_CASE("level-one module extensions exist and verify every instance") {
    struct Row {
        const char* tags;
        int m, n, dim;
        std::size_t verified;
    };
    for (const Row& row : {Row{"d", 0, 1, 3, 13}, Row{"ed", 1, 1, 5, 62}, Row{"de", 1, 1, 5, 62}}) {
        const YangianModel& model = shared_model(row.tags, row.m, row.n);
        const auto w = ModuleWitness::build(model);
        REQUIRE(w.has_value());
        CHECK(w->dimension() == row.dim);
        CHECK(w->free_parameters() == 1);
        CHECK(w->trial_used() == rat(1));
        CHECK(w->verified_instances() == row.verified);
        for (int i = 1; i <= model.rank(); ++i) {
            for (int r = 0; r <= 1; ++r) {
                CHECK(w->has_action(model.xp(i, r)));
                CHECK(w->has_action(model.xm(i, r)));
                CHECK(w->has_action(model.h(i, r)));
            }
            CHECK_FALSE(w->has_action(model.xp(i, 2)));
        }
        CHECK_THROWS_AS(w->action(model.h(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(w->evaluate(Element::single(model.h(1, 2))), std::invalid_argument);
        // the level-zero Cartan acts with the Cartan matrix eigenvalues
        for (int i = 1; i <= model.rank(); ++i)
            for (int j = 1; j <= model.rank(); ++j) {
                const ScalarMat& hm = w->action(model.h(j, 0));
                const ScalarMat& em = w->action(model.xp(i, 0));
                CHECK(hm * em - em * hm == em.scaled(Scalar(static_cast<long>(model.c(j, i)))));
            }
    }
    // the free direction admits other deterministic choices
    const auto alt = ModuleWitness::build(shared_model("ed", 1, 1), {rat(5)});
    REQUIRE(alt.has_value());
    CHECK(alt->trial_used() == rat(5));
    // no trial values, no candidate
    CHECK_FALSE(ModuleWitness::build(shared_model("ed", 1, 1), {}).has_value());
}

TEST_CASE("the module annihilates every completed minimal rule") {
    const YangianModel& model = shared_model("ed", 1, 1);
    const auto w = ModuleWitness::build(model);
    REQUIRE(w.has_value());
    const RewriteSystem& sys = model.system(Family::Minimal);
    REQUIRE(!sys.rules().empty());
    for (const auto& rule : sys.rules()) {
        const Element e = Element::from_word(rule.lhs) - rule.rhs;
        CHECK(w->evaluate(e).is_zero());
    }
}

TEST_CASE("expanded full instances die in the module at every level") {
    for (auto [tags, mm, nn, count] : {std::tuple<const char*, int, int, int>{"d", 0, 1, 31},
                                       {"ed", 1, 1, 182},
                                       {"de", 1, 1, 192}}) {
        const YangianModel& model = shared_model(tags, mm, nn);
        const auto w = ModuleWitness::build(model);
        REQUIRE(w.has_value());
        int done = 0;
        for (const auto& inst : model.relation_instances(Family::Full)) {
            if (!inst.applicable) continue;
            INFO(tags << " " << inst.label);
            CHECK(w->evaluate(model.expand(inst.element)).is_zero());
            ++done;
        }
        CHECK(done == count);
    }
}

TEST_CASE("nonmembership of the black-diagonal failures is certified") {
    const YangianModel& ed = shared_model("ed", 1, 1);
    const auto w = ModuleWitness::build(ed);
    REQUIRE(w.has_value());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int r = 0; r <= 2; ++r)
                for (int s = 0; s <= 1; ++s)
                    for (int sg : {+1, -1}) {
                        const bool outside = i == 2 && j == 2 && r == 2;
                        INFO("i=" << i << " j=" << j << " r=" << r << " s=" << s << " sign=" << sg);
                        CHECK(w->certifies_nonmembership(ed.thx_identity(i, j, r, s, sg)) ==
                              outside);
                    }
    const ScalarMat img = w->evaluate(ed.thx_identity(2, 2, 2, 0, +1));
    CHECK(img.at(1, 4) == Scalar::of(rat(1, 2), 2));
    CHECK(img.at(3, 1) == Scalar::of(rat(-1, 2), 2));
    const ScalarMat img1 = w->evaluate(ed.thx_identity(2, 2, 2, 1, +1));
    CHECK(img1.at(1, 4) == Scalar::of(rat(1, 2), 2));
    CHECK(img1.at(3, 1) == Scalar::of(rat(-1, 2), 2) + Scalar::of(rat(-1, 4), 3));

    // with a white terminal every instance stays inside the ideal
    const YangianModel& de = shared_model("de", 1, 1);
    const auto wd = ModuleWitness::build(de);
    REQUIRE(wd.has_value());
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int r = 0; r <= 2; ++r)
                for (int s = 0; s <= 1; ++s)
                    for (int sg : {+1, -1})
                        CHECK_FALSE(wd->certifies_nonmembership(de.thx_identity(i, j, r, s, sg)));

    // the rank-one black terminal shows the same failure
    const YangianModel& d01 = shared_model("d", 0, 1);
    const auto w1 = ModuleWitness::build(d01);
    REQUIRE(w1.has_value());
    for (int r = 0; r <= 1; ++r)
        for (int s = 0; s <= 1; ++s)
            for (int sg : {+1, -1})
                CHECK_FALSE(w1->certifies_nonmembership(d01.thx_identity(1, 1, r, s, sg)));
    const ScalarMat i01 = w1->evaluate(d01.thx_identity(1, 1, 2, 0, +1));
    CHECK(i01.at(0, 2) == Scalar::of(rat(1, 2), 2));
    CHECK(i01.at(1, 0) == Scalar::of(rat(-1, 2), 2));
    CHECK(w1->certifies_nonmembership(d01.thx_identity(1, 1, 2, 1, -1)));
}

TEST_CASE("the failure pattern tracks black terminals at rank three") {
    for (auto [tags, mm, nn, black, verified] :
         {std::tuple<const char*, int, int, bool, std::size_t>{"dee", 2, 1, false, 145},
          {"ede", 2, 1, false, 145},
          {"eed", 2, 1, true, 145},
          {"dde", 1, 2, false, 145},
          {"ded", 1, 2, true, 145},
          {"edd", 1, 2, true, 143}}) {
        YangianModel model(BorelChoice::from_tag_string(tags, mm, nn), 4);
        const auto w = ModuleWitness::build(model);
        INFO(tags);
        REQUIRE(w.has_value());
        CHECK(w->dimension() == 7);
        CHECK(w->verified_instances() == verified);
        std::set<std::string> nonzero;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int s = 0; s <= 1; ++s)
                    for (int sg : {+1, -1})
                        if (w->certifies_nonmembership(model.thx_identity(i, j, 2, s, sg)))
                            nonzero.insert(std::to_string(i) + "," + std::to_string(j));
        if (black)
            CHECK(nonzero == std::set<std::string>{"3,3"});
        else
            CHECK(nonzero.empty());
    }
}
