#include <doctest.h>

#include "test_util.hpp"
#include "yangcheck/rewriting.hpp"

using namespace yangcheck;

namespace {

Alphabet abc_alphabet() {
    Alphabet al;
    al.add("a", 0);
    al.add("b", 0);
    al.add("c", 0);
    return al;
}

Element w(std::initializer_list<LetterId> ids) { return Element::from_word(Word(ids)); }

// ba = ab + c, c central: one superposition, already confluent.
RewriteSystem heisenberg(const Alphabet& al, DegreeBound bound = {}) {
    RewriteSystem sys(al, bound);
    sys.add_relation(w({1, 0}) - w({0, 1}) - w({2}));
    sys.add_relation(w({2, 1}) - w({1, 2}));
    sys.add_relation(w({2, 0}) - w({0, 2}));
    return sys;
}

// ab = a, ba = b: completion must discover aa = a and bb = b.
RewriteSystem idempotent(const Alphabet& al, DegreeBound bound = {}) {
    RewriteSystem sys(al, bound);
    sys.add_relation(w({0, 1}) - w({0}));
    sys.add_relation(w({1, 0}) - w({1}));
    return sys;
}

// Reduction that deliberately disagrees with normalize() on strategy:
// rightmost position, highest rule id first.
Element rightmost_reduce(const RewriteSystem& sys, const Element& e) {
    const Alphabet& al = sys.alphabet();
    Element cur = e;
    for (;;) {
        bool changed = false;
        for (const auto& [word, c] : cur.terms()) {
            std::size_t best_pos = 0, best_rule = 0;
            bool found = false;
            for (std::size_t p = 0; p < word.size(); ++p)
                for (std::size_t r = 0; r < sys.rules().size(); ++r) {
                    const Word& lhs = sys.rules()[r].lhs;
                    if (lhs.size() > word.size() - p) continue;
                    if (!std::equal(lhs.begin(), lhs.end(), word.begin() + p)) continue;
                    if (!found || p > best_pos || (p == best_pos && r > best_rule)) {
                        best_pos = p;
                        best_rule = r;
                        found = true;
                    }
                }
            if (!found) continue;
            const RewriteRule& rule = sys.rules()[best_rule];
            Element repl = Element::from_word(Word(word.begin(), word.begin() + best_pos)) *
                           rule.rhs *
                           Element::from_word(Word(word.begin() + best_pos + rule.lhs.size(), word.end()));
            Element delta = repl.scaled(c) - Element::from_word(word, c);
            cur += delta;
            changed = true;
            break;  // the terms map changed; restart the scan
        }
        if (!changed) return cur;
        (void)al;
    }
}

}  // namespace

TEST_CASE("heisenberg system is confluent after one superposition") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = heisenberg(al);
    CHECK(sys.rules().size() == 3);
    auto st = sys.complete();
    CHECK(st.pairs_processed == 1);
    CHECK(st.rules_added == 0);
    CHECK(st.reached_fixpoint);
    CHECK(sys.fixpoint_certified());

    Element nf = sys.normalize(w({2, 1, 0}));
    CHECK(nf == w({0, 1, 2}) + w({2, 2}));
    CHECK(sys.test_zero(w({1, 0}) - w({0, 1}) - w({2})) == Verdict::Zero);
    CHECK(sys.test_zero(w({1, 0}) - w({0, 1})) == Verdict::NonZero);
}

TEST_CASE("completion discovers the idempotent rules") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = idempotent(al);
    CHECK(sys.rules().size() == 2);
    auto st = sys.complete();
    CHECK(st.rules_added == 2);
    CHECK(st.pairs_processed == 8);
    CHECK(st.reached_fixpoint);
    CHECK(sys.rules().size() == 4);
    CHECK(sys.rules()[2].lhs == Word{0, 0});
    CHECK(sys.rules()[3].lhs == Word{1, 1});

    CHECK(sys.normalize(w({0, 1, 1, 0})) == w({0}));
    CHECK(sys.test_zero(w({0, 1}) - w({1, 0})) == Verdict::NonZero);
    CHECK(sys.test_zero(w({0, 1, 0, 1}) - w({0})) == Verdict::Zero);
}

TEST_CASE("redundant relations do not create rules") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = heisenberg(al);
    std::size_t before = sys.rules().size();
    sys.add_relation(w({1, 0}) - w({0, 1}) - w({2}));
    sys.add_relation((w({1, 0}) - w({0, 1}) - w({2})).scaled(Scalar::hbar()));
    CHECK(sys.rules().size() == before);
    sys.add_relation(Element::zero());
    CHECK(sys.rules().size() == before);
}

TEST_CASE("a unit relation is rejected") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys(al);
    CHECK_THROWS_AS(sys.add_relation(Element::unit()), std::logic_error);

    // ab = 1 and b = 0 force 1 into the ideal during completion
    RewriteSystem bad(al);
    bad.add_relation(w({0, 1}) - Element::unit());
    bad.add_relation(w({1}));
    CHECK_THROWS_AS(bad.complete(), std::logic_error);
}

TEST_CASE("degree bound downgrades nonzero to inconclusive but keeps zero sound") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = idempotent(al, DegreeBound{2, 12});
    auto st = sys.complete();
    CHECK(st.pairs_processed == 0);
    CHECK(st.pairs_skipped == 2);
    CHECK(st.bound_hit);
    CHECK(!st.reached_fixpoint);
    CHECK(!sys.fixpoint_certified());
    CHECK(sys.test_zero(w({0, 1}) - w({0})) == Verdict::Zero);
    CHECK(sys.test_zero(w({0, 1}) - w({1, 0})) == Verdict::Inconclusive);
}

TEST_CASE("level cap gates superpositions") {
    Alphabet al;
    al.add("a", 0);
    al.add("b", 0);
    al.add("r", 0, 1);
    auto relations = [](RewriteSystem& sys) {
        sys.add_relation(Element::from_word({1, 0}) - Element::from_word({2}));
        sys.add_relation(Element::from_word({0, 2}) - Element::from_word({1}));
    };
    RewriteSystem capped(al, DegreeBound{6, 0});
    relations(capped);
    auto st0 = capped.complete();
    CHECK(st0.bound_hit);
    CHECK(st0.pairs_skipped >= 1);
    CHECK(capped.test_zero(Element::from_word({1, 0}) - Element::from_word({2})) == Verdict::Zero);

    RewriteSystem open(al, DegreeBound{6, 12});
    relations(open);
    auto st1 = open.complete();
    CHECK(st1.pairs_processed >= 1);
    CHECK(!st1.bound_hit);
}

TEST_CASE("zero budget reports a timeout and completion can resume") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = idempotent(al);
    auto st = sys.complete(std::chrono::milliseconds(0));
    CHECK(st.timed_out);
    CHECK(!st.reached_fixpoint);
    CHECK(sys.pending_pairs() > 0);
    auto st2 = sys.complete();
    CHECK(st2.reached_fixpoint);
    CHECK(sys.fixpoint_certified());
}

TEST_CASE("normalization is idempotent linear and strategy independent") {
    Alphabet al = abc_alphabet();
    RewriteSystem heis = heisenberg(al);
    heis.complete();
    RewriteSystem idem = idempotent(al);
    idem.complete();
    std::mt19937_64 rng(20250815);
    for (int it = 0; it < 80; ++it) {
        Element x = testutil::random_element(rng, 3, 4, 4);
        Element y = testutil::random_element(rng, 3, 4, 4);
        Scalar c = testutil::random_scalar(rng);
        for (RewriteSystem* sys : {&heis, &idem}) {
            Element nx = sys->normalize(x);
            CHECK(sys->normalize(nx) == nx);
            CHECK(sys->normalize(x + y) == nx + sys->normalize(y));
            CHECK(sys->normalize(x.scaled(c)) == nx.scaled(c));
            CHECK(rightmost_reduce(*sys, x) == nx);
        }
    }
}

TEST_CASE("random ideal members reduce to zero") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = heisenberg(al);
    sys.complete();
    std::vector<Element> rels = {w({1, 0}) - w({0, 1}) - w({2}), w({2, 1}) - w({1, 2}),
                                 w({2, 0}) - w({0, 2})};
    std::mt19937_64 rng(99);
    for (int it = 0; it < 60; ++it) {
        Element member;
        int pieces = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < pieces; ++k) {
            Element u = Element::from_word(testutil::random_word(rng, 3, 2),
                                           testutil::random_scalar(rng, false));
            Element v = Element::from_word(testutil::random_word(rng, 3, 2));
            member += u * rels[rng() % rels.size()] * v;
        }
        CHECK(sys.test_zero(member) == Verdict::Zero);
    }
}

TEST_CASE("reduction trace replays to the same normal form") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = heisenberg(al);
    sys.complete();
    std::mt19937_64 rng(123);
    for (int it = 0; it < 40; ++it) {
        Element x = testutil::random_element(rng, 3, 3, 4);
        std::vector<ReductionStep> trace;
        Element nf = sys.normalize(x, &trace);
        Element cur = x;
        for (const auto& step : trace) {
            const RewriteRule& rule = sys.rules()[step.rule];
            REQUIRE(step.pos + rule.lhs.size() <= step.from.size());
            REQUIRE(std::equal(rule.lhs.begin(), rule.lhs.end(), step.from.begin() + step.pos));
            Scalar c = cur.coeff(step.from);
            REQUIRE(!c.is_zero());
            Element repl =
                Element::from_word(Word(step.from.begin(), step.from.begin() + step.pos)) *
                rule.rhs *
                Element::from_word(Word(step.from.begin() + step.pos + rule.lhs.size(),
                                        step.from.end()));
            cur -= Element::from_word(step.from, c);
            cur += repl.scaled(c);
        }
        CHECK(cur == nf);
    }
}

TEST_CASE("rule dump lists oriented rules") {
    Alphabet al = abc_alphabet();
    RewriteSystem sys = heisenberg(al);
    std::string dump = sys.dump_rules();
    CHECK(dump.find("b a -> a b + c") != std::string::npos);
    CHECK(dump.find("c b -> b c") != std::string::npos);
}
