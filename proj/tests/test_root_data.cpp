#include <doctest.h>

#include <random>
#include <set>

#include "yangcheck/rational.hpp"
#include "yangcheck/root_data.hpp"

using namespace yangcheck;

TEST_CASE("borel enumeration order and count") {
    auto b11 = enumerate_borels(1, 1);
    REQUIRE(b11.size() == 2);
    CHECK(b11[0].tag_string() == "de");
    CHECK(b11[1].tag_string() == "ed");

    auto b01 = enumerate_borels(0, 1);
    REQUIRE(b01.size() == 1);
    CHECK(b01[0].tag_string() == "d");

    auto b22 = enumerate_borels(2, 2);
    REQUIRE(b22.size() == 6);
    CHECK(b22[0].tag_string() == "ddee");
    CHECK(b22[5].tag_string() == "eedd");

    CHECK_THROWS_AS(enumerate_borels(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_borels(-1, 1), std::invalid_argument);
}

TEST_CASE("borel count matches the binomial oracle") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 1; m + n <= 5; ++n) {
            auto bs = enumerate_borels(m, n);
            Integer expect = binomial(static_cast<unsigned long>(m + n), static_cast<unsigned long>(n));
            CHECK(Integer(static_cast<long>(bs.size())) == expect);
            std::set<std::string> uniq;
            for (const auto& b : bs) uniq.insert(b.tag_string());
            CHECK(uniq.size() == bs.size());
            // lexicographic order
            for (size_t i = 1; i < bs.size(); ++i) CHECK(bs[i - 1].tag_string() < bs[i].tag_string());
        }
}

TEST_CASE("bilinear form values and properties") {
    int m = 2, n = 2;
    auto e1 = Weight::unit_eps(m, n, 1), e2 = Weight::unit_eps(m, n, 2);
    auto d1 = Weight::unit_del(m, n, 1), d2 = Weight::unit_del(m, n, 2);
    CHECK(bilinear_form(e1, e1) == 1);
    CHECK(bilinear_form(e1, e2) == 0);
    CHECK(bilinear_form(d1, d1) == -1);
    CHECK(bilinear_form(d1, d2) == 0);
    CHECK(bilinear_form(e1, d1) == 0);
    CHECK(bilinear_form(d1 - e1, d1 - e1) == 0);

    std::mt19937_64 rng(7);
    auto rand_weight = [&]() {
        Weight w = Weight::zero(m, n);
        for (auto& c : w.eps) c = static_cast<long long>(rng() % 7) - 3;
        for (auto& c : w.del) c = static_cast<long long>(rng() % 7) - 3;
        return w;
    };
    for (int it = 0; it < 100; ++it) {
        Weight a = rand_weight(), b = rand_weight(), c = rand_weight();
        CHECK(bilinear_form(a, b) == bilinear_form(b, a));
        CHECK(bilinear_form(a + b, c) == bilinear_form(a, c) + bilinear_form(b, c));
        CHECK(bilinear_form(a.scaled(3), b) == 3 * bilinear_form(a, b));
    }
    Weight w1 = Weight::zero(1, 1), w2 = Weight::zero(2, 1);
    CHECK_THROWS_AS(bilinear_form(w1, w2), std::invalid_argument);
}

TEST_CASE("simple root systems for the rank-2 and rank-1 cases") {
    auto de = simple_root_system(BorelChoice::from_tag_string("de", 1, 1));
    REQUIRE(de.rank() == 2);
    CHECK(de.roots[0] == Weight::unit_del(1, 1, 1) - Weight::unit_eps(1, 1, 1));
    CHECK(de.roots[1] == Weight::unit_eps(1, 1, 1));
    CHECK(de.parity == std::vector<int>{1, 0});
    CHECK(de.kind[0] == NodeKind::Grey);
    CHECK(de.kind[1] == NodeKind::White);

    auto ed = simple_root_system(BorelChoice::from_tag_string("ed", 1, 1));
    CHECK(ed.roots[0] == Weight::unit_eps(1, 1, 1) - Weight::unit_del(1, 1, 1));
    CHECK(ed.roots[1] == Weight::unit_del(1, 1, 1));
    CHECK(ed.parity == std::vector<int>{1, 1});
    CHECK(ed.kind[0] == NodeKind::Grey);
    CHECK(ed.kind[1] == NodeKind::Black);

    auto d = simple_root_system(BorelChoice::from_tag_string("d", 0, 1));
    REQUIRE(d.rank() == 1);
    CHECK(d.roots[0] == Weight::unit_del(0, 1, 1));
    CHECK(d.kind[0] == NodeKind::Black);
}

TEST_CASE("cartan matrices match the frozen values") {
    auto de = cartan_matrix(simple_root_system(BorelChoice::from_tag_string("de", 1, 1)));
    CHECK(de.entries == std::vector<std::vector<long long>>{{0, -1}, {-1, 1}});
    auto ed = cartan_matrix(simple_root_system(BorelChoice::from_tag_string("ed", 1, 1)));
    CHECK(ed.entries == std::vector<std::vector<long long>>{{0, 1}, {1, -1}});
    auto d = cartan_matrix(simple_root_system(BorelChoice::from_tag_string("d", 0, 1)));
    CHECK(d.entries == std::vector<std::vector<long long>>{{-1}});
    CHECK(d.at(1, 1) == -1);
}

TEST_CASE("cartan matrices are symmetric integers for all small cases") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; m + n <= 4; ++n)
            for (const auto& b : enumerate_borels(m, n)) {
                auto c = cartan_matrix(simple_root_system(b));
                for (int i = 0; i < c.rank(); ++i)
                    for (int j = 0; j < c.rank(); ++j) CHECK(c.entries[i][j] == c.entries[j][i]);
            }
}

TEST_CASE("positive roots for B(1,1) 'de'") {
    auto rs = positive_roots(simple_root_system(BorelChoice::from_tag_string("de", 1, 1)));
    REQUIRE(rs.positive.size() == 5);
    auto w = [&](int i) { return rs.positive[i].weight.render(); };
    CHECK(w(0) == "d1-e1");
    CHECK(w(1) == "e1");
    CHECK(w(2) == "d1");
    CHECK(w(3) == "d1+e1");
    CHECK(w(4) == "2d1");
    std::vector<long long> hts;
    for (const auto& p : rs.positive) hts.push_back(p.height);
    CHECK(hts == std::vector<long long>{1, 1, 2, 3, 4});
    CHECK(rs.positive[2].coeffs == std::vector<long long>{1, 1});
    CHECK(rs.positive[3].coeffs == std::vector<long long>{1, 2});
    CHECK(rs.positive[4].coeffs == std::vector<long long>{2, 2});
    CHECK(rs.positive[0].parity == 1);
    CHECK(rs.positive[1].parity == 0);
    CHECK(rs.positive[2].parity == 1);
    CHECK(rs.positive[3].parity == 1);
    CHECK(rs.positive[4].parity == 0);
    CHECK(rs.index_of(rs.positive[3].weight) == 3);
    CHECK(rs.index_of(Weight::unit_eps(1, 1, 1).scaled(2)) == -1);
}

TEST_CASE("positive roots for B(1,1) 'ed' and B(0,1)") {
    auto rs = positive_roots(simple_root_system(BorelChoice::from_tag_string("ed", 1, 1)));
    REQUIRE(rs.positive.size() == 5);
    auto w = [&](int i) { return rs.positive[i].weight.render(); };
    CHECK(w(0) == "-d1+e1");
    CHECK(w(1) == "d1");
    CHECK(w(2) == "e1");
    CHECK(w(3) == "2d1");
    CHECK(w(4) == "d1+e1");
    std::vector<long long> hts;
    for (const auto& p : rs.positive) hts.push_back(p.height);
    CHECK(hts == std::vector<long long>{1, 1, 2, 2, 3});

    auto d = positive_roots(simple_root_system(BorelChoice::from_tag_string("d", 0, 1)));
    REQUIRE(d.positive.size() == 2);
    CHECK(d.positive[0].weight.render() == "d1");
    CHECK(d.positive[1].weight.render() == "2d1");
    CHECK(d.positive[0].height == 1);
    CHECK(d.positive[1].height == 2);
}

TEST_CASE("positive root count is borel independent") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; m + n <= 4; ++n) {
            size_t expect = static_cast<size_t>((m + n) * (m + n) + n);
            for (const auto& b : enumerate_borels(m, n)) {
                auto rs = positive_roots(simple_root_system(b));
                CHECK(rs.positive.size() == expect);
                for (const auto& p : rs.positive) {
                    CHECK(p.height >= 1);
                    CHECK(rs.index_of(-p.weight) == -1);
                }
            }
        }
}

TEST_CASE("vertex classification") {
    auto de = simple_root_system(BorelChoice::from_tag_string("de", 1, 1));
    CHECK(classify_vertex(de, 1) == VertexType::TypeIIa);
    CHECK(classify_vertex(de, 2) == VertexType::None);
    auto ed = simple_root_system(BorelChoice::from_tag_string("ed", 1, 1));
    CHECK(classify_vertex(ed, 1) == VertexType::TypeIIb);
    CHECK_THROWS_AS(classify_vertex(ed, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify_vertex(ed, 3), std::invalid_argument);

    auto ede = simple_root_system(BorelChoice::from_tag_string("ede", 2, 1));
    CHECK(classify_vertex(ede, 1) == VertexType::None);  // grey but left edge
    CHECK(classify_vertex(ede, 2) == VertexType::TypeIIa);
    auto eed = simple_root_system(BorelChoice::from_tag_string("eed", 2, 1));
    CHECK(classify_vertex(eed, 1) == VertexType::None);  // white
    CHECK(classify_vertex(eed, 2) == VertexType::TypeIIb);
    auto dee = simple_root_system(BorelChoice::from_tag_string("dee", 2, 1));
    CHECK(classify_vertex(dee, 2) == VertexType::None);  // white middle

    // interior grey on a rank-4 chain
    auto dede = simple_root_system(BorelChoice::from_tag_string("dede", 2, 2));
    CHECK(classify_vertex(dede, 2) == VertexType::TypeI);
}

TEST_CASE("dynkin rendering") {
    auto dia = [](const std::string& tags, int m, int n) {
        return render_dynkin(simple_root_system(BorelChoice::from_tag_string(tags, m, n)));
    };
    CHECK(dia("de", 1, 1) == "X—O");
    CHECK(dia("ed", 1, 1) == "X—#");
    CHECK(dia("d", 0, 1) == "#");
    CHECK(dia("eed", 2, 1) == "O—X—#");
    CHECK(dia("dde", 1, 2) == "O—X—O");
}
