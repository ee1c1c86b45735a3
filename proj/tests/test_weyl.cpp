#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <set>

#include "qsp/weyl.hpp"

using namespace qsp;

namespace {

WeylParams P2{2, 8};
WeylParams P3{3, 8};

WeylElt s(int i, const WeylParams& p) { return WeylElt::generator(i, p); }

WeylElt pw(const WeylElt& g, int k)
{
    WeylElt r = WeylElt::identity(g.params());
    for (int i = 0; i < k; ++i) r = r * g;
    return r;
}

// BFS over words; elements compared by their action on a fixed probe set, not by stored data.
std::map<std::vector<int>, int> bfs_distances(const WeylParams& p, int max_len)
{
    std::vector<std::vector<int>> probes;
    for (int k = 0; k < p.d; ++k) {
        std::vector<int> f(static_cast<std::size_t>(p.d), 0);
        f[static_cast<std::size_t>(k)] = 1;
        probes.push_back(f);
    }
    probes.push_back(std::vector<int>(static_cast<std::size_t>(p.d), 0));
    auto key = [&](const WeylElt& g) {
        std::vector<int> k;
        for (const auto& f : probes)
            for (int x : g.act(f)) k.push_back(x);
        return k;
    };
    std::map<std::vector<int>, int> dist;
    std::queue<std::pair<WeylElt, int>> todo;
    WeylElt e = WeylElt::identity(p);
    dist[key(e)] = 0;
    todo.push({e, 0});
    while (!todo.empty()) {
        auto [g, l] = todo.front();
        todo.pop();
        if (l == max_len) continue;
        for (int i = 0; i <= p.d; ++i) {
            WeylElt h = g * s(i, p);
            auto k = key(h);
            if (!dist.count(k)) {
                dist[k] = l + 1;
                todo.push({h, l + 1});
            }
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("generators act as affine reflections")
{
    CHECK(s(0, P2).act({3, 1}) == std::vector<int>{-3, 1});
    CHECK(s(1, P2).act({3, 1}) == std::vector<int>{1, 3});
    CHECK(s(2, P2).act({3, 1}) == std::vector<int>{3, 7});
    CHECK_THROWS(s(3, P2));
    WeylParams p1{1, 6};
    CHECK(s(1, p1).act({2}) == std::vector<int>{4});
}

TEST_CASE("multiplication matches composition of actions")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> gen(0, 3), coord(-20, 20);
    for (int it = 0; it < 200; ++it) {
        WeylElt g = WeylElt::identity(P3), h = WeylElt::identity(P3);
        for (int k = 0; k < 5; ++k) g = g * s(gen(rng), P3);
        for (int k = 0; k < 5; ++k) h = h * s(gen(rng), P3);
        std::vector<int> f{coord(rng), coord(rng), coord(rng)};
        CHECK((g * h).act(f) == h.act(g.act(f)));
        CHECK(g.inverse().act(g.act(f)) == f);
        CHECK((g * g.inverse()).is_identity());
    }
}

TEST_CASE("Coxeter presentation")
{
    for (const auto& p : {P2, P3}) {
        int d = p.d;
        WeylElt e = WeylElt::identity(p);
        for (int i = 0; i <= d; ++i) {
            CHECK(s(i, p) * s(i, p) == e);
            for (int j = i + 1; j <= d; ++j) {
                int m = 2;
                if (j == i + 1) m = (i == 0 || j == d) ? 4 : 3;
                WeylElt st = s(i, p) * s(j, p);
                CHECK(pw(st, m) == e);
                for (int k = 1; k < m; ++k) CHECK(pw(st, k) != e);
            }
        }
    }
    CHECK(WeylElt::from_word({0, 1, 0, 1}, P2) == WeylElt::from_word({1, 0, 1, 0}, P2));
}

TEST_CASE("length equals BFS distance")
{
    for (auto [p, L] : {std::pair{P2, 8}, std::pair{P3, 8}}) {
        auto dist = bfs_distances(p, L);
        auto levels = elements_by_length(p, L);
        std::size_t total = 0;
        for (int k = 0; k <= L; ++k) {
            for (const auto& g : levels[static_cast<std::size_t>(k)]) {
                CHECK(g.length() == k);
                std::vector<int> key;
                for (int a = 0; a < p.d; ++a) {
                    std::vector<int> f(static_cast<std::size_t>(p.d), 0);
                    f[static_cast<std::size_t>(a)] = 1;
                    for (int x : g.act(f)) key.push_back(x);
                }
                for (int x : g.act(std::vector<int>(static_cast<std::size_t>(p.d), 0))) key.push_back(x);
                CHECK(dist.at(key) == k);
                for (int i = 0; i <= p.d; ++i) CHECK(std::abs(g.times_gen(i).length() - k) == 1);
            }
            total += levels[static_cast<std::size_t>(k)].size();
        }
        CHECK(total == dist.size());
    }
    CHECK(WeylElt::from_word({0, 1, 0}, P2).length() == 3);
}

TEST_CASE("reduced words")
{
    CHECK(WeylElt::identity(P2).reduced_word().empty());
    CHECK(s(2, P2).reduced_word() == Word{2});
    auto levels = elements_by_length(P3, 6);
    for (const auto& lv : levels)
        for (const auto& g : lv) {
            Word w = g.reduced_word();
            CHECK(static_cast<int>(w.size()) == g.length());
            CHECK(WeylElt::from_word(w, P3) == g);
            CHECK(WeylElt::parse(g.str(), P3) == g);
        }
    // s_{a+1} ... s_{d-1} s_d s_{d-1} ... s_{a+k}
    WeylParams p{3, 8};
    for (int k = 1; k <= 3; ++k) {
        Word w;
        for (int i = 1; i <= 2; ++i) w.push_back(i);
        w.push_back(3);
        for (int i = 2; i >= k; --i) w.push_back(i);
        CHECK(WeylElt::from_word(w, p).length() == static_cast<int>(w.size()));
    }
}

TEST_CASE("faithfulness on a window")
{
    auto levels = elements_by_length(P2, 5);
    std::set<std::vector<int>> images;
    std::size_t count = 0;
    for (const auto& lv : levels)
        for (const auto& g : lv) {
            std::vector<int> img;
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b)
                    for (int x : g.act({a * 8 + 1, b * 8 + 2})) img.push_back(x);
            images.insert(img);
            ++count;
        }
    CHECK(images.size() == count);
}

TEST_CASE("parabolic subgroups")
{
    CHECK(parabolic_elements({}, P2).size() == 1);
    CHECK(parabolic_elements({1}, P2).size() == 2);
    CHECK(parabolic_elements({1, 2}, P2).size() == 8);
    CHECK(parabolic_elements({0, 1}, P2).size() == 8);
    CHECK(parabolic_elements({0, 2}, P2).size() == 4);
    CHECK(parabolic_elements({0, 1, 2}, P3).size() == 48);
    CHECK(parabolic_elements({1, 2}, P3).size() == 6);
    CHECK_THROWS(parabolic_elements({0, 1, 2}, P2));
}

TEST_CASE("minimal coset representatives")
{
    WeylParams p1{1, 6};
    CHECK(is_min_right(s(0, p1), {1}));
    CHECK(is_min_right(WeylElt::identity(P2), {0, 1}));
    CHECK(!is_min_right(s(1, P2), {1}));
    // each right coset W_J g has exactly one minimal element
    std::vector<int> J{1, 2};
    auto WJ = parabolic_elements(J, P2);
    auto levels = elements_by_length(P2, 4);
    for (const auto& lv : levels)
        for (const auto& g : lv) {
            int mins = 0;
            for (const auto& w : WJ) mins += is_min_right(w * g, J);
            CHECK(mins == 1);
        }
}

TEST_CASE("double cosets")
{
    WeylElt g = WeylElt::from_word({0, 2}, P2);
    auto dc = double_coset({}, g, {});
    CHECK(dc.size() == 1);
    CHECK(double_coset({1}, WeylElt::identity(P2), {}).size() == 2);
    WeylParams p1{1, 6};
    CHECK(double_coset({1}, WeylElt::identity(p1), {1}).size() == 2);
    auto dc2 = double_coset({1}, s(0, P2), {1});
    WeylElt m = min_double_rep({1}, dc2.back(), {1});
    CHECK(m == s(0, P2));
    CHECK(is_min_double(m, {1}, {1}));
    int mins = 0;
    for (const auto& x : dc2) mins += is_min_double(x, {1}, {1});
    CHECK(mins == 1);
}
