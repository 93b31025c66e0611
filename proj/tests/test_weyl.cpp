#include "covex/errors.hpp"
#include "covex/weyl.hpp"

#include <doctest.h>

#include <deque>
#include <map>
#include <set>

using namespace covex;

namespace {

const LieType kTypes[] = {LieType::A, LieType::B, LieType::C, LieType::D};

// Breadth-first search over right multiplication by simple reflections,
// written directly on windows.
std::map<std::vector<int>, int> cayley_distances(LieType t, int n) {
    auto step = [&](std::vector<int> v, int i) {
        if (i == 0) {
            if (t == LieType::D) {
                int a = v[0];
                v[0] = -v[1];
                v[1] = -a;
            } else {
                v[0] = -v[0];
            }
        } else {
            std::swap(v[i - 1], v[i]);
        }
        return v;
    };
    std::vector<int> gens;
    if (t == LieType::B || t == LieType::C || (t == LieType::D && n >= 2)) gens.push_back(0);
    for (int i = 1; i < n; ++i) gens.push_back(i);
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = i + 1;
    std::map<std::vector<int>, int> dist{{e, 0}};
    std::deque<std::vector<int>> queue{e};
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (int i : gens) {
            auto y = step(x, i);
            if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("window validation") {
    CHECK_NOTHROW(WeylElement(LieType::A, {3, 4, 1, 2}));
    CHECK_THROWS_AS(WeylElement(LieType::A, {3, -4, 1, 2}), ValidationError);
    CHECK_THROWS_AS(WeylElement(LieType::C, {1, 1, 2}), ValidationError);
    CHECK_THROWS_AS(WeylElement(LieType::C, {1, 4, 2}), ValidationError);
    CHECK_THROWS_AS(WeylElement(LieType::D, {-1, 2, 3}), ValidationError);
    CHECK_NOTHROW(WeylElement(LieType::D, {-1, -2, 3}));
    CHECK(parse_window(LieType::C, "5 -4 -3 6 -1 -2 7").str() == "5 -4 -3 6 -1 -2 7");
    CHECK(parse_window(LieType::C, "5,-4,-3,6,-1,-2,7") == parse_window(LieType::C, "5 -4 -3 6 -1 -2 7"));
    CHECK_THROWS_AS(parse_window(LieType::A, "1,x,2"), ValidationError);
}

TEST_CASE("length examples") {
    CHECK(length(WeylElement(LieType::A, {1, 2, 3, 4})) == 0);
    CHECK(length(WeylElement(LieType::A, {3, 4, 1, 2})) == 4);
    auto dist = cayley_distances(LieType::C, 2);
    CHECK(dist.size() == 8);
    CHECK(length(WeylElement(LieType::C, {-2, -1})) == dist[{-2, -1}]);
    CHECK(length(WeylElement(LieType::C, {-2, -1})) == 3);
    CHECK(length(WeylElement(LieType::C, {-1, -2})) == 4);
}

TEST_CASE("length equals Cayley graph distance") {
    for (LieType t : kTypes)
        for (int n = 1; n <= 4; ++n) {
            auto dist = cayley_distances(t, n);
            CHECK(dist.size() == group_order(t, n));
            for (const auto& [w, d] : dist) CHECK(length(WeylElement(t, w)) == d);
        }
}

TEST_CASE("longest element") {
    CHECK(longest_element(LieType::A, 4).str() == "4 3 2 1");
    CHECK(longest_element(LieType::C, 3).str() == "-1 -2 -3");
    CHECK(longest_element(LieType::D, 3).str() == "1 -2 -3");
    CHECK(longest_element(LieType::D, 4).str() == "-1 -2 -3 -4");
    CHECK_THROWS_AS(longest_element(LieType::A, 0), ValidationError);
    for (LieType t : kTypes)
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(n);
            auto dist = cayley_distances(t, n);
            int best = -1;
            std::vector<int> arg;
            for (const auto& [w, d] : dist)
                if (d > best) best = d, arg = w;
            CHECK(length(longest_element(t, n)) == root_count(t, n));
            CHECK(best == root_count(t, n));
            CHECK(longest_element(t, n).window() == arg);
        }
    CHECK(root_count(LieType::A, 4) == 6);
    CHECK(root_count(LieType::C, 4) == 16);
    CHECK(root_count(LieType::D, 4) == 12);
}

TEST_CASE("simple reflections") {
    auto e = identity(LieType::A, 3);
    CHECK(apply_simple(e, 1, Side::Right).str() == "2 1 3");
    CHECK(apply_simple(identity(LieType::C, 2), 0, Side::Right).str() == "-1 2");
    CHECK(apply_simple(identity(LieType::D, 2), 0, Side::Right).str() == "-2 -1");
    CHECK_THROWS_AS(apply_simple(e, 3, Side::Right), ValidationError);
    CHECK_THROWS_AS(apply_simple(e, 0, Side::Right), ValidationError);
    for (LieType t : kTypes)
        for (int n = 1; n <= 4; ++n)
            for (const auto& w : all_elements(t, n))
                for (int i : simple_indices(t, n))
                    for (Side side : {Side::Left, Side::Right}) {
                        auto x = apply_simple(w, i, side);
                        CHECK(apply_simple(x, i, side) == w);
                        CHECK(std::abs(length(x) - length(w)) == 1);
                        CHECK(is_descent(w, i, side) == (length(x) < length(w)));
                        if (side == Side::Left) {
                            auto s = apply_simple(identity(t, n), i, Side::Right);
                            CHECK(x == compose(s, w));
                        }
                    }
}

TEST_CASE("group operations") {
    for (LieType t : kTypes)
        for (int n = 1; n <= 3; ++n)
            for (const auto& w : all_elements(t, n)) {
                CHECK(compose(w, inverse(w)) == identity(t, n));
                CHECK(length(inverse(w)) == length(w));
            }
}

TEST_CASE("reduced words") {
    CHECK(reduced_word(identity(LieType::C, 3)).empty());
    CHECK(reduced_word(WeylElement(LieType::A, {2, 1, 3})) == std::vector<int>{1});
    for (LieType t : kTypes)
        for (int n = 1; n <= 4; ++n)
            for (const auto& w : all_elements(t, n)) {
                auto word = reduced_word(w);
                CHECK(static_cast<int>(word.size()) == length(w));
                WeylElement x = identity(t, n);
                for (int i : word) x = apply_simple(x, i, Side::Right);
                CHECK(x == w);
            }
}

TEST_CASE("Bruhat examples") {
    auto w = WeylElement(LieType::A, {3, 4, 1, 2});
    CHECK(bruhat_leq(identity(LieType::A, 4), w));
    CHECK(bruhat_leq(WeylElement(LieType::A, {2, 1, 4, 3}), w));
    CHECK_FALSE(bruhat_leq(WeylElement(LieType::A, {4, 3, 2, 1}), w));
    CHECK_THROWS_AS(bruhat_leq(w, identity(LieType::A, 3)), ValidationError);
}

TEST_CASE("Bruhat order agrees with the subword criterion") {
    for (LieType t : kTypes)
        for (int n = 1; n <= 4; ++n) {
            auto els = all_elements(t, n);
            for (const auto& w : els) {
                // Products of subwords of one reduced word of w.
                std::set<std::vector<int>> below{identity(t, n).window()};
                for (int i : reduced_word(w)) {
                    auto next = below;
                    for (const auto& x : below) next.insert(apply_simple(make_unchecked(t, x), i, Side::Right).window());
                    below.swap(next);
                }
                for (const auto& u : els) CHECK(bruhat_leq(u, w) == (below.count(u.window()) > 0));
            }
            if (n <= 3)
                for (const auto& u : els)
                    for (const auto& w : els) CHECK(bruhat_leq(u, w) == bruhat_leq_subword(u, w));
        }
}

TEST_CASE("Bruhat order is a partial order at rank 3") {
    for (LieType t : kTypes) {
        auto els = all_elements(t, 3);
        const size_t N = els.size();
        std::vector<std::vector<char>> le(N, std::vector<char>(N));
        for (size_t i = 0; i < N; ++i)
            for (size_t j = 0; j < N; ++j) le[i][j] = bruhat_leq(els[i], els[j]);
        for (size_t i = 0; i < N; ++i) {
            CHECK(le[i][i]);
            CHECK(bruhat_leq(identity(t, 3), els[i]));
            CHECK(bruhat_leq(els[i], longest_element(t, 3)));
            for (size_t j = 0; j < N; ++j) {
                if (i != j && le[i][j]) CHECK_FALSE(le[j][i]);
                if (le[i][j] && i != j) CHECK(length(els[i]) < length(els[j]));
                if (!le[i][j]) continue;
                for (size_t k = 0; k < N; ++k)
                    if (le[j][k]) CHECK(le[i][k]);
            }
        }
    }
}
