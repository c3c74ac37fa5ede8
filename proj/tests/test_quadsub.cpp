/*
   Copyright 2026 The exunits Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <cmath>

#include "exunits/quadsub.hpp"
#include "support/oracles.hpp"

using namespace exunits;

namespace {

bool squarefree_small(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("pell-4 small solutions") {
    auto check = [](long d, long t, long s) {
        const auto sol = pell4_solve(Integer(d));
        CHECK(sol.d == d);
        CHECK(sol.t == t);
        CHECK(sol.s == s);
    };
    check(2, 6, 4);
    check(3, 4, 2);
    check(5, 3, 1);
    check(7, 16, 6);
    check(13, 11, 3);
    check(21, 5, 1);
    CHECK_THROWS(pell4_solve(Integer(4)));
    CHECK_THROWS(pell4_solve(Integer(1)));
    CHECK_THROWS(pell4_solve(Integer(-5)));
    CHECK_THROWS(pell4_solve(Integer(8)));
}

TEST_CASE("pell-4 agrees with brute force over s for every squarefree d up to 200") {
    for (long d = 2; d <= 200; ++d) {
        if (!squarefree_small(d)) continue;
        CAPTURE(d);
        const auto sol = pell4_solve(Integer(d));
        CHECK(sol.t * sol.t - Integer(d) * sol.s * sol.s == 4);
        CHECK(sol.t >= 3);
        const auto brute = oracle::pell4_by_s(static_cast<std::uint64_t>(d), 5'000'000);
        if (!brute) {
            CHECK(sol.s > 5'000'000);
            continue;
        }
        CHECK(sol.t == Integer(static_cast<unsigned long>(brute->first)));
        CHECK(sol.s == Integer(static_cast<unsigned long>(brute->second)));
    }
}

TEST_CASE("pell-4 brute-force search path") {
    for (long d = 2; d <= 99; ++d) {
        if (!squarefree_small(d)) continue;
        const auto fast = pell4_solve(Integer(d));
        if (fast.t > 9'000'000) continue;
        const auto slow = pell4_search(Integer(d));
        CHECK(slow.t == fast.t);
        CHECK(slow.s == fast.s);
    }
    CHECK(pell4_solve(Integer(97)).t == 125619266);
    CHECK_THROWS_AS(pell4_search(Integer(97), 1000), std::runtime_error);
}

TEST_CASE("embedding every squarefree d below 100") {
    for (long d = 2; d <= 99; ++d) {
        if (!squarefree_small(d)) continue;
        const FamilySpec s = embed_quadratic(Integer(d));
        CHECK(s.id == FamilyId::f);
        const Integer t = s.params.at(0);
        CHECK(squarefree_part(t * t - 4) == d);
    }
    CHECK(embed_quadratic(Integer(7)).params[0] == 16);
    CHECK(embed_quadratic(Integer(5)).params[0] == 3);
    CHECK_FALSE(in_paper_range(embed_quadratic(Integer(5))));
    CHECK(embed_quadratic(Integer(3)).params[0] == 4);
}

TEST_CASE("tower step") {
    CHECK(tower_step(Integer(3)) == 7);
    CHECK(tower_step(Integer(4)) == 14);
    CHECK(tower_step(Integer(6)) == 34);
    for (long t = 3; t <= 1000; ++t) {
        const Integer T = tower_step(Integer(t));
        CHECK(T == Integer(t * t - 2));
        CHECK(squarefree_part(T * T - 4) == squarefree_part(Integer(t * t - 4)));
    }
    CHECK_THROWS(tower_step(Integer(2)));
}

TEST_CASE("appendix scan") {
    const auto small = appendix_scan(100000);
    CHECK(small.hits == std::vector<Integer>{3});
    CHECK(small.small_hits == std::vector<Integer>{-2, 2});
    // independent recount with 128-bit arithmetic
    std::vector<long> hits;
    for (long t = 3; t <= 100000; ++t) {
        const unsigned __int128 v = static_cast<unsigned __int128>(t * t - 4) * static_cast<unsigned __int128>(4 * t * t + 9);
        auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(v)));
        while (r * r > v) --r;
        while ((r + 1) * (r + 1) <= v) ++r;
        if (r * r == v) hits.push_back(t);
    }
    CHECK(hits == std::vector<long>{3});
    CHECK(Integer(5 * 45) == 225);
    CHECK_FALSE(is_square(Integer(12 * 73)));
    CHECK_THROWS(appendix_scan(2));
}

TEST_CASE("appendix scan to one million") {
    const auto big = appendix_scan(1'000'000);
    CHECK(big.hits == std::vector<Integer>{3});
}
