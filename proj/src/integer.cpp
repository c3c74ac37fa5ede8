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

#include "exunits/integer.hpp"

#include <algorithm>
#include <cmath>

namespace exunits {

Integer isqrt(const Integer& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) {
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(unsigned __int128 n) {
    if (n == 0) return true;
    auto r = static_cast<unsigned __int128>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

namespace {

// Strips every prime <= kTrialDivisionLimit (stopping early once p^2 exceeds
// the cofactor). Returns the cofactor; `exhausted` is set when the cofactor is
// known to be 1 or prime.
Integer trial_divide(Integer m, std::vector<std::pair<Integer, unsigned>>& out, bool& exhausted) {
    auto take = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out.emplace_back(Integer(p), e);
    };
    take(2);
    take(3);
    // 6k +- 1 wheel
    for (unsigned long p = 5; p <= kTrialDivisionLimit; p += 6) {
        if (Integer(p) * p > m) {
            exhausted = true;
            return m;
        }
        take(p);
        take(p + 2);
    }
    exhausted = (m == 1);
    return m;
}

const Integer& limit_squared() {
    static const Integer v = Integer(kTrialDivisionLimit) * kTrialDivisionLimit;
    return v;
}

const Integer& limit_cubed() {
    static const Integer v = limit_squared() * kTrialDivisionLimit;
    return v;
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    std::vector<std::pair<Integer, unsigned>> out;
    bool exhausted = false;
    Integer rest = trial_divide(abs(n), out, exhausted);
    if (rest > 1) {
        if (!exhausted && rest >= limit_squared()) {
            throw FactorizationLimit("factorize: cofactor " + to_string(rest) +
                                     " exceeds the trial-division range");
        }
        out.emplace_back(rest, 1);
    }
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree_part: argument must be nonzero");
    std::vector<std::pair<Integer, unsigned>> found;
    bool exhausted = false;
    Integer rest = trial_divide(abs(n), found, exhausted);
    Integer d = 1;
    for (const auto& [p, e] : found) {
        if (e % 2 == 1) d *= p;
    }
    if (rest > 1) {
        // No prime factor below the limit: below limit^3 the cofactor is p, p^2 or p*q.
        if (!exhausted && rest >= limit_cubed()) {
            throw FactorizationLimit("squarefree_part: cofactor " + to_string(rest) +
                                     " exceeds the trial-division range");
        }
        if (!is_square(rest)) d *= rest;
    }
    return sgn(n) < 0 ? Integer(-d) : d;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    if (n == 0) throw std::domain_error("positive_divisors: argument must be nonzero");
    static const Integer cap("1000000000000");
    if (abs(n) > cap) throw FactorizationLimit("positive_divisors: |n| exceeds 10^12");
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
    std::vector<std::uint32_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> composite(bound + 1, false);
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= bound; j += i) composite[j] = true;
    }
    return primes;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& text) {
    Integer v;
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    if (s.empty() || v.set_str(s, 10) != 0) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return v;
}

}  // namespace exunits
