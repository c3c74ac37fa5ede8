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

#include "exunits/fpoly.hpp"

#include <algorithm>

namespace exunits::fp {

namespace {

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse(std::uint64_t a, std::uint32_t p) {
    // Fermat; p is prime
    std::uint64_t r = 1;
    std::uint64_t base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Poly make_monic(Poly f, std::uint32_t p) {
    if (f.empty()) return f;
    const std::uint64_t inv = inverse(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    return f;
}

Poly sub(Poly a, const Poly& b, std::uint32_t p) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

void divide(const Poly& a, const Poly& m, std::uint32_t p, Poly* q, Poly* r) {
    if (m.empty()) throw std::domain_error("fp::divide: division by zero polynomial");
    Poly rr = a;
    trim(rr);
    const int dm = degree(m);
    Poly qq(rr.size() >= m.size() ? rr.size() - m.size() + 1 : 0, 0);
    const std::uint64_t inv = inverse(m.back(), p);
    while (degree(rr) >= dm) {
        const std::size_t shift = rr.size() - m.size();
        const std::uint64_t c = rr.back() * inv % p;
        qq[shift] = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            rr[shift + i] = (rr[shift + i] + p - c * m[i] % p) % p;
        }
        trim(rr);
    }
    trim(qq);
    if (q) *q = std::move(qq);
    if (r) *r = std::move(rr);
}

Poly powmod(const Poly& b, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly result{1};
    Poly base = rem(b, m, p);
    while (e > 0) {
        if (e & 1) result = rem(mul(result, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

}  // namespace

Poly reduce(const IntPoly& f, std::uint32_t p) {
    Poly out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
        out.push_back(r.get_ui());
    }
    trim(out);
    return out;
}

int degree(const Poly& f) {
    std::size_t n = f.size();
    while (n > 0 && f[n - 1] == 0) --n;
    return static_cast<int>(n) - 1;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
}

Poly rem(const Poly& a, const Poly& m, std::uint32_t p) {
    Poly r;
    divide(a, m, p, nullptr, &r);
    return r;
}

Poly quo(const Poly& a, const Poly& m, std::uint32_t p) {
    Poly q;
    divide(a, m, p, &q, nullptr);
    return q;
}

Poly gcd(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly x = a;
    Poly y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        Poly r = rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x, p);
}

Poly derivative(const Poly& f, std::uint32_t p) {
    if (f.size() <= 1) return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * (i % p) % p;
    trim(d);
    return d;
}

bool is_squarefree(const Poly& f, std::uint32_t p) {
    if (degree(f) < 1) return true;
    const Poly d = derivative(f, p);
    if (d.empty()) return false;
    return degree(gcd(f, d, p)) == 0;
}

std::optional<std::vector<int>> factor_degrees(const Poly& f0, std::uint32_t p) {
    if (degree(f0) < 0) throw std::domain_error("fp::factor_degrees: zero polynomial");
    if (!is_squarefree(f0, p)) return std::nullopt;
    std::vector<int> degrees;
    Poly f = f0;
    trim(f);
    f = make_monic(std::move(f), p);
    Poly h = Poly{0, 1};
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = powmod(h, p, f, p);
        const Poly g = gcd(sub(h, Poly{0, 1}, p), f, p);
        const int dg = degree(g);
        if (dg > 0) {
            for (int k = 0; k < dg / d; ++k) degrees.push_back(d);
            f = quo(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (degree(f) > 0) degrees.push_back(degree(f));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace exunits::fp
