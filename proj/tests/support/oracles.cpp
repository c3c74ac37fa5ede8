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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

namespace exunits::oracle {

Integer bareiss_det(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Matrix sylvester(const IntPoly& p, const IntPoly& q) {
    const int m = p.degree(), n = q.degree();
    const int size = m + n;
    Matrix s(size, std::vector<Integer>(size, 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[r][r + i] = p[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s[n + r][r + i] = q[n - i];
    return s;
}

Integer sylvester_resultant(const IntPoly& p, const IntPoly& q) { return bareiss_det(sylvester(p, q)); }

Integer sylvester_discriminant(const IntPoly& p) {
    const int n = p.degree();
    Integer r = sylvester_resultant(p, p.derivative());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    Integer out;
    mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
    return out;
}

Integer quartic_delta(const Integer& a, const Integer& b, const Integer& c) {
    const Integer a2 = a * a, b2 = b * b, c2 = c * c;
    return 256 - 192 * a * c - 128 * b2 + 144 * b * c2 - 27 * c2 * c2 + 144 * a2 * b - 6 * a2 * c2 -
           80 * a * b2 * c + 18 * a * b * c2 * c + 16 * b2 * b2 - 4 * b2 * b * c2 - 27 * a2 * a2 +
           18 * a2 * a * b * c - 4 * a2 * a * c2 * c - 4 * a2 * b2 * b + a2 * b2 * c2;
}

Integer quartic_d(const Integer& a, const Integer& b, const Integer& c) {
    return 64 - 16 * b * b + 16 * a * a * b - 16 * a * c - 3 * a * a * a * a;
}

Integer quartic_p(const Integer& a, const Integer& b) { return 8 * b - 3 * a * a; }

namespace {

using Fp = std::vector<std::int64_t>;

std::int64_t mod(const Integer& v, std::int64_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r.get_si();
}

bool divides_mod_p(const Fp& g, Fp f, std::int64_t p) {
    // g monic
    const int dg = static_cast<int>(g.size()) - 1;
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
        const std::int64_t c = f[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
    }
    for (int i = 0; i < dg; ++i)
        if (f[i] % p != 0) return false;
    return true;
}

std::vector<Integer> signed_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    return out;
}

RatPoly lagrange(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    RatPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatPoly term = RatPoly::constant(ys[i]);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            const Rational inv = 1 / (xs[i] - xs[j]);
            term = term * RatPoly{-xs[j] * inv, inv};
        }
        acc += term;
    }
    return acc;
}

}  // namespace

bool exhaustive_irreducible_mod_p(const IntPoly& p, std::uint32_t prime) {
    const auto q = static_cast<std::int64_t>(prime);
    Fp f;
    for (const auto& c : p.coeffs()) f.push_back(mod(c, q));
    while (!f.empty() && f.back() == 0) f.pop_back();
    const int n = static_cast<int>(f.size()) - 1;
    if (n != p.degree()) throw std::invalid_argument("leading coefficient vanishes mod p");
    for (int k = 1; 2 * k <= n; ++k) {
        std::int64_t total = 1;
        for (int i = 0; i < k; ++i) total *= q;
        for (std::int64_t code = 0; code < total; ++code) {
            Fp g(k + 1, 0);
            g[k] = 1;
            std::int64_t c = code;
            for (int i = 0; i < k; ++i) {
                g[i] = c % q;
                c /= q;
            }
            // make f monic first
            Fp fm = f;
            std::int64_t inv = 1;
            for (std::int64_t t = 1; t < q; ++t)
                if ((f[n] * t) % q == 1) inv = t;
            for (auto& v : fm) v = (v * inv) % q;
            if (divides_mod_p(g, fm, q)) return false;
        }
    }
    return true;
}

std::optional<IntPoly> kronecker_factor(const IntPoly& p, int k) {
    if (k < 1 || k >= p.degree()) return std::nullopt;
    // candidate sample points ordered by |p(x)|, zeros give linear factors directly
    std::vector<std::pair<Integer, Integer>> pts;
    for (int x = -6; x <= 6; ++x) {
        const Integer v = p.evaluate(Integer(x));
        if (v == 0) {
            if (k == 1) return IntPoly{Integer(-x), Integer(1)};
            continue;
        }
        pts.emplace_back(Integer(x), v);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return abs(a.second) < abs(b.second); });
    pts.resize(k);
    std::vector<std::vector<Integer>> choices;
    for (const auto& [x, v] : pts) choices.push_back(signed_divisors(v));

    std::vector<Rational> xs;
    for (const auto& pt : pts) xs.emplace_back(pt.first);
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        // monic g = x^k + r(x), deg r < k, fixed by its k sample values
        std::vector<Rational> ys;
        for (int i = 0; i < k; ++i) {
            Integer xk = 1;
            for (int e = 0; e < k; ++e) xk *= pts[i].first;
            ys.emplace_back(choices[i][idx[i]] - xk);
        }
        RatPoly r = lagrange(xs, ys);
        bool integral = true;
        std::vector<Integer> coeffs(k + 1, 0);
        for (int i = 0; i < k; ++i) {
            const Rational c = r[i];
            if (c.get_den() != 1) {
                integral = false;
                break;
            }
            coeffs[i] = c.get_num();
        }
        coeffs[k] = 1;
        if (integral) {
            IntPoly g(coeffs);
            if (divides(g, p)) return g;
        }
        int pos = 0;
        while (pos < k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
        if (pos == k) break;
    }
    return std::nullopt;
}

bool kronecker_irreducible(const IntPoly& p) {
    for (int k = 1; 2 * k <= p.degree(); ++k)
        if (kronecker_factor(p, k)) return false;
    return true;
}

int numeric_real_roots(const IntPoly& p, long double imag_tol) {
    using C = std::complex<long double>;
    const int n = p.degree();
    std::vector<C> a(n + 1);
    const long double lc = p.leading().get_d();
    for (int i = 0; i <= n; ++i) a[i] = C(p[i].get_d() / lc, 0);
    std::vector<C> z(n);
    const C seed(0.4L, 0.9L);
    for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
    auto eval = [&](C x) {
        C acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * x + a[i];
        return acc;
    };
    for (int it = 0; it < 5000; ++it) {
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            z[i] -= eval(z[i]) / denom;
        }
    }
    std::vector<long double> reals;
    for (const auto& r : z) {
        if (std::fabs(r.imag()) < imag_tol * std::max(1.0L, std::abs(r))) reals.push_back(r.real());
    }
    std::sort(reals.begin(), reals.end());
    int distinct = 0;
    for (std::size_t i = 0; i < reals.size(); ++i) {
        if (i == 0 || std::fabs(reals[i] - reals[i - 1]) > 1e-7L * std::max(1.0L, std::fabs(reals[i]))) ++distinct;
    }
    return distinct;
}

RatPoly charpoly_by_determinant(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    Integer l = 1;
    for (const auto& row : m)
        for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    Integer ln = 1;
    for (std::size_t i = 0; i < n; ++i) ln *= l;
    std::vector<Rational> xs, ys;
    for (std::size_t pt = 0; pt <= n; ++pt) {
        Matrix a(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational v = -m[i][j] * l;
                if (i == j) v += Rational(static_cast<long>(pt)) * l;
                a[i][j] = v.get_num();
            }
        }
        xs.emplace_back(static_cast<long>(pt));
        ys.emplace_back(Rational(bareiss_det(a), ln));
        ys.back().canonicalize();
    }
    return lagrange(xs, ys);
}

std::vector<std::vector<Rational>> multiplication_matrix(const IntPoly& modulus, const RatPoly& element) {
    const int n = modulus.degree();
    auto reduce = [&](std::vector<Rational> v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= n; --i) {
            const Rational c = v[i];
            if (c == 0) continue;
            for (int j = 0; j <= n; ++j) v[i - n + j] -= c * Rational(modulus[j]) / Rational(modulus.leading());
        }
        v.resize(n, Rational(0));
        return v;
    };
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<Rational> cur(element.coeffs().begin(), element.coeffs().end());
    cur = reduce(cur);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[i][j] = cur[i];
        cur.insert(cur.begin(), Rational(0));
        cur = reduce(cur);
    }
    return m;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> pell4_by_s(std::uint64_t d, std::uint64_t s_limit) {
    using u128 = unsigned __int128;
    for (std::uint64_t s = 1; s <= s_limit; ++s) {
        const u128 v = static_cast<u128>(d) * s * s + 4;
        auto t = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
        while (t * t > v) --t;
        while ((t + 1) * (t + 1) <= v) ++t;
        if (t * t == v) return std::pair{static_cast<std::uint64_t>(t), s};
    }
    return std::nullopt;
}

IntPoly graeffe_by_expansion(const IntPoly& p) {
    // power sums of the roots (Newton), then rebuild from the even ones
    const int n = p.degree();
    std::vector<Rational> e(n + 1);
    for (int k = 0; k <= n; ++k) {
        e[k] = Rational(p[n - k]) / Rational(p.leading());
        if (k % 2 == 1) e[k] = -e[k];
    }
    auto elem = [&](int k) { return k <= n ? e[k] : Rational(0); };
    std::vector<Rational> ps(2 * n + 1, Rational(0));
    for (int k = 1; k <= 2 * n; ++k) {
        Rational s = (k <= n) ? Rational(k) * elem(k) * ((k % 2 == 1) ? 1 : -1) : Rational(0);
        for (int i = 1; i < k; ++i) {
            const Rational term = elem(i) * ps[k - i];
            s += ((i % 2 == 1) ? term : Rational(-term));
        }
        ps[k] = s;
    }
    std::vector<Rational> f(n + 1, Rational(0));
    f[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rational s = 0;
        for (int i = 1; i <= k; ++i) {
            const Rational term = f[k - i] * ps[2 * i];
            s += (i % 2 == 1) ? term : Rational(-term);
        }
        f[k] = s / k;
    }
    std::vector<Integer> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational c = (k % 2 == 1) ? Rational(-f[k]) : f[k];
        if (c.get_den() != 1) throw std::logic_error("graeffe oracle produced a non-integer");
        coeffs[n - k] = c.get_num();
    }
    return IntPoly(coeffs);
}

}  // namespace exunits::oracle
