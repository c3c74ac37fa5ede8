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

#include "exunits/quadsub.hpp"

#include <optional>
#include <stdexcept>

namespace exunits {

namespace {

void require_squarefree_above_one(const Integer& d) {
    if (d <= 1) throw std::invalid_argument("pell4: d must be greater than 1");
    if (squarefree_part(d) != d) throw std::invalid_argument("pell4: d = " + to_string(d) + " is not squarefree");
}

// Walks the convergents p/q of sqrt(d) for a nonsquare d.
class SqrtConvergents {
  public:
    explicit SqrtConvergents(const Integer& d) : d_(d), a0_(isqrt(d)), a_(a0_), p_(a0_), q_(1) {}

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    void advance() {
        m_ = a_ * den_ - m_;
        den_ = (d_ - m_ * m_) / den_;
        a_ = (a0_ + m_) / den_;
        Integer p = a_ * p_ + p_prev_;
        Integer q = a_ * q_ + q_prev_;
        p_prev_ = std::move(p_);
        q_prev_ = std::move(q_);
        p_ = std::move(p);
        q_ = std::move(q);
    }

  private:
    Integer d_, a0_;
    Integer m_ = 0, den_ = 1, a_;
    Integer p_, q_;
    Integer p_prev_ = 1, q_prev_ = 0;
};

}  // namespace

Pell4Solution pell4_search(const Integer& d, std::uint64_t max_steps) {
    require_squarefree_above_one(d);
    Integer t = 3;
    for (std::uint64_t step = 0; step < max_steps; ++step, ++t) {
        const Integer v = t * t - 4;
        if (mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
            const Integer s2 = v / d;
            if (is_square(s2)) return {d, t, isqrt(s2)};
        }
    }
    throw std::runtime_error("pell4_search: no solution within " + std::to_string(max_steps) + " steps");
}

Pell4Solution pell4_solve(const Integer& d, std::uint64_t max_steps) {
    require_squarefree_above_one(d);
    // Odd solutions need d = 5 (mod 8); the convergent criterion for them needs 4 < sqrt(d).
    const bool odd_possible = mpz_fdiv_ui(d.get_mpz_t(), 8) == 5;
    if (odd_possible && d <= 16) return pell4_search(d, max_steps);

    // Even solutions: t = 2x, s = 2y with (x, y) the fundamental solution of x^2 - d y^2 = 1.
    SqrtConvergents cf(d);
    std::uint64_t steps = 0;
    while (cf.p() * cf.p() - d * cf.q() * cf.q() != 1) {
        if (++steps > max_steps) {
            throw std::runtime_error("pell4_solve: continued fraction exceeded " + std::to_string(max_steps) + " steps");
        }
        cf.advance();
    }
    Pell4Solution best{d, 2 * cf.p(), 2 * cf.q()};
    if (!odd_possible) return best;

    // Odd solutions are coprime with |4| < sqrt(d), hence convergents of sqrt(d).
    SqrtConvergents odd(d);
    while (odd.p() < best.t) {
        if (odd.p() >= 3 && odd.p() * odd.p() - d * odd.q() * odd.q() == 4) {
            return Pell4Solution{d, odd.p(), odd.q()};
        }
        odd.advance();
    }
    return best;
}

FamilySpec embed_quadratic(const Integer& d) {
    const auto sol = pell4_solve(d);
    return FamilySpec{FamilyId::f, {sol.t}};
}

Integer tower_step(const Integer& t) {
    if (t < 3) throw std::invalid_argument("tower_step: t must be at least 3");
    const Integer big_t = t * t - 2;
    const Integer before = squarefree_part(Integer(t * t - 4));
    const Integer after = squarefree_part(Integer(big_t * big_t - 4));
    if (before != after) {
        throw ContradictionError("tower_step: squarefree parts differ (" + to_string(before) + " vs " +
                                 to_string(after) + ")");
    }
    return big_t;
}

AppendixScan appendix_scan(std::uint64_t bound) {
    if (bound < 3) throw std::invalid_argument("appendix_scan: bound must be at least 3");
    AppendixScan out;
    for (long t = -2; t <= 2; ++t) {
        const Integer tt(t);
        if (is_square(Integer((tt * tt - 4) * (4 * tt * tt + 9)))) out.small_hits.push_back(tt);
    }
    // (t^2 - 4)(4 t^2 + 9) < 4 t^4 fits in 128 bits while t < 2^31.
    constexpr std::uint64_t kWide = std::uint64_t(1) << 31;
    for (std::uint64_t t = 3; t <= bound; ++t) {
        bool square = false;
        if (t < kWide) {
            const unsigned __int128 t2 = static_cast<unsigned __int128>(t) * t;
            square = is_square((t2 - 4) * (4 * t2 + 9));
        } else {
            const Integer tt(static_cast<unsigned long>(t));
            square = is_square(Integer((tt * tt - 4) * (4 * tt * tt + 9)));
        }
        if (square) out.hits.emplace_back(static_cast<unsigned long>(t));
    }
    return out;
}

}  // namespace exunits
