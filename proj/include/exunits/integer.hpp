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

#ifndef EXUNITS_INTEGER_HPP
#define EXUNITS_INTEGER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace exunits {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an integer is too large to be factored by the built-in trial division.
class FactorizationLimit : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal cross-check fails; always signals a bug upstream.
class ContradictionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline constexpr std::uint64_t kTrialDivisionLimit = 10'000'000;

Integer isqrt(const Integer& n);
bool is_square(const Integer& n);  // 0 counts as a square; negatives never do
bool is_square(unsigned __int128 n);

Integer ipow(const Integer& base, unsigned long exponent);

/// Prime factorization of |n| by trial division up to kTrialDivisionLimit.
/// The leftover cofactor is classified exactly while it stays below limit^3
/// (prime, square of a prime, or product of two primes); past that the call
/// throws FactorizationLimit.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// d with n = d*m^2 and d squarefree; the sign of n is kept. n must be nonzero.
Integer squarefree_part(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending. |n| <= 10^12.
std::vector<Integer> positive_divisors(const Integer& n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
Integer parse_integer(const std::string& text);

}  // namespace exunits

#endif
