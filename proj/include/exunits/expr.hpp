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

#ifndef EXUNITS_EXPR_HPP
#define EXUNITS_EXPR_HPP

#include <stdexcept>
#include <string_view>
#include <vector>

#include "exunits/poly.hpp"

namespace exunits {

class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Parses an integer-coefficient polynomial expression in one variable:
/// integers, the variable, + - *, ^ with a nonnegative integer exponent,
/// parentheses, and implicit multiplication such as "3x^2" or "2(x+1)".
IntPoly parse_int_poly(std::string_view text, char var = 'x');

/// "1,-4,-1,4,1" -> integers in the order given.
std::vector<Integer> parse_integer_list(std::string_view text);

/// "4:100" -> {4, 100}; a single value "7" -> {7, 7}.
std::pair<Integer, Integer> parse_range(std::string_view text);

}  // namespace exunits

#endif
