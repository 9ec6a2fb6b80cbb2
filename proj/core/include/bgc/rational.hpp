// Copyright 2026 The bgclean Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BGC_RATIONAL_HPP_
#define BGC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bgc {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p" or "p/q" into a canonical rational. Throws
// MalformedInputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Exact rendering: "3/2", "-1/4", "2", "0". Never a decimal.
std::string to_string(const Rational& r);

inline Rational half() { return Rational(1, 2); }

}  // namespace bgc

#endif  // BGC_RATIONAL_HPP_
