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

#include "bgc/rational.hpp"

#include <cctype>

#include "bgc/errors.hpp"

namespace bgc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+') {
    throw MalformedInputError("not a rational number: '" + std::string(text) +
                              "'");
  }
  std::string num_str(num);
  if (num_str.front() == '+') num_str.erase(0, 1);
  BigInt p(num_str, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw MalformedInputError("zero denominator in '" + std::string(text) +
                              "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace bgc
