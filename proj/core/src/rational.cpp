// Copyright 2026 The abmp Authors.
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

#include "abmp/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

#include "abmp/errors.hpp"

namespace abmp {

namespace {

Integer parse_integer(std::string_view text) {
  try {
    return Integer(std::string(text));
  } catch (const std::invalid_argument&) {
    throw BadParameters("not an integer: '" + std::string(text) + "'");
  }
}

}  // namespace

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational rational_from_string(std::string_view text) {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(begin, end - begin);
  if (text.empty()) throw BadParameters("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw BadParameters("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal form: [sign] digits [. digits] [e|E exponent].
  std::string digits;
  long long exponent10 = 0;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    if (text[i] == '-') digits += '-';
    ++i;
  }
  bool any_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      any_digit = true;
      if (seen_dot) --exponent10;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && any_digit) {
      long long exp = 0;
      try {
        size_t used = 0;
        exp = std::stoll(std::string(text.substr(i + 1)), &used);
        if (used != text.size() - i - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw BadParameters("bad exponent in '" + std::string(text) + "'");
      }
      exponent10 += exp;
      i = text.size();
      break;
    } else {
      throw BadParameters("not a rational: '" + std::string(text) + "'");
    }
  }
  if (!any_digit) throw BadParameters("not a rational: '" + std::string(text) + "'");

  Rational q(parse_integer(digits), 1);
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10,
                static_cast<unsigned long>(exponent10 < 0 ? -exponent10 : exponent10));
  if (exponent10 < 0) {
    q /= Rational(pow10);
  } else {
    q *= Rational(pow10);
  }
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, q.get_d());
  return buf;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer rational_floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

Integer rational_ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace abmp
