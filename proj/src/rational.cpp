#include "syzstab/rational.hpp"

#include <stdexcept>

namespace syzstab {

std::string rational_to_string(const Rational& x) {
  std::string s = numerator(x).str();
  if (!is_integer(x)) {
    s += "/";
    s += denominator(x).str();
  }
  return s;
}

namespace {

BigInt parse_big_int(const std::string& text, const std::string& original) {
  if (text.empty()) {
    throw std::invalid_argument("invalid rational \"" + original + "\"");
  }
  size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("invalid rational \"" + original + "\"");
  }
  for (size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("invalid rational \"" + original + "\"");
    }
  }
  return BigInt(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();

  const size_t slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_big_int(s, text));
  }
  BigInt num = parse_big_int(s.substr(0, slash), text);
  BigInt den = parse_big_int(s.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in \"" + text + "\"");
  }
  return Rational(num, den);
}

BigInt floor_rational(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace syzstab
