#include "pecycles/rational.hpp"

#include <cctype>

#include "pecycles/errors.hpp"

namespace pecycles {

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

Rat rat_parse(std::string_view text) {
  std::size_t pos = 0;
  auto digits = [&](std::size_t start) -> Int {
    std::size_t i = start;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digits in rational literal", start);
    Int value(std::string(text.substr(start, i - start)));
    pos = i;
    return value;
  };

  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  Int num = digits(pos);
  Int den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t den_at = pos;
    den = digits(pos);
    if (den == 0) throw ParseError("zero denominator in rational literal", den_at);
  }
  if (pos != text.size()) throw ParseError("trailing characters after rational literal", pos);
  Rat r(num, den);
  return negative ? -r : r;
}

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

}  // namespace pecycles
