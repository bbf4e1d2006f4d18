#include <array>
#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

#include "h2/moebius.hpp"

namespace h2 {
namespace {

double parse_real(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("empty number in complex literal '" + std::string(whole) + "'");
  // from_chars rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("malformed number '" + std::string(s) + "' in complex literal '" + std::string(whole) + "'");
  }
  return value;
}

// Imaginary coefficient: "", "+" and "-" stand for +1, +1 and -1.
double parse_imag(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1.0;
  if (s == "-") return -1.0;
  return parse_real(s, whole);
}

}  // namespace

std::complex<double> parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is neither leading nor part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag(body, text)};
  return {parse_real(body.substr(0, split), text), parse_imag(body.substr(split), text)};
}

Lft parse_lft(std::string_view text) {
  std::array<std::complex<double>, 4> coeffs;
  std::size_t start = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t comma = text.find(',', start);
    const bool last = (k == 3);
    if (last != (comma == std::string_view::npos)) {
      throw ParseError("map must have exactly four comma-separated coefficients: '" + std::string(text) + "'");
    }
    const std::string_view item = last ? text.substr(start) : text.substr(start, comma - start);
    coeffs[k] = parse_complex(item);
    start = comma + 1;
  }
  return Lft(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

std::string format_complex(std::complex<double> z) {
  std::array<char, 64> re{};
  std::array<char, 64> im{};
  std::snprintf(re.data(), re.size(), "%.17g", z.real());
  if (z.imag() == 0.0) return re.data();
  std::snprintf(im.data(), im.size(), "%+.17g", z.imag());
  return std::string(re.data()) + im.data() + "i";
}

std::string format_lft(const Lft& m) {
  return format_complex(m.a()) + "," + format_complex(m.b()) + "," + format_complex(m.c()) + "," +
         format_complex(m.d());
}

}  // namespace h2
