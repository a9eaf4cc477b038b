#include "grid.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "qsr/errors.hpp"

namespace qsr::cli {
namespace {

// expr   := term (('+' | '-') term)*
// term   := factor (('*' | '/') factor)*
// factor := number ['pi'] | 'pi' | 'sqrt(' expr ')' | '(' expr ')' | '-' factor
class ScalarParser {
public:
  ScalarParser(std::string_view text, double pi_value) : text_(text), pi_(pi_value) {}

  double parse() {
    const double v = expr();
    skip_space();
    if (pos_ != text_.size()) fail();
    return v;
  }

private:
  [[noreturn]] void fail() const {
    throw DomainError("cannot parse number '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept("+")) {
        v += term();
      } else if (accept("-")) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = factor();
    for (;;) {
      if (accept("*")) {
        v *= factor();
      } else if (accept("/")) {
        v /= factor();
      } else {
        return v;
      }
    }
  }

  double factor() {
    if (accept("-")) return -factor();
    if (accept("pi")) return pi_;
    if (accept("sqrt(")) {
      const double v = expr();
      if (!accept(")")) fail();
      return std::sqrt(v);
    }
    if (accept("sqrt")) return std::sqrt(factor());
    if (accept("(")) {
      const double v = expr();
      if (!accept(")")) fail();
      return v;
    }
    skip_space();
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) fail();
    pos_ += static_cast<std::size_t>(ptr - first);
    if (accept("pi")) v *= pi_;
    return v;
  }

  std::string_view text_;
  double pi_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) return parts;
    start = end + 1;
  }
}

}  // namespace

double parse_scalar(std::string_view text, double pi_value) {
  return ScalarParser(text, pi_value).parse();
}

std::vector<double> parse_grid(std::string_view text, double pi_value) {
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("range must be written a:b:n");
    const double a = parse_scalar(parts[0], pi_value);
    const double b = parse_scalar(parts[1], pi_value);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), n);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || n < 2) {
      throw DomainError("range needs an integer point count n >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / (n - 1);
      grid[i] = i == n - 1 ? b : a + (b - a) * t;
    }
    return grid;
  }
  std::vector<double> values;
  for (const auto part : split(text, ',')) values.push_back(parse_scalar(part, pi_value));
  return values;
}

}  // namespace qsr::cli
