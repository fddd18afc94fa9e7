#include <cctype>
#include <charconv>
#include <stdexcept>

#include "cyclres/poly.hpp"

namespace cyclres {

namespace {

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), s_(text) {}

  Poly parse() {
    Poly result(ring_);
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
    while (true) {
      Poly t = term();
      result += negative ? -t : t;
      skip();
      if (pos_ == s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s_) + "': " + what +
                                " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::int64_t integer() {
    skip();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  Poly term() {
    const Field& f = ring_->field();
    Scalar coeff = f.one();
    Monomial mono;
    while (true) {
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::int64_t num = integer();
        std::int64_t den = 1;
        if (peek() == '/') {
          ++pos_;
          den = integer();
        }
        coeff = f.mul(coeff, f.from_fraction(num, den));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          ++pos_;
        std::string_view name = s_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'");
        std::int64_t e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
          if (e < 0) fail("negative exponent");
        }
        mono = mono * Monomial::variable(*idx, static_cast<int>(e));
      } else {
        fail("expected coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return Poly::term(ring_, mono, coeff);
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace cyclres
