#include "nonpasch/literals.hpp"

#include <cctype>

#include "nonpasch/errors.hpp"

namespace nonpasch::literals {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool peek_is(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(std::string(text_), pos_, what);
  }

  void expect(std::string_view s) {
    if (!peek_is(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  bool accept(std::string_view s) {
    if (!peek_is(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  BigInt digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Rational rational(bool allow_sign) {
    const bool negative = allow_sign && accept("-");
    BigInt num = digits();
    if (negative) num = -num;
    BigInt den = 1;
    if (accept("/")) {
      const std::size_t at = pos_;
      den = digits();
      if (den.is_zero()) {
        pos_ = at;
        fail("denominator must be positive");
      }
    }
    return Rational(std::move(num), std::move(den));
  }

  Qs5 qs5() {
    Rational first = rational(true);
    if (accept("*s5")) return {Rational(0), std::move(first)};
    if (peek() != '+' && peek() != '-') return {std::move(first)};
    const bool minus = peek() == '-';
    ++pos_;
    Rational second = rational(false);
    expect("*s5");
    return {std::move(first), minus ? -second : second};
  }

  pentaline::Vertex vertex() {
    const char c = peek();
    if (c < 'A' || c > 'E') fail("expected a vertex letter A..E");
    ++pos_;
    return pentaline::Vertex(c - 'A');
  }

  int gf5_digit() {
    const char c = peek();
    if (c < '0' || c > '4') fail("expected a GF(5) digit 0..4");
    ++pos_;
    return c - '0';
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  Rational r = c.rational(true);
  c.expect_end();
  return r;
}

Qs5 parse_qs5(std::string_view text) {
  Cursor c(text);
  Qs5 x = c.qs5();
  c.expect_end();
  return x;
}

prism::PrismLine parse_prism_line(std::string_view text) {
  Cursor c(text);
  if (c.accept("vertical:")) {
    const auto v = c.vertex();
    c.expect_end();
    return prism::Vertical{v};
  }
  if (c.accept("harmonic:")) {
    c.expect("h0=");
    Qs5 h0 = c.qs5();
    c.expect(",h1=");
    Qs5 h1 = c.qs5();
    c.expect_end();
    return prism::Harmonic{std::move(h0), std::move(h1)};
  }
  c.fail("expected 'vertical:' or 'harmonic:'");
}

prism::PrismPoint parse_prism_point(std::string_view text) {
  Cursor c(text);
  c.expect("point:");
  const auto v = c.vertex();
  c.expect(",");
  Qs5 h = c.qs5();
  c.expect_end();
  return {v, std::move(h)};
}

punctured::QPoint parse_qpoint(std::string_view text) {
  Cursor c(text);
  c.expect("qpoint:x=");
  Rational x = c.rational(true);
  c.expect(",y=");
  Rational y = c.rational(true);
  c.expect_end();
  if (x.is_zero() && y.is_zero()) throw ParseError(std::string(text), 0, "the origin is not a point");
  return {std::move(x), std::move(y)};
}

punctured::QLine parse_qline(std::string_view text) {
  Cursor c(text);
  c.expect("qline:a=");
  Rational a = c.rational(true);
  c.expect(",b=");
  Rational b = c.rational(true);
  c.expect(",c=");
  Rational cc = c.rational(true);
  c.expect_end();
  if (a.is_zero() && b.is_zero()) throw ParseError(std::string(text), 0, "a and b both zero");
  return {a, b, cc};
}

gf5plane::FPoint parse_fpoint(std::string_view text) {
  Cursor c(text);
  c.expect("fpoint:");
  const int x = c.gf5_digit();
  c.expect(",");
  const int y = c.gf5_digit();
  c.expect_end();
  return {x, y};
}

gf5plane::FLine parse_fline(std::string_view text) {
  Cursor c(text);
  c.expect("fline:");
  const int a = c.gf5_digit();
  c.expect(",");
  const int b = c.gf5_digit();
  c.expect(",");
  const int cc = c.gf5_digit();
  c.expect_end();
  if (a == 0 && b == 0) throw ParseError(std::string(text), 6, "a and b both zero");
  const auto l = gf5plane::make_line(a, b, cc);
  if (l != gf5plane::FLine{a, b, cc}) throw ParseError(std::string(text), 6, "line not normalized");
  return l;
}

LineLiteral parse_line_literal(std::string_view text) {
  if (text.starts_with("qline:")) return parse_qline(text);
  return parse_prism_line(text);
}

std::string format(const Rational& r) { return r.str(); }

std::string format(const Qs5& x) { return x.str(); }

std::string format(const prism::PrismLine& l) {
  if (l.is_vertical()) return std::string("vertical:") + l.as_vertical().vertex.letter();
  const auto& h = l.as_harmonic();
  return "harmonic:h0=" + h.h0.str() + ",h1=" + h.h1.str();
}

std::string format(const prism::PrismPoint& p) {
  return std::string("point:") + p.vertex.letter() + "," + p.height.str();
}

std::string format(const punctured::QPoint& p) {
  return "qpoint:x=" + p.x().str() + ",y=" + p.y().str();
}

std::string format(const punctured::QLine& l) {
  return "qline:a=" + l.a().str() + ",b=" + l.b().str() + ",c=" + l.c().str();
}

std::string format(const gf5plane::FPoint& p) {
  return "fpoint:" + std::to_string(p.x) + "," + std::to_string(p.y);
}

std::string format(const gf5plane::FLine& l) {
  return "fline:" + std::to_string(l.a) + "," + std::to_string(l.b) + "," + std::to_string(l.c);
}

std::string format(const LineLiteral& l) {
  return std::visit([](const auto& x) { return format(x); }, l);
}

}  // namespace nonpasch::literals
