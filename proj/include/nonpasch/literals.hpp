#pragma once

// Textual literals shared by the CLI, JSON witnesses and the Python module.
//
//   rat      := int | int "/" posint          int := ["-"] digits
//   qs5      := rat | rat ("+"|"-") urat "*s5" | rat "*s5"
//   line     := "vertical:" A..E | "harmonic:h0=" qs5 ",h1=" qs5
//   point    := "point:" A..E "," qs5
//   qpoint   := "qpoint:x=" rat ",y=" rat
//   qline    := "qline:a=" rat ",b=" rat ",c=" rat
//   fpoint   := "fpoint:" digit "," digit
//   fline    := "fline:" digit "," digit "," digit
//
// Every formatter emits a literal its parser maps back to the same value.
// Parse failures throw ParseError carrying the offending text and offset.

#include <string>
#include <string_view>
#include <variant>

#include "nonpasch/gf5plane.hpp"
#include "nonpasch/prism.hpp"
#include "nonpasch/punctured.hpp"
#include "nonpasch/qs5.hpp"

namespace nonpasch::literals {

Rational parse_rational(std::string_view text);
Qs5 parse_qs5(std::string_view text);

prism::PrismLine parse_prism_line(std::string_view text);
prism::PrismPoint parse_prism_point(std::string_view text);
punctured::QPoint parse_qpoint(std::string_view text);
punctured::QLine parse_qline(std::string_view text);
gf5plane::FPoint parse_fpoint(std::string_view text);
gf5plane::FLine parse_fline(std::string_view text);

using LineLiteral = std::variant<prism::PrismLine, punctured::QLine>;

/// Dispatches on the prefix: vertical/harmonic or qline.
LineLiteral parse_line_literal(std::string_view text);

std::string format(const Rational& r);
std::string format(const Qs5& x);
std::string format(const prism::PrismLine& l);
std::string format(const prism::PrismPoint& p);
std::string format(const punctured::QPoint& p);
std::string format(const punctured::QLine& l);
std::string format(const gf5plane::FPoint& p);
std::string format(const gf5plane::FLine& l);
std::string format(const LineLiteral& l);

}  // namespace nonpasch::literals
