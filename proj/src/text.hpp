#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "core_space.hpp"
#include "sft_oracle.hpp"
#include "uniformity.hpp"

// The shared text grammar:
//   bit      := "0" | "1"
//   word     := bit* "|" bit+                    transient "|" period
//   point    := "zero" | fiber "=" word (";" fiber "=" word)*
//   cylinder := "{}" | "{" fiber ":" pos "=" bit ("," ...)* "}"
//   index    := "<{" fiber ("," fiber)* "}," k ">"
//   sft      := "alphabet=" n [";" "forbid=" word ("," word)*]
// Printing emits canonical forms: fibers in lexicographic order, positions
// ascending, canonical fiber words.

namespace cantor {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Point parse_point(const std::string& text);
Cylinder parse_cylinder(const std::string& text);
UIndex parse_index(const std::string& text);
SftSystem parse_sft(const std::string& text);

std::string print_point(const Point& p);
std::string print_cylinder(const Cylinder& c);  // VOID prints as "VOID"
std::string print_index(const UIndex& idx);
std::string print_sft(const SftSystem& sys);

}  // namespace cantor
