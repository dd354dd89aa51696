#pragma once

// Variety-spec mini-language:
//   spec     ::= family ("|" modifier)*
//   family   ::= "veronese:" n "," d | "segre:" m ("," m)+ | "grassmann:" m "," n
//              | "scroll:" a ("," a)* | "spinor:" k | "hermitian:" algebra "," size
//   algebra  ::= "R" | "splitC" | "splitH" | "splitO"
//   modifier ::= "cone:" c | "project:" c
// Identifiers are case-insensitive.

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "secantlab/catalog.hpp"

namespace secantlab {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& expected, const std::string& found)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": expected " + expected +
                           ", found " + found),
        position_(position),
        expected_(expected) {}

  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  VarietySpec parse() {
    VarietySpec spec{parse_family(), {}};
    while (pos_ < text_.size()) {
      expect('|');
      spec.modifiers.push_back(parse_modifier());
    }
    try {
      validate(spec);
      expected_dimensions(spec);
    } catch (const std::invalid_argument& e) {
      throw ParseError(text_.size(), "valid parameters", e.what());
    }
    return spec;
  }

 private:
  Family parse_family() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    expect(':');
    if (name == "veronese") {
      const auto n = number();
      expect(',');
      return Veronese{n, number()};
    }
    if (name == "segre") return Segre{number_list()};
    if (name == "grassmann") {
      const auto m = number();
      expect(',');
      return Grassmann{m, number()};
    }
    if (name == "scroll") return Scroll{number_list()};
    if (name == "spinor") return Spinor{number()};
    if (name == "hermitian") {
      const std::size_t at = pos_;
      const std::string alg = identifier();
      AlgebraKind kind{};
      if (alg == "r") kind = AlgebraKind::real;
      else if (alg == "splitc") kind = AlgebraKind::split_complex;
      else if (alg == "splith") kind = AlgebraKind::split_quaternion;
      else if (alg == "splito") kind = AlgebraKind::split_octonion;
      else throw ParseError(at, "one of R, splitC, splitH, splitO", quote(alg));
      expect(',');
      return Hermitian{kind, number()};
    }
    throw ParseError(start, "family name (veronese, segre, grassmann, scroll, spinor, hermitian)", quote(name));
  }

  Modifier parse_modifier() {
    const std::size_t start = pos_;
    const std::string name = identifier();
    expect(':');
    if (name == "cone") return Cone{number()};
    if (name == "project") return Project{number()};
    throw ParseError(start, "modifier name (cone, project)", quote(name));
  }

  std::string identifier() {
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    if (out.empty()) throw ParseError(pos_, "identifier", found());
    return out;
  }

  std::size_t number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_++] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
        throw ParseError(start, "number below 2^32", "overflowing literal");
      value = value * 10 + digit;
    }
    if (pos_ == start) throw ParseError(pos_, "non-negative integer", found());
    return value;
  }

  std::vector<std::size_t> number_list() {
    std::vector<std::size_t> out{number()};
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      out.push_back(number());
    }
    return out;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, quote(std::string(1, c)), found());
    ++pos_;
  }

  [[nodiscard]] std::string found() const {
    return pos_ < text_.size() ? quote(std::string(1, text_[pos_])) : "end of input";
  }
  static std::string quote(const std::string& s) { return "'" + s + "'"; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline std::string join_numbers(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

}  // namespace detail

inline VarietySpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

/// Canonical printed form; parse_spec(to_string(s)) reproduces s.
inline std::string to_string(const VarietySpec& spec) {
  std::string out = std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Veronese>) return "veronese:" + std::to_string(f.n) + "," + std::to_string(f.d);
        else if constexpr (std::is_same_v<T, Segre>) return "segre:" + detail::join_numbers(f.factors);
        else if constexpr (std::is_same_v<T, Grassmann>)
          return "grassmann:" + std::to_string(f.m) + "," + std::to_string(f.n);
        else if constexpr (std::is_same_v<T, Scroll>) return "scroll:" + detail::join_numbers(f.degrees);
        else if constexpr (std::is_same_v<T, Spinor>) return "spinor:" + std::to_string(f.k);
        else return "hermitian:" + CompositionAlgebra(f.algebra).name() + "," + std::to_string(f.size);
      },
      spec.family);
  for (const auto& m : spec.modifiers) {
    if (const auto* cone = std::get_if<Cone>(&m)) out += "|cone:" + std::to_string(cone->c);
    else out += "|project:" + std::to_string(std::get<Project>(m).c);
  }
  return out;
}

/// Builds the chart labelled with the canonical spec string.
inline ParamMap build_labeled(const VarietySpec& spec) {
  return build(spec).relabeled(to_string(spec));
}

inline ParamMap build(std::string_view text) { return build_labeled(parse_spec(text)); }

}  // namespace secantlab
