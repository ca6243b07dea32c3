#include "diffalg/parse.hpp"

#include <cctype>
#include <cstdint>

namespace pnf::diffalg {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::optional<Generator> expect)
      : text_(text), expect_(expect) {}

  DiffPoly run() {
    DiffPoly p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error(pos_, "trailing input");
    return p;
  }

  Generator generator() const { return seen_.value_or(expect_.value_or(Generator::Tau)); }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::uint64_t parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw parse_error(pos_, "expected number");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > static_cast<std::uint64_t>(INT64_MAX))
        throw parse_error(pos_, "number literal too large");
      ++pos_;
    }
    return v;
  }

  DiffPoly parse_expr() {
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    DiffPoly acc = parse_term();
    if (sign < 0) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = promote(acc) + promote(parse_term());
      } else if (eat('-')) {
        acc = promote(acc) - promote(parse_term());
      } else {
        break;
      }
    }
    return acc;
  }

  DiffPoly parse_term() {
    DiffPoly acc = parse_factor();
    while (eat('*')) acc = promote(acc) * promote(parse_factor());
    return acc;
  }

  DiffPoly parse_factor() {
    DiffPoly base = parse_base();
    if (eat('^')) {
      std::uint64_t e = parse_uint();
      DiffPoly out = DiffPoly::constant(1, base.generator());
      for (std::uint64_t i = 0; i < e; ++i) out = promote(out) * promote(base);
      return out;
    }
    return base;
  }

  DiffPoly parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error(pos_, "expected factor");
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      DiffPoly inner = parse_expr();
      if (!eat(')')) throw parse_error(pos_, "unbalanced parenthesis opened at offset " +
                                                 std::to_string(open));
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = parse_uint();
      if (eat('/')) {
        std::size_t dpos = pos_;
        std::uint64_t d = parse_uint();
        if (d == 0) throw parse_error(dpos, "zero denominator");
        return DiffPoly::constant(
            Coefficient(Rational(static_cast<std::int64_t>(n),
                                 static_cast<std::int64_t>(d))),
            current_generator());
      }
      return DiffPoly::constant(static_cast<std::int64_t>(n), current_generator());
    }
    if (c == 'G') {
      ++pos_;
      return DiffPoly::constant(Coefficient::g(), current_generator());
    }
    if (c == 't' || c == 'k') {
      Generator g = (c == 't') ? Generator::Tau : Generator::Kappa;
      note_generator(g, pos_);
      ++pos_;
      unsigned order = 0;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::uint64_t o = parse_uint();
        if (o > 64) throw parse_error(pos_, "derivative order too large");
        order = static_cast<unsigned>(o);
      }
      return DiffPoly::derivative_var(order, g);
    }
    throw parse_error(pos_, std::string("unknown symbol '") + c + "'");
  }

  void note_generator(Generator g, std::size_t at) {
    if (expect_ && *expect_ != g)
      throw Error(ErrorCode::GeneratorMismatch,
                  "unexpected generator letter '" +
                      std::string(1, generator_letter(g)) + "' at offset " +
                      std::to_string(at));
    if (seen_ && *seen_ != g)
      throw Error(ErrorCode::GeneratorMismatch,
                  "expression mixes generator letters 't' and 'k' (offset " +
                      std::to_string(at) + ")");
    seen_ = g;
  }

  Generator current_generator() const {
    return seen_.value_or(expect_.value_or(Generator::Tau));
  }

  // Constants parsed before the first variable may carry the default
  // generator label; re-tag them once the letter is known.
  DiffPoly promote(const DiffPoly& p) const {
    Generator g = current_generator();
    if (p.generator() == g || !p.is_constant()) return p;
    return DiffPoly::constant(p.constant_term(), g);
  }

  std::string_view text_;
  std::optional<Generator> expect_;
  std::optional<Generator> seen_;
  std::size_t pos_ = 0;
};

void append_rational(std::string& out, const Rational& r, bool leading,
                     bool has_tail) {
  Rational mag = r.sign() < 0 ? -r : r;
  if (leading) {
    if (r.sign() < 0) out += "-";
  } else {
    out += r.sign() < 0 ? " - " : " + ";
  }
  if (!mag.is_one() || !has_tail) {
    out += mag.str();
    if (has_tail) out += "*";
  }
}

}  // namespace

DiffPoly parse(std::string_view text, std::optional<Generator> expect) {
  Parser parser(text, expect);
  DiffPoly p = parser.run();
  // A purely constant expression still gets a definite label.
  if (p.is_constant() && p.generator() != parser.generator())
    p = DiffPoly::constant(p.constant_term(), parser.generator());
  return p;
}

std::string format(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  const char letter = generator_letter(p.generator());
  std::string out;
  bool leading = true;
  for (const auto& [mono, coeff] : p.terms()) {
    std::string vars;
    for (const auto& [order, e] : mono.exponents()) {
      if (!vars.empty()) vars += "*";
      vars += letter;
      if (order > 0) vars += std::to_string(order);
      if (e > 1) vars += "^" + std::to_string(e);
    }
    for (const auto& [gexp, r] : coeff.terms()) {
      std::string tail;
      if (gexp > 0) {
        tail = "G";
        if (gexp > 1) tail += "^" + std::to_string(gexp);
      }
      if (!vars.empty()) {
        if (!tail.empty()) tail += "*";
        tail += vars;
      }
      append_rational(out, r, leading, !tail.empty());
      out += tail;
      leading = false;
    }
  }
  return out;
}

std::string format(const Coefficient& c) {
  return format(DiffPoly::constant(c, Generator::Tau));
}

}  // namespace pnf::diffalg
