#ifndef PNF_DIFFALG_PARSE_HPP
#define PNF_DIFFALG_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "diffalg/diffpoly.hpp"

namespace pnf::diffalg {

/// Parse an expression in the grammar
///   expr   := sign? term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := base ("^" uint)?
///   base   := rational | "G" | var | "(" expr ")"
///   var    := letter uint?        (letter "t" for TAU, "k" for KAPPA)
/// "t" and "t0" both denote the generator; "tN" its N-th derivative.
/// When `expect` is empty the generator is inferred from the variables
/// (defaulting to TAU for constant expressions); mixing letters is an
/// error either way.
DiffPoly parse(std::string_view text, std::optional<Generator> expect = {});

/// Canonical text form; parse(format(p)) == p and the output is unique
/// per value.
std::string format(const DiffPoly& p);

std::string format(const Coefficient& c);

}  // namespace pnf::diffalg

#endif
