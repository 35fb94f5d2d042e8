#pragma once

// Text front end: expressions in s_i / a_n / b_k, endomorphism names,
// representation labels and printed branching laws.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cuntz/fermions.hpp"
#include "cuntz/morphism.hpp"
#include "cuntz/poly.hpp"
#include "cuntz/reps.hpp"

namespace cuntz {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::invalid_argument("error at position " + std::to_string(position) + ": " + what),
        position_(position),
        message_(what) {}
  std::size_t position() const { return position_; }
  const std::string& message() const { return message_; }
  /// The same error moved by `offset` characters (for embedded fragments).
  ParseError shifted(std::size_t offset) const { return ParseError(position_ + offset, message_); }

 private:
  std::size_t position_;
  std::string message_;
};

/// Grammar: sums and differences of products; factors are integers, p/q,
/// r2 (sqrt 2), I, s<digits>, a<n>, b[<half-integer>], parenthesized or
/// braced subexpressions; a postfix ' takes the adjoint. For N <= 9,
/// "s12" is the word isometry s1 s2; for larger N it is generator 12.
/// a_n and b_k are mapped into O_2 through the fermion embedding.
CuntzPoly parse_poly(std::string_view text, int n = 2);

/// Same grammar over a_n and b_k only (no s_i).
CarExpr parse_car(std::string_view text);

/// "psi_142", "psi_(12)(34)", "142", "nakanishi", "alpha", "beta1",
/// "beta2", "theta", "phi", "phi_inverse", "iota", compositions with ".",
/// "Ad u . <endo>" (u = s1 s2' + s2 s1') or "Ad(<expr>) . <endo>", and
/// explicit images "map(<expr>, <expr>, ...)".
Morphism parse_endo(std::string_view text, int n = 2);

enum class RepKind { cycle, chain, uhf_cycle, uhf_chain, gp, uhf_gp, fermion };

struct RepSpec {
  RepKind kind = RepKind::cycle;
  Word word;          // cycles (may be periodic)
  Phase phase;        // O_N cycles
  EvWord tail;        // chains
  int sign = 1;       // GP
  FermionRep fermion = FermionRep::fock;
  std::string to_string() const;
};

/// "P(12)", "P(12;1/2)", "P(2(12)^inf)", "P[12]", "P[(12)^inf]", "GP(+)",
/// "GP[-]", "fock", "fock*", "iw", "iw*".
RepSpec parse_rep(std::string_view text, int n = 2);

/// A printed branching law such as "P(1) + P(2)", "P[12] (+) P[21]",
/// "GP(+) + GP(+).theta" or "IW + IW*". Periodic cycle words are split into
/// phased primitive parts. "---" gives nullopt.
std::optional<Fingerprint> parse_fingerprint(std::string_view text, int n = 2);

}  // namespace cuntz
