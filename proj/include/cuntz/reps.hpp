#pragma once

// Permutative representations on labeled bases, branching laws of pi . m
// by predecessor-orbit search, restriction to UHF_N and the GP(+-) rules.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cuntz/morphism.hpp"
#include "cuntz/poly.hpp"
#include "cuntz/scalar.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

class NotPermutative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BranchDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Basis vector s_w e_anchor. For a cycle P(J) the anchor is the cycle
/// position p in 1..|J| (e_1 = Omega); for a chain P(K) it is n >= 0 with
/// e_n = s_{K(n)}^* Omega.
struct Label {
  Word word;
  long anchor = 1;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
  std::string to_string() const;
};

/// P(J; z) for a primitive finite J, or the chain P(K) for an eventually
/// periodic K. Chains over periodic K are handled formally: e_n and e_{n+p}
/// are distinct basis vectors.
class PermRep {
 public:
  static PermRep cycle(Word j, Phase z = {});
  static PermRep chain(EvWord k);

  bool is_cycle() const { return cycle_; }
  int alphabet_size() const;
  const Word& word() const { return j_; }
  const Phase& phase() const { return z_; }
  const EvWord& tail() const { return k_; }
  std::size_t length() const { return j_.size(); }

  Label omega() const { return Label{Word(alphabet_size()), cycle_ ? 1L : 0L}; }
  /// Folds trailing letters of w that merely retrace the cycle/chain.
  Label normalize(Word w, long anchor) const;

  /// pi(s_i) e and pi(s_i)^* e on a basis label; the phase multiplies the
  /// result (nullopt = 0).
  std::optional<std::pair<Label, Phase>> generator(int i, const Label& v) const;
  std::optional<std::pair<Label, Phase>> generator_adjoint(int i, const Label& v) const;

  /// UHF sector of a cycle label: (anchor - |w| - 1) mod |J|; 0 holds Omega.
  /// For chains the grade anchor - |w|.
  long sector(const Label& v) const;

  std::string to_string() const;
  friend bool operator==(const PermRep&, const PermRep&) = default;

 private:
  PermRep() = default;
  bool cycle_ = true;
  Word j_;
  Phase z_;
  EvWord k_;
};

/// Finite linear combination of basis labels with coefficients in
/// Q(sqrt2) times roots of unity. Phase 1/2 is folded into a sign.
class Vector {
 public:
  using Key = std::pair<Label, Phase>;
  Vector() = default;
  static Vector basis(const Label& v) { Vector x; x.add(v, Phase(), Scalar(1)); return x; }

  void add(const Label& v, Phase q, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  Vector& operator+=(const Vector& o);
  Vector& operator*=(const Scalar& c);
  friend Vector operator-(Vector a, const Vector& b);
  friend bool operator==(const Vector&, const Vector&) = default;
  std::string to_string() const;

 private:
  std::map<Key, Scalar> terms_;
};

/// pi(s_J s_K^*) on a basis label.
std::optional<std::pair<Label, Phase>> act_monomial(const PermRep& rep, const MonomialKey& key,
                                                    const Label& v);
/// pi(x) v, exact.
Vector act(const CuntzPoly& x, const Vector& v, const PermRep& rep);

// ---------------------------------------------------------------------------
// Fingerprints

enum class ComponentKind { cycle, chain, uhf_cycle, uhf_chain, gp, uhf_gp };

/// One irreducible label: P(J; z), P(K), P[J], P[K], GP(+-)[.theta], GP[+-].
struct Component {
  ComponentKind kind = ComponentKind::cycle;
  Word word;      // cycles
  Phase phase;    // O_N cycles
  EvWord tail;    // chains
  int sign = 1;   // GP
  bool theta = false;

  static Component cycle(Word j, Phase z = {});
  static Component chain(const EvWord& k);
  static Component uhf_cycle(const Word& j);
  static Component uhf_chain(const EvWord& k);
  static Component gp(int sign, bool theta = false);
  static Component uhf_gp(int sign);

  friend bool operator==(const Component&, const Component&) = default;
  friend auto operator<=>(const Component&, const Component&) = default;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

/// Multiset of components.
class Fingerprint {
 public:
  Fingerprint() = default;
  void add(const Component& c, std::size_t multiplicity = 1);
  void merge(const Fingerprint& o);
  const std::map<Component, std::size_t>& parts() const { return parts_; }
  std::size_t size() const;
  bool empty() const { return parts_.empty(); }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  /// "P(1) + P(2)", components in ascending order, repeated by multiplicity.
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::map<Component, std::size_t> parts_;
};

/// P(J^l; z) = P(J; (z+0)/l) + ... + P(J; (z+l-1)/l). J must be primitive.
Fingerprint decompose_power(const Word& j, std::size_t l, Phase z = {});
/// P(W; z) for arbitrary nonempty W, split into primitive phased cycles.
Fingerprint cycle_components(const Word& w, Phase z = {});

// ---------------------------------------------------------------------------
// Branching

/// pi . m on the labeled basis of pi, for a grade-preserving m whose
/// generator images act by basis-to-basis maps (up to roots of unity).
class BranchSystem {
 public:
  struct Step {
    int letter;   // i with t_i(prev) = phase * v
    Label prev;
    Phase phase;
  };

  BranchSystem(PermRep base, Morphism m);

  const PermRep& base() const { return base_; }
  const Morphism& morphism() const { return m_; }

  /// t_i v = pi(m(s_i)) v as (label, phase).
  std::pair<Label, Phase> t(int i, const Label& v) const;
  /// The unique predecessor of v.
  Step pred(const Label& v) const;

 private:
  std::pair<Label, Phase> single_term(const Vector& x, const char* what) const;
  PermRep base_;
  Morphism m_;
  std::vector<CuntzPoly> adjoint_images_;
};

BranchSystem compose_with_endo(const PermRep& rep, const Morphism& m);

/// A cycle of the predecessor map: pred(labels[r]) = (letters[r], labels[r+1]).
struct RawCycle {
  std::vector<Label> labels;
  Word word;      // t_word labels[0] = phase * labels[0]
  Phase phase;
};

/// The periodic spine of a chain component; labels[0] is the canonical GP
/// vector and the chain word is period^inf read from it.
struct RawChain {
  std::vector<Label> labels;
  Word period;
};

struct Certificate {
  std::string component;
  Label gp_vector;
  Word word;
  Phase phase;
  bool verified = false;
  nlohmann::json to_json() const;
};

struct BranchOptions {
  /// Seeds are all labels s_w e_a with |w| <= seed_bound; default level - 1.
  std::optional<std::size_t> seed_bound;
  bool parallel = true;
};

struct BranchResult {
  Fingerprint fingerprint;
  std::vector<RawCycle> cycles;
  std::vector<RawChain> chains;
  std::vector<Certificate> certificates;
  std::size_t seed_bound = 0;
  std::size_t seeds = 0;
  nlohmann::json to_json() const;
};

BranchResult branch(const BranchSystem& sys, const BranchOptions& opts = {});
/// Single-threaded reference search sharing one predecessor memo.
BranchResult branch_serial(const BranchSystem& sys, const BranchOptions& opts = {});

/// P(J) . m in one call.
BranchResult branch(const PermRep& rep, const Morphism& m, const BranchOptions& opts = {});

/// P[J] . m for UHF_N (m grade-preserving); J finite, any rotation. The
/// components are those UHF constituents of P(J) . m whose GP vectors lie in
/// the sector of Omega.
BranchResult uhf_branch(const Word& j, const Morphism& m, const BranchOptions& opts = {});

// ---------------------------------------------------------------------------
// Restriction to UHF_N

struct ShiftedTail {
  long eta;
  EvWord word;  // eta K with 1-padding
  EvWord tail;  // its ≈ class
};

struct UhfRestriction {
  /// Cycle case: the |J| rotations. Chain case: one representative per ≈
  /// class of the family {P[eta K]}, each of infinite multiplicity.
  Fingerprint components;
  bool infinite_multiplicity = false;
  std::vector<ShiftedTail> window;  // chain case, eta in [-4, 4] by default
  nlohmann::json to_json() const;
};

UhfRestriction restrict_to_uhf(const PermRep& rep, long window = 4);

// ---------------------------------------------------------------------------
// GP calculus

struct GpResult {
  std::optional<Fingerprint> fingerprint;
  std::string derivation;  // how the rules were applied, or why they fail
};

/// GP(sign) . m on O_2 (uhf = false) or GP[sign] . m on UHF_2 (uhf = true),
/// derived from the dihedral rules and direct-sum splitting (possibly after
/// conjugating m by u = s1 s2^* + s2 s1^*).
GpResult gp_branch(int sign, const Morphism& m, bool uhf = false);

}  // namespace cuntz
