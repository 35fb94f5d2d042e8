#pragma once

// Unital *-endomorphisms of O_N given by the images of the generators.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cuntz/poly.hpp"

namespace cuntz {

class InvalidMorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// s_i -> images[i-1]. Construction checks the Cuntz relations
/// m(s_i)^* m(s_j) = delta_ij I and sum_i m(s_i) m(s_i)^* = I.
class Morphism {
 public:
  Morphism(std::vector<CuntzPoly> images, std::string name = {});

  /// Builds without validation; callers must know the relations hold.
  static Morphism unchecked(std::vector<CuntzPoly> images, std::string name = {});
  static std::optional<Morphism> try_make(std::vector<CuntzPoly> images, std::string name = {});
  static Morphism identity(int n);

  int alphabet_size() const { return images_.front().alphabet_size(); }
  const std::vector<CuntzPoly>& images() const { return images_; }
  /// Image of s_i, 1-based.
  const CuntzPoly& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Every generator image is homogeneous of grade 1, so the map commutes
  /// with the gauge action and restricts to UHF_N.
  bool grade_preserving() const;
  /// Largest word length appearing in the generator images.
  std::size_t level() const;

  /// Equality of generator images.
  friend bool operator==(const Morphism& a, const Morphism& b);

 private:
  Morphism() = default;
  std::vector<CuntzPoly> images_;
  std::string name_;
};

bool satisfies_cuntz_relations(const std::vector<CuntzPoly>& images);
bool is_unitary(const CuntzPoly& u);

/// The *-homomorphic extension of m applied to x.
CuntzPoly apply(const Morphism& m, const CuntzPoly& x);
/// m(s_J) for a word J.
CuntzPoly apply_word(const Morphism& m, const Word& j);

/// (m1 . m2)(x) = m1(m2(x)).
Morphism compose(const Morphism& m1, const Morphism& m2);
/// s_i -> u m(s_i) u^*; throws InvalidMorphism when u is not unitary.
Morphism ad_unitary(const CuntzPoly& u, const Morphism& m);

/// zeta(x) = s_1 x s_1^* - s_2 x s_2^* on O_2 (linear, not multiplicative).
CuntzPoly zeta(const CuntzPoly& x);

/// alpha, beta1, beta2, theta, phi, phi_inverse, phi_rot, phi_rot_inverse,
/// iota (all on O_2).
Morphism named_automorphism(std::string_view tag);

/// s_i -> sign[i] s_{target[i]} on O_2: the dihedral group generated by
/// alpha, beta1 and beta2.
struct SignedPermutation {
  std::array<int, 2> target{1, 2};
  std::array<int, 2> sign{1, 1};
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  SignedPermutation then(const SignedPermutation& inner) const;  // this . inner
  Morphism to_morphism() const;
};

std::optional<SignedPermutation> as_signed_permutation(const Morphism& m);
/// Name in the dictionary {iota, alpha, beta1, beta2, theta, alpha.beta1,
/// alpha.beta2, alpha.theta}.
std::string dictionary_name(const SignedPermutation& g);
const std::vector<SignedPermutation>& dihedral_group();

/// A permutation of the N^l words of length l, stored on 0-based indices in
/// lexicographic order (for N = 2, l = 2: 1 <-> 11, 2 <-> 12, 3 <-> 21,
/// 4 <-> 22 after shifting to 1-based points).
class WordPermutation {
 public:
  WordPermutation(int n, int l, std::vector<int> image);
  static WordPermutation identity(int n, int l);
  /// "12", "1324", "(12)(34)", "(1,10,3)" or "id" over the points 1..N^l.
  static WordPermutation parse_cycles(std::string_view text, int n, int l);

  int alphabet_size() const { return n_; }
  int order() const { return l_; }
  std::size_t points() const { return image_.size(); }
  int operator()(int index) const { return image_[static_cast<std::size_t>(index)]; }
  Word apply(const Word& w) const;
  WordPermutation inverse() const;

  Word word_of(int index) const;
  int index_of(const Word& w) const;

  /// Canonical cycle notation as printed in tables: "id", "13", "(12)(34)".
  std::string to_cycle_string() const;

  friend bool operator==(const WordPermutation&, const WordPermutation&) = default;

 private:
  int n_;
  int l_;
  std::vector<int> image_;
};

/// The permutative endomorphism psi_sigma(s_i) = u_sigma s_i with
/// u_sigma = sum_J s_{sigma(J)} s_J^*.
class PermEndo {
 public:
  explicit PermEndo(WordPermutation sigma, std::string name = {});

  const WordPermutation& sigma() const { return sigma_; }
  int alphabet_size() const { return sigma_.alphabet_size(); }
  int order() const { return sigma_.order(); }
  const CuntzPoly& unitary() const { return unitary_; }
  const Morphism& morphism() const { return morphism_; }
  const std::string& name() const { return morphism_.name(); }

 private:
  WordPermutation sigma_;
  CuntzPoly unitary_;
  Morphism morphism_;
};

PermEndo make_perm_endo(int n, int l, const WordPermutation& sigma);
/// psi from cycle notation, e.g. perm_endo("142") or perm_endo("(12)(34)").
PermEndo perm_endo(std::string_view cycles, int n = 2, int l = 2);
/// The Nakanishi endomorphism of O_3.
PermEndo nakanishi();
/// All (N^l)! permutations, in lexicographic order of their image tables.
std::vector<WordPermutation> all_word_permutations(int n, int l);

enum class Frame { xi, xi_prime };
std::string to_string(Frame f);

struct DirectSum {
  Morphism first;
  Morphism second;
  Frame frame;
};

/// Recognizes m = phi_1 +_zeta phi_2 for the frames xi = (s1, s2) and
/// xi' = ((s1+s2)/r2, (s1-s2)/r2). Only O_2.
std::optional<DirectSum> split_direct_sum(const Morphism& m);

/// zeta_1 phi_1(.) zeta_1^* + zeta_2 phi_2(.) zeta_2^* on generators.
Morphism direct_sum(const Morphism& first, const Morphism& second, Frame frame);

}  // namespace cuntz
