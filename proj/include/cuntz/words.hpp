#pragma once

// Multi-index combinatorics over the alphabet {1..N}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cuntz {

/// A finite word over {1..N}. The empty word is the identity for
/// concatenation. Letters are stored one per byte.
class Word {
 public:
  Word() = default;
  explicit Word(int alphabet_size) : n_(alphabet_size) {}
  Word(int alphabet_size, std::initializer_list<int> letters);
  Word(int alphabet_size, const std::vector<int>& letters);

  int alphabet_size() const { return n_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  int front() const { return (*this)[0]; }
  int back() const { return (*this)[size() - 1]; }

  void push_back(int letter);
  void pop_back() { letters_.pop_back(); }
  void push_front(int letter);

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;
  Word operator+(const Word& other) const;
  Word& operator+=(const Word& other);
  Word power(std::size_t m) const;
  std::vector<int> to_vector() const;

  /// Raw byte key; equal keys mean equal words over the same alphabet.
  const std::string& key() const { return letters_; }

  /// "1122" for N <= 9, "10,2,3" otherwise; "0" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  /// Length-lexicographic order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  static Word from_key(int n, std::string key);
  int n_ = 0;
  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Parses "1122", "10,2,3" or "0"/"" (empty word). Throws std::invalid_argument.
Word parse_word(std::string_view text, int alphabet_size);

/// A root of unity e^{2 pi i q} stored as the reduced fraction q in [0, 1).
class Phase {
 public:
  Phase() = default;
  Phase(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(const Phase& o) const;
  Phase operator-() const { return Phase(-num_, den_); }
  Phase operator-(const Phase& o) const { return *this + (-o); }
  /// The r-th roots of this phase: (q + k) / r for k = 0..r-1.
  std::vector<Phase> roots(std::int64_t r) const;

  std::string to_string() const;
  static Phase parse(std::string_view text);

  friend bool operator==(const Phase&, const Phase&) = default;
  friend std::strong_ordering operator<=>(const Phase& a, const Phase& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct CycleClass {
  Word representative;
  Phase phase;
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
  friend auto operator<=>(const CycleClass&, const CycleClass&) = default;
};

struct PrimitiveSplit {
  Word root;
  std::size_t power = 1;
};

/// Start index of the lexicographically least rotation (Booth).
std::size_t minimal_rotation_index(const Word& w);
/// Rotation beginning at 0-based position `start`.
Word rotate(const Word& w, std::size_t start);
/// All |w| rotations; element i starts at position i.
std::vector<Word> rotations(const Word& w);

PrimitiveSplit primitive_split(const Word& w);
bool is_primitive(const Word& w);

/// Throws std::invalid_argument on empty or periodic input.
CycleClass canonical_cycle(const Word& w, Phase phase = {});

/// J1 ≺ J2 for equal-length words, i.e. J1 <= J2 as base-N numerals.
bool precedes(const Word& j1, const Word& j2);

/// Eventually periodic infinite word prefix (period)^inf, kept canonical:
/// the period is primitive and the prefix cannot be shortened by rotating
/// the period.
class EvWord {
 public:
  EvWord() = default;
  EvWord(Word prefix, Word period);

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }
  int alphabet_size() const { return period_.alphabet_size(); }
  /// 1-based letter access.
  int letter(std::size_t pos) const;
  Word head(std::size_t len) const;

  /// "2(12)^inf"
  std::string to_string() const;

  friend bool operator==(const EvWord&, const EvWord&) = default;
  friend auto operator<=>(const EvWord&, const EvWord&) = default;

 private:
  Word prefix_;
  Word period_;
};

std::ostream& operator<<(std::ostream& os, const EvWord& w);

EvWord parse_evword(std::string_view text, int alphabet_size);

/// (eta K)_n = K_{n+eta} for n + eta >= 1, else 1.
EvWord shift(const EvWord& k, long eta);

/// Positional eventual agreement (the relation ≈).
bool tail_equal(const EvWord& a, const EvWord& b);

/// Purely periodic representative of the ≈ class of k.
EvWord aligned_tail(const EvWord& k);

/// Offset-insensitive tail class (the relation ∼ on infinite words): the
/// least rotation of the primitive period.
Word tail_class(const EvWord& k);

}  // namespace cuntz
