#include <doctest.h>

#include <algorithm>

#include "cuntz/words.hpp"

using namespace cuntz;

namespace {
Word w2(std::initializer_list<int> l) { return Word(2, l); }

// every rotation, minimum by plain lexicographic comparison of vectors
std::vector<int> least_rotation(const Word& w) {
  std::vector<int> v = w.to_vector(), best = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    best = std::min(best, v);
  }
  return best;
}
}  // namespace

TEST_CASE("canonical cycle") {
  CHECK(canonical_cycle(w2({2, 1})).representative == w2({1, 2}));
  CHECK(canonical_cycle(w2({1, 1, 2, 2})).representative == w2({1, 1, 2, 2}));
  CHECK(canonical_cycle(w2({2, 2, 1, 1})) == canonical_cycle(w2({1, 1, 2, 2})));
  CHECK(canonical_cycle(w2({2, 1}), Phase(1, 2)).phase == Phase(1, 2));
  CHECK_THROWS(canonical_cycle(w2({1, 2, 1, 2})));
  CHECK_THROWS(canonical_cycle(Word(2)));
}

TEST_CASE("minimal rotation agrees with brute force") {
  for (std::size_t len = 1; len <= 8; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::vector<int> v;
      for (std::size_t i = 0; i < len; ++i) v.push_back(((bits >> i) & 1) + 1);
      const Word w(2, v);
      CHECK(rotate(w, minimal_rotation_index(w)).to_vector() == least_rotation(w));
    }
}

TEST_CASE("primitive split") {
  CHECK(primitive_split(w2({1, 2, 1, 2})).root == w2({1, 2}));
  CHECK(primitive_split(w2({1, 2, 1, 2})).power == 2);
  CHECK(primitive_split(w2({1, 2})).power == 1);
  const auto s = primitive_split(w2({1, 1, 2, 1, 1, 2, 1, 1, 2}));
  CHECK(s.root == w2({1, 1, 2}));
  CHECK(s.power == 3);
  // brute force over divisors of the length
  for (unsigned bits = 0; bits < 64; ++bits) {
    std::vector<int> v;
    for (int i = 0; i < 6; ++i) v.push_back(((bits >> i) & 1) + 1);
    std::size_t root = 6;
    for (std::size_t d : {1, 2, 3}) {
      bool ok = true;
      for (std::size_t i = d; i < 6; ++i) ok = ok && v[i] == v[i - d];
      if (ok) { root = d; break; }
    }
    CHECK(primitive_split(Word(2, v)).root.size() == root);
  }
}

TEST_CASE("rotations") {
  CHECK(rotations(w2({1, 2})) == std::vector<Word>{w2({1, 2}), w2({2, 1})});
  CHECK(rotations(w2({1})) == std::vector<Word>{w2({1})});
  CHECK(rotations(Word(3, {1, 2, 3})) ==
        std::vector<Word>{Word(3, {1, 2, 3}), Word(3, {2, 3, 1}), Word(3, {3, 1, 2})});
}

TEST_CASE("precedes is the base-N order") {
  CHECK(precedes(w2({1, 2}), w2({2, 1})));
  CHECK(precedes(w2({1, 1}), w2({1, 1})));
  CHECK_FALSE(precedes(w2({2, 1}), w2({1, 2})));
}

TEST_CASE("shift with 1-padding") {
  const EvWord k = parse_evword("(12)^inf", 2);
  const EvWord s1 = shift(k, 1);
  CHECK(s1.prefix().empty());
  CHECK(s1.period() == w2({2, 1}));
  // compare 8 letters of eta K against K_{n+eta}
  const EvWord sm = shift(k, -1);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(sm.letter(n) == (n == 1 ? 1 : k.letter(n - 1)));
  CHECK(sm.prefix() == w2({1}));
  const EvWord t = shift(parse_evword("(2)^inf", 2), -3);
  CHECK(t.prefix() == w2({1, 1, 1}));
  CHECK(t.period() == w2({2}));
}

TEST_CASE("tail equality") {
  const EvWord k = parse_evword("(12)^inf", 2);
  CHECK(tail_equal(k, parse_evword("22(12)^inf", 2)));
  CHECK_FALSE(tail_equal(k, parse_evword("(21)^inf", 2)));
  CHECK(tail_equal(k, k));
  // eventual agreement checked letter by letter
  for (const char* other : {"2(12)^inf", "12(12)^inf", "1(21)^inf", "(1)^inf", "222(12)^inf", "2221(21)^inf"}) {
    const EvWord o = parse_evword(other, 2);
    bool agree = true;
    for (std::size_t n = 10; n <= 40; ++n) agree = agree && o.letter(n) == k.letter(n);
    CHECK(tail_equal(k, o) == agree);
  }
}

TEST_CASE("evword canonical form and printing") {
  const EvWord a = parse_evword("11(12)^inf", 2);
  CHECK(a.to_string() == "11(12)^inf");
  CHECK(parse_evword("2(12)^inf", 2).to_string() == "(21)^inf");
  CHECK(parse_evword("1(21)^inf", 2) == parse_evword("(12)^inf", 2));
  CHECK(parse_evword("(1212)^inf", 2).period() == w2({1, 2}));
  CHECK(tail_class(parse_evword("2(21)^inf", 2)) == w2({1, 2}));
}

TEST_CASE("phases") {
  CHECK(Phase(3, 2) == Phase(1, 2));
  CHECK(Phase(-1, 3) == Phase(2, 3));
  CHECK(Phase(1, 2) + Phase(1, 2) == Phase());
  CHECK(Phase().roots(3) == std::vector<Phase>{Phase(0, 1), Phase(1, 3), Phase(2, 3)});
}
