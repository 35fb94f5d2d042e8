#include "cuntz/words.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cuntz {

Word::Word(int alphabet_size, std::initializer_list<int> letters) : n_(alphabet_size) {
  for (int l : letters) push_back(l);
}

Word::Word(int alphabet_size, const std::vector<int>& letters) : n_(alphabet_size) {
  for (int l : letters) push_back(l);
}

Word Word::from_key(int n, std::string key) {
  Word w(n);
  w.letters_ = std::move(key);
  return w;
}

void Word::push_back(int letter) {
  if (letter < 1 || letter > n_ || letter > 255)
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside 1.." +
                                std::to_string(n_));
  letters_.push_back(static_cast<char>(letter));
}

void Word::push_front(int letter) {
  push_back(letter);
  std::rotate(letters_.rbegin(), letters_.rbegin() + 1, letters_.rend());
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  return from_key(n_, letters_.substr(pos, len));
}

Word Word::operator+(const Word& other) const {
  Word w = *this;
  w += other;
  return w;
}

Word& Word::operator+=(const Word& other) {
  if (n_ == 0) n_ = other.n_;
  letters_ += other.letters_;
  return *this;
}

Word Word::power(std::size_t m) const {
  Word w(n_);
  for (std::size_t i = 0; i < m; ++i) w.letters_ += letters_;
  return w;
}

std::vector<int> Word::to_vector() const {
  std::vector<int> v;
  v.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) v.push_back((*this)[i]);
  return v;
}

std::string Word::to_string() const {
  if (empty()) return "0";
  std::string out;
  const bool wide = n_ > 9;
  for (std::size_t i = 0; i < size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string((*this)[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  const int c = a.letters_.compare(b.letters_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Word parse_word(std::string_view text, int alphabet_size) {
  Word w(alphabet_size);
  if (text.empty() || text == "0") return w;
  if (text.find(',') != std::string_view::npos || alphabet_size > 9) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
        throw std::invalid_argument("bad word literal '" + std::string(text) + "'");
      w.push_back(v);
      pos = end + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw std::invalid_argument("bad word literal '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return w;
}

// ---------------------------------------------------------------------------

Phase::Phase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Phase Phase::operator+(const Phase& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return Phase(num_ * (l / den_) + o.num_ * (l / o.den_), l);
}

std::vector<Phase> Phase::roots(std::int64_t r) const {
  std::vector<Phase> out;
  for (std::int64_t k = 0; k < r; ++k) out.emplace_back(num_ + k * den_, den_ * r);
  return out;
}

std::string Phase::to_string() const {
  if (num_ == 0) return "0";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Phase Phase::parse(std::string_view text) {
  std::int64_t num = 0, den = 1;
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view t, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw std::invalid_argument("bad phase '" + std::string(text) + "'");
  };
  if (slash == std::string_view::npos) {
    parse_int(text, num);
  } else {
    parse_int(text.substr(0, slash), num);
    parse_int(text.substr(slash + 1), den);
  }
  return Phase(num, den);
}

std::strong_ordering operator<=>(const Phase& a, const Phase& b) {
  // Values lie in [0,1) with small denominators; cross-multiplication is exact.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

// ---------------------------------------------------------------------------

std::size_t minimal_rotation_index(const Word& w) {
  const std::string s = w.key() + w.key();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.size());
  std::vector<std::ptrdiff_t> f(s.size(), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < n; ++j) {
    const char sj = s[j];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return w.empty() ? 0 : static_cast<std::size_t>(k) % w.size();
}

Word rotate(const Word& w, std::size_t start) {
  if (w.empty()) return w;
  start %= w.size();
  return w.substr(start) + w.substr(0, start);
}

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(rotate(w, i));
  return out;
}

PrimitiveSplit primitive_split(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_split of the empty word");
  const std::string& s = w.key();
  const std::size_t n = s.size();
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  if (n % p != 0) return {w, 1};
  return {w.substr(0, p), n / p};
}

bool is_primitive(const Word& w) { return primitive_split(w).power == 1; }

CycleClass canonical_cycle(const Word& w, Phase phase) {
  if (w.empty()) throw std::invalid_argument("canonical_cycle of the empty word");
  if (!is_primitive(w))
    throw std::invalid_argument("canonical_cycle: word " + w.to_string() +
                                " is periodic; split powers first");
  return {rotate(w, minimal_rotation_index(w)), phase};
}

bool precedes(const Word& j1, const Word& j2) {
  if (j1.size() != j2.size()) throw std::invalid_argument("precedes: length mismatch");
  return j1.key() <= j2.key();
}

// ---------------------------------------------------------------------------

EvWord::EvWord(Word prefix, Word period) : prefix_(std::move(prefix)) {
  if (period.empty()) throw std::invalid_argument("EvWord with empty period");
  period_ = primitive_split(period).root;
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    period_ = rotate(period_, period_.size() - 1);
    prefix_.pop_back();
  }
}

int EvWord::letter(std::size_t pos) const {
  if (pos == 0) throw std::out_of_range("EvWord letters are 1-based");
  if (pos <= prefix_.size()) return prefix_[pos - 1];
  return period_[(pos - prefix_.size() - 1) % period_.size()];
}

Word EvWord::head(std::size_t len) const {
  Word w(alphabet_size());
  for (std::size_t i = 1; i <= len; ++i) w.push_back(letter(i));
  return w;
}

std::string EvWord::to_string() const {
  return (prefix_.empty() ? std::string() : prefix_.to_string()) + "(" + period_.to_string() +
         ")^inf";
}

std::ostream& operator<<(std::ostream& os, const EvWord& w) { return os << w.to_string(); }

EvWord parse_evword(std::string_view text, int alphabet_size) {
  const auto open = text.find('(');
  const auto close = text.find(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      text.substr(close + 1) != "^inf")
    throw std::invalid_argument("bad eventually periodic word '" + std::string(text) + "'");
  return EvWord(parse_word(text.substr(0, open), alphabet_size),
                parse_word(text.substr(open + 1, close - open - 1), alphabet_size));
}

EvWord shift(const EvWord& k, long eta) {
  const int n = k.alphabet_size();
  if (eta <= 0) {
    Word pad = Word(n, {1}).power(static_cast<std::size_t>(-eta));
    return EvWord(pad + k.prefix(), k.period());
  }
  const std::size_t e = static_cast<std::size_t>(eta);
  const std::size_t a = k.prefix().size();
  if (e <= a) return EvWord(k.prefix().substr(e), k.period());
  return EvWord(Word(n), rotate(k.period(), (e - a) % k.period().size()));
}

bool tail_equal(const EvWord& a, const EvWord& b) {
  const std::size_t start = std::max(a.prefix().size(), b.prefix().size()) + 1;
  const std::size_t span = std::lcm(a.period().size(), b.period().size());
  for (std::size_t pos = start; pos < start + span; ++pos)
    if (a.letter(pos) != b.letter(pos)) return false;
  return true;
}

EvWord aligned_tail(const EvWord& k) {
  const std::size_t p = k.period().size();
  const std::size_t a = k.prefix().size();
  // K_n for n > a equals period[(n - a - 1) mod p]; position 1 therefore
  // reads period[(-a) mod p].
  return EvWord(Word(k.alphabet_size()), rotate(k.period(), (p - a % p) % p));
}

Word tail_class(const EvWord& k) {
  return rotate(k.period(), minimal_rotation_index(k.period()));
}

}  // namespace cuntz
