#include "cuntz/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cuntz {

CuntzPoly CuntzPoly::scalar(int n, const Scalar& c) {
  CuntzPoly p(n);
  if (!c.is_zero()) p.terms_.emplace(MonomialKey{Word(n), Word(n)}, c);
  return p;
}

CuntzPoly CuntzPoly::generator(int n, int i) { return monomial(Word(n, {i}), Word(n)); }

CuntzPoly CuntzPoly::generator_adjoint(int n, int i) { return monomial(Word(n), Word(n, {i})); }

CuntzPoly CuntzPoly::monomial(const Word& j, const Word& k, const Scalar& c) {
  const int n = std::max(j.alphabet_size(), k.alphabet_size());
  CuntzPoly p(n);
  if (!c.is_zero()) {
    Word jj = j, kk = k;
    if (jj.alphabet_size() == 0) jj = Word(n);
    if (kk.alphabet_size() == 0) kk = Word(n);
    p.terms_.emplace(MonomialKey{std::move(jj), std::move(kk)}, c);
  }
  p.reduce();
  return p;
}

CuntzPoly CuntzPoly::adjoint() const {
  CuntzPoly p(n_);
  // conj is the identity on Q(sqrt2); contraction is symmetric under *.
  for (const auto& [key, c] : terms_) p.terms_.emplace(MonomialKey{key.right, key.left}, c);
  return p;
}

void CuntzPoly::add_term(const MonomialKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CuntzPoly& CuntzPoly::operator+=(const CuntzPoly& o) {
  if (o.n_ != n_) throw AlphabetMismatch(n_, o.n_);
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  reduce();
  return *this;
}

CuntzPoly& CuntzPoly::operator-=(const CuntzPoly& o) {
  if (o.n_ != n_) throw AlphabetMismatch(n_, o.n_);
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  reduce();
  return *this;
}

CuntzPoly& CuntzPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

CuntzPoly CuntzPoly::operator-() const {
  CuntzPoly p = *this;
  for (auto& [key, v] : p.terms_) v = -v;
  return p;
}

std::optional<MonomialKey> multiply_monomials(const MonomialKey& a, const MonomialKey& b) {
  // s_J s_K^* s_L s_M^*: s_K^* s_L = s_{L'} if L = K L', s_{K'}^* if K = L K', else 0.
  const std::string& k = a.right.key();
  const std::string& l = b.left.key();
  if (l.size() >= k.size()) {
    if (l.compare(0, k.size(), k) != 0) return std::nullopt;
    return MonomialKey{a.left + b.left.substr(k.size()), b.right};
  }
  if (k.compare(0, l.size(), l) != 0) return std::nullopt;
  return MonomialKey{a.left, b.right + a.right.substr(l.size())};
}

CuntzPoly operator*(const CuntzPoly& a, const CuntzPoly& b) {
  if (a.n_ != b.n_) throw AlphabetMismatch(a.n_, b.n_);
  CuntzPoly p(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      if (auto k = multiply_monomials(ka, kb)) p.add_term(*k, ca * cb);
  p.reduce();
  return p;
}

void CuntzPoly::reduce() {
  struct Block {
    std::vector<MonomialKey> children;
    const Scalar* coefficient = nullptr;
    bool uniform = true;
  };
  for (;;) {
    // Only the deepest contractible level is folded per pass so that a
    // parent created in this pass is never also a member of another block.
    std::size_t depth = 0;
    std::map<MonomialKey, Block> blocks;
    for (const auto& [key, c] : terms_) {
      if (key.left.empty() || key.right.empty() || key.left.back() != key.right.back()) continue;
      MonomialKey parent{key.left.substr(0, key.left.size() - 1),
                         key.right.substr(0, key.right.size() - 1)};
      Block& b = blocks[parent];
      if (b.coefficient && !(*b.coefficient == c)) b.uniform = false;
      b.coefficient = &c;
      b.children.push_back(key);
    }
    for (const auto& [parent, b] : blocks)
      if (b.uniform && b.children.size() == static_cast<std::size_t>(n_))
        depth = std::max(depth, parent.right.size() + 1);
    if (depth == 0) return;
    std::vector<std::pair<MonomialKey, Scalar>> folded;
    for (const auto& [parent, b] : blocks) {
      if (!b.uniform || b.children.size() != static_cast<std::size_t>(n_) ||
          parent.right.size() + 1 != depth)
        continue;
      folded.emplace_back(parent, *b.coefficient);
      for (const auto& child : b.children) terms_.erase(child);
    }
    for (const auto& [parent, c] : folded) add_term(parent, c);
  }
}

std::set<long> CuntzPoly::gauge_grade() const {
  std::set<long> g;
  for (const auto& [key, c] : terms_) g.insert(key.grade());
  return g;
}

std::size_t max_right_level(const CuntzPoly& x, long grade) {
  std::size_t level = 0;
  for (const auto& [key, c] : x.terms())
    if (key.grade() == grade) level = std::max(level, key.right.size());
  return level;
}

namespace {

void pad_into(CuntzPoly::TermMap& out, const MonomialKey& key, const Scalar& c, std::size_t level,
              int n) {
  if (key.right.size() == level) {
    auto [it, inserted] = out.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
    return;
  }
  for (int i = 1; i <= n; ++i) {
    MonomialKey child = key;
    child.left.push_back(i);
    child.right.push_back(i);
    pad_into(out, child, c, level, n);
  }
}

}  // namespace

CuntzPoly::TermMap expand_to_level(const CuntzPoly& x, long grade, std::size_t level) {
  CuntzPoly::TermMap out;
  for (const auto& [key, c] : x.terms()) {
    if (key.grade() != grade) continue;
    if (key.right.size() > level) throw std::invalid_argument("expand_to_level: level too small");
    pad_into(out, key, c, level, x.alphabet_size());
  }
  return out;
}

bool equals(const CuntzPoly& x, const CuntzPoly& y) {
  if (x.alphabet_size() != y.alphabet_size()) throw AlphabetMismatch(x.alphabet_size(), y.alphabet_size());
  const CuntzPoly d = x - y;
  for (long g : d.gauge_grade())
    if (!expand_to_level(d, g, max_right_level(d, g)).empty()) return false;
  return true;
}

bool operator==(const CuntzPoly& a, const CuntzPoly& b) { return equals(a, b); }

bool is_zero(const CuntzPoly& x) { return equals(x, CuntzPoly(x.alphabet_size())); }

CuntzPoly adjoint(const CuntzPoly& x) { return x.adjoint(); }

std::set<long> gauge_grade(const CuntzPoly& x) { return x.gauge_grade(); }

CuntzPoly matrix_unit(const Word& j, const Word& k) {
  if (j.size() != k.size() || j.empty())
    throw std::invalid_argument("matrix unit needs |J| = |K| >= 1, got " + j.to_string() + "," +
                                k.to_string());
  return CuntzPoly::monomial(j, k);
}

CuntzPoly word_isometry(const Word& j) { return CuntzPoly::monomial(j, Word(j.alphabet_size())); }

namespace {

std::string monomial_text(const MonomialKey& key) {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (std::size_t i = 0; i < key.left.size(); ++i) append("s" + std::to_string(key.left[i]));
  for (std::size_t i = key.right.size(); i-- > 0;) append("s" + std::to_string(key.right[i]) + "'");
  return out;
}

}  // namespace

std::string CuntzPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const std::string mono = monomial_text(key);
    Scalar coeff = c;
    bool negative = false;
    if (c.is_rational() && sgn(c.rat_part()) < 0) {
      negative = true;
      coeff = -c;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << coeff.to_expr();
    } else if (coeff.is_one()) {
      os << mono;
    } else {
      os << coeff.to_expr() << " " << mono;
    }
  }
  return os.str();
}

nlohmann::json CuntzPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  auto word_json = [](const Word& w) { return w.empty() ? std::string() : w.to_string(); };
  for (const auto& [key, c] : terms_)
    out.push_back(nlohmann::json::array({word_json(key.left), word_json(key.right), c.to_json()}));
  return out;
}

std::ostream& operator<<(std::ostream& os, const CuntzPoly& x) { return os << x.to_string(); }

}  // namespace cuntz
