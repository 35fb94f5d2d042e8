#include "cuntz/parse.hpp"

#include <cctype>
#include <charconv>
#include <memory>
#include <vector>

namespace cuntz {

namespace {

struct Node {
  enum Kind { sum, product, negate, adjoint, number, sgen, agen, bgen, munit } kind = number;
  std::size_t pos = 0;
  std::vector<Node> kids;
  Scalar value;           // number
  std::string digits;     // sgen, munit row
  std::string digits2;    // munit column
  int index = 0;          // agen
  HalfInt half;           // bgen
};

Node make(Node::Kind kind, std::size_t pos, std::vector<Node> kids = {}) {
  Node n;
  n.kind = kind;
  n.pos = pos;
  n.kids = std::move(kids);
  return n;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : t_(text) {}

  Node parse() {
    skip();
    if (i_ == t_.size()) throw ParseError(i_, "expected an expression");
    Node n = sum();
    skip();
    if (i_ != t_.size()) throw ParseError(i_, std::string("unexpected '") + t_[i_] + "'");
    return n;
  }

 private:
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < t_.size() && t_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError(i_, std::string("expected '") + c + "'");
    ++i_;
  }
  bool starts_factor() {
    skip();
    if (i_ >= t_.size()) return false;
    const char c = t_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '{' || c == 's' || c == 'a' ||
           c == 'b' || c == 'r' || c == 'I' || c == 'E';
  }

  Node sum() {
    Node out = make(Node::sum, i_);
    bool negative = false;
    if (peek('-')) {
      ++i_;
      negative = true;
    } else if (peek('+')) {
      ++i_;
    }
    for (;;) {
      Node t = product();
      if (negative) t = make(Node::negate, t.pos, {std::move(t)});
      out.kids.push_back(std::move(t));
      if (peek('+')) {
        ++i_;
        negative = false;
      } else if (peek('-')) {
        ++i_;
        negative = true;
      } else {
        break;
      }
    }
    return out.kids.size() == 1 ? std::move(out.kids.front()) : out;
  }

  Node product() {
    Node out = make(Node::product, i_);
    out.kids.push_back(postfix());
    for (;;) {
      if (peek('*')) {
        ++i_;
        out.kids.push_back(postfix());
      } else if (peek('/')) {
        ++i_;
        Node d = postfix();
        if (d.kind != Node::number) throw ParseError(d.pos, "can only divide by a scalar literal");
        if (d.value.is_zero()) throw ParseError(d.pos, "division by zero");
        d.value = d.value.inverse();
        out.kids.push_back(std::move(d));
      } else if (starts_factor()) {
        out.kids.push_back(postfix());
      } else {
        break;
      }
    }
    return out.kids.size() == 1 ? std::move(out.kids.front()) : out;
  }

  Node postfix() {
    Node n = primary();
    for (;;) {
      if (star_adjoint()) {
        ++i_;
      } else if (peek('\'')) {
        ++i_;
      } else {
        break;
      }
      n = make(Node::adjoint, n.pos, {std::move(n)});
    }
    return n;
  }

  // "s2*" is an adjoint when the star hugs the factor and is followed by a
  // space, an operator or the end; "s1*s2" and "s1 * s2" are products.
  bool star_adjoint() const {
    if (i_ >= t_.size() || t_[i_] != '*') return false;
    if (i_ + 1 == t_.size()) return true;
    const char c = t_[i_ + 1];
    return std::isspace(static_cast<unsigned char>(c)) || std::string_view("+-)}'*,").find(c) != std::string_view::npos;
  }

  std::string digits() {
    std::string d;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) d += t_[i_++];
    return d;
  }

  long integer(std::size_t at, const std::string& d) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || ptr != d.data() + d.size()) throw ParseError(at, "bad integer '" + d + "'");
    return v;
  }

  Node primary() {
    skip();
    const std::size_t at = i_;
    if (i_ >= t_.size()) throw ParseError(at, "expected a factor");
    const char c = t_[i_];
    if (c == '(' || c == '{') {
      ++i_;
      Node n = sum();
      expect(c == '(' ? ')' : '}');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer(at, digits());
      long den = 1;
      if (i_ < t_.size() && t_[i_] == '/') {
        ++i_;
        const std::size_t dpos = i_;
        const std::string d = digits();
        if (d.empty()) throw ParseError(dpos, "expected a denominator");
        den = integer(dpos, d);
        if (den == 0) throw ParseError(dpos, "zero denominator");
      }
      Node n = make(Node::number, at);
      n.value = Scalar::rational(num, den);
      return n;
    }
    std::string word;
    while (i_ < t_.size() && (std::isalpha(static_cast<unsigned char>(t_[i_])) || t_[i_] == '_')) word += t_[i_++];
    if (word == "r" || word == "sqrt") {
      const std::string d = digits();
      if (d != "2") throw ParseError(at, "only sqrt 2 is available (write r2)");
      Node n = make(Node::number, at);
      n.value = Scalar::sqrt2();
      return n;
    }
    if (word == "I") {
      Node n = make(Node::number, at);
      n.value = Scalar(1);
      return n;
    }
    if (word == "s" || word == "a") {
      const std::string d = digits();
      if (d.empty()) throw ParseError(i_, "expected an index after '" + word + "'");
      Node n = make(word == "s" ? Node::sgen : Node::agen, at);
      n.digits = d;
      n.index = static_cast<int>(integer(at + 1, d));
      if (word == "a" && n.index < 1) throw ParseError(at + 1, "fermion index must be >= 1");
      return n;
    }
    if (word == "E") {
      expect('[');
      skip();
      Node n = make(Node::munit, at);
      n.digits = digits();
      expect(',');
      skip();
      n.digits2 = digits();
      expect(']');
      if (n.digits.empty() || n.digits.size() != n.digits2.size())
        throw ParseError(at, "E[J,K] needs nonempty words of equal length");
      return n;
    }
    if (word == "b") {
      expect('[');
      skip();
      std::string text;
      const std::size_t hpos = i_;
      while (i_ < t_.size() && t_[i_] != ']') text += t_[i_++];
      expect(']');
      Node n = make(Node::bgen, at);
      try {
        n.half = HalfInt::parse(text);
      } catch (const std::exception& e) {
        throw ParseError(hpos, e.what());
      }
      return n;
    }
    if (word.empty()) throw ParseError(at, std::string("unexpected '") + c + "'");
    throw ParseError(at, "unknown identifier '" + word + "'");
  }

  std::string_view t_;
  std::size_t i_ = 0;
};

CuntzPoly eval_poly(const Node& n, int alphabet) {
  switch (n.kind) {
    case Node::sum: {
      CuntzPoly out(alphabet);
      for (const auto& k : n.kids) out += eval_poly(k, alphabet);
      return out;
    }
    case Node::product: {
      CuntzPoly out = CuntzPoly::identity(alphabet);
      for (const auto& k : n.kids) out = out * eval_poly(k, alphabet);
      return out;
    }
    case Node::negate: return -eval_poly(n.kids.front(), alphabet);
    case Node::adjoint: return eval_poly(n.kids.front(), alphabet).adjoint();
    case Node::number: return CuntzPoly::scalar(alphabet, n.value);
    case Node::sgen: {
      std::vector<int> letters;
      if (alphabet <= 9) {
        for (char c : n.digits) letters.push_back(c - '0');
      } else {
        letters.push_back(n.index);
      }
      for (std::size_t i = 0; i < letters.size(); ++i)
        if (letters[i] < 1 || letters[i] > alphabet)
          throw ParseError(n.pos + 1 + (alphabet <= 9 ? i : 0),
                           "generator s" + std::to_string(letters[i]) + " outside O_" + std::to_string(alphabet));
      return word_isometry(Word(alphabet, letters));
    }
    case Node::munit: {
      std::vector<int> j, k;
      for (char c : n.digits) j.push_back(c - '0');
      for (char c : n.digits2) k.push_back(c - '0');
      for (int x : j) if (x < 1 || x > alphabet) throw ParseError(n.pos, "E[J,K] letter outside O_" + std::to_string(alphabet));
      for (int x : k) if (x < 1 || x > alphabet) throw ParseError(n.pos, "E[J,K] letter outside O_" + std::to_string(alphabet));
      return matrix_unit(Word(alphabet, j), Word(alphabet, k));
    }
    case Node::agen:
    case Node::bgen:
      if (alphabet != 2) throw ParseError(n.pos, "fermions live in O_2");
      return psi_map(n.kind == Node::agen ? CarExpr::a(n.index) : mixture(n.half));
  }
  return CuntzPoly(alphabet);
}

CarExpr eval_car(const Node& n) {
  switch (n.kind) {
    case Node::sum: {
      CarExpr out;
      for (const auto& k : n.kids) out += eval_car(k);
      return out;
    }
    case Node::product: {
      CarExpr out = CarExpr::identity();
      for (const auto& k : n.kids) out = out * eval_car(k);
      return out;
    }
    case Node::negate: return -eval_car(n.kids.front());
    case Node::adjoint: return eval_car(n.kids.front()).adjoint();
    case Node::number: return CarExpr::scalar(n.value);
    case Node::agen: return CarExpr::a(n.index);
    case Node::bgen: return mixture(n.half);
    case Node::sgen:
    case Node::munit: throw ParseError(n.pos, "not a fermion expression");
  }
  return {};
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// Splits on top-level separators, keeping source offsets.
std::vector<std::pair<std::size_t, std::string>> split_top(std::string_view s, char sep) {
  std::vector<std::pair<std::size_t, std::string>> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      const char c = s[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (!(c == sep && depth == 0)) continue;
    }
    std::size_t b = start;
    while (b < i && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    parts.emplace_back(b, trim(s.substr(start, i - start)));
    start = i + 1;
  }
  return parts;
}

}  // namespace

CuntzPoly parse_poly(std::string_view text, int n) { return eval_poly(ExprParser(text).parse(), n); }

CarExpr parse_car(std::string_view text) { return eval_car(ExprParser(text).parse()); }

// ---------------------------------------------------------------------------

namespace {

Morphism parse_endo_factor(std::size_t at, const std::string& f, int n) {
  if (f.empty()) throw ParseError(at, "expected an endomorphism");
  if (f == "nakanishi") return nakanishi().morphism();
  for (const char* tag : {"iota", "id", "alpha", "beta1", "beta2", "theta", "phi", "phi_inverse", "phi_rot", "phi_rot_inverse"})
    if (f == tag) {
      if (n != 2) throw ParseError(at, "'" + f + "' is defined on O_2");
      return named_automorphism(f);
    }
  if (f.rfind("map(", 0) == 0 && f.back() == ')') {
    std::vector<CuntzPoly> images;
    for (const auto& [off, part] : split_top(std::string_view(f).substr(4, f.size() - 5), ','))
      try {
        images.push_back(parse_poly(part, n));
      } catch (const ParseError& e) {
        throw e.shifted(at + 4 + off);
      }
    if (static_cast<int>(images.size()) != n)
      throw ParseError(at, "map(...) needs " + std::to_string(n) + " images");
    try {
      return Morphism(std::move(images), f);
    } catch (const std::exception& e) {
      throw ParseError(at, e.what());
    }
  }
  std::string cycles = f;
  if (cycles.rfind("psi_", 0) == 0 || cycles.rfind("psi:", 0) == 0) cycles = cycles.substr(4);
  if (cycles.size() > 2 && cycles.front() == '{' && cycles.back() == '}') cycles = cycles.substr(1, cycles.size() - 2);
  const bool looks_like_cycles =
      !cycles.empty() && (cycles == "id" || cycles.find_first_not_of("0123456789(),") == std::string::npos);
  if (!looks_like_cycles) throw ParseError(at, "unknown endomorphism '" + f + "'");
  try {
    return perm_endo(cycles, n, 2).morphism();
  } catch (const std::exception& e) {
    throw ParseError(at, e.what());
  }
}

}  // namespace

Morphism parse_endo(std::string_view text, int n) {
  const auto parts = split_top(text, '.');
  if (parts.size() == 1 && parts.front().second.empty()) throw ParseError(0, "expected an endomorphism");
  // Right to left: the rightmost factor acts first.
  std::optional<Morphism> acc;
  for (std::size_t idx = parts.size(); idx-- > 0;) {
    const auto& [at, f] = parts[idx];
    if (f == "Ad u" || f.rfind("Ad(", 0) == 0 || f.rfind("Ad (", 0) == 0) {
      if (!acc) throw ParseError(at, "Ad needs an endomorphism to its right");
      CuntzPoly u(n);
      if (f == "Ad u") {
        if (n != 2) throw ParseError(at, "the unitary u is defined on O_2");
        u = parse_poly("s1 s2' + s2 s1'", 2);
      } else {
        const auto open = f.find('(');
        u = parse_poly(std::string_view(f).substr(open), n);
      }
      try {
        acc = ad_unitary(u, *acc);
      } catch (const std::exception& e) {
        throw ParseError(at, e.what());
      }
      continue;
    }
    Morphism m = parse_endo_factor(at, f, n);
    acc = acc ? compose(m, *acc) : m;
  }
  acc->set_name(trim(text));
  return *acc;
}

// ---------------------------------------------------------------------------

std::string RepSpec::to_string() const {
  switch (kind) {
    case RepKind::cycle:
      return "P(" + word.to_string() + (phase.is_zero() ? "" : ";" + phase.to_string()) + ")";
    case RepKind::chain: return "P(" + tail.to_string() + ")";
    case RepKind::uhf_cycle: return "P[" + word.to_string() + "]";
    case RepKind::uhf_chain: return "P[" + tail.to_string() + "]";
    case RepKind::gp: return std::string("GP(") + (sign > 0 ? "+" : "-") + ")";
    case RepKind::uhf_gp: return std::string("GP[") + (sign > 0 ? "+" : "-") + "]";
    case RepKind::fermion: return cuntz::to_string(fermion);
  }
  return {};
}

RepSpec parse_rep(std::string_view text, int n) {
  const std::string t = trim(text);
  RepSpec r;
  if (t.empty()) throw ParseError(0, "expected a representation");
  std::string lower;
  for (char c : t) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "fock" || lower == "fock*" || lower == "iw" || lower == "iw*") {
    r.kind = RepKind::fermion;
    r.fermion = parse_fermion_rep(lower);
    return r;
  }
  if (t.rfind("GP", 0) == 0) {
    if (t.size() != 5 || (t[3] != '+' && t[3] != '-') ||
        !((t[2] == '(' && t[4] == ')') || (t[2] == '[' && t[4] == ']')))
      throw ParseError(2, "expected GP(+), GP(-), GP[+] or GP[-]");
    r.kind = t[2] == '(' ? RepKind::gp : RepKind::uhf_gp;
    r.sign = t[3] == '+' ? 1 : -1;
    return r;
  }
  if (t.size() < 3 || t[0] != 'P' || !((t[1] == '(' && t.back() == ')') || (t[1] == '[' && t.back() == ']')))
    throw ParseError(0, "expected P(...), P[...], GP(+-) or a fermion representation");
  const bool uhf = t[1] == '[';
  std::string body = t.substr(2, t.size() - 3);
  std::string phase;
  if (const auto semi = body.find(';'); semi != std::string::npos) {
    if (uhf) throw ParseError(2 + semi, "P[...] carries no phase");
    phase = trim(std::string_view(body).substr(semi + 1));
    body = trim(std::string_view(body).substr(0, semi));
  }
  try {
    if (body.find('(') != std::string::npos) {
      r.kind = uhf ? RepKind::uhf_chain : RepKind::chain;
      r.tail = parse_evword(body, n);
      return r;
    }
    r.kind = uhf ? RepKind::uhf_cycle : RepKind::cycle;
    r.word = parse_word(body, n);
    if (r.word.empty()) throw ParseError(2, "empty cycle word");
    if (!phase.empty()) r.phase = Phase::parse(phase);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(2, e.what());
  }
  return r;
}

std::optional<Fingerprint> parse_fingerprint(std::string_view text, int n) {
  const std::string t = trim(text);
  if (t == "---") return std::nullopt;
  std::string norm;
  // "(+)" and "⊕" are accepted as direct-sum signs.
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.compare(i, 3, "(+)") == 0 && (i == 0 || t[i - 1] != 'P')) {
      norm += '+';
      i += 2;
    } else if (t.compare(i, 3, "\xE2\x8A\x95") == 0) {
      norm += '+';
      i += 2;
    } else {
      norm += t[i];
    }
  }
  Fingerprint f;
  for (const auto& [at, part] : split_top(norm, '+')) {
    if (part.empty()) continue;
    std::string label = part;
    bool theta = false;
    if (label.size() > 6 && label.compare(label.size() - 6, 6, ".theta") == 0) {
      theta = true;
      label = trim(std::string_view(label).substr(0, label.size() - 6));
    }
    RepSpec r;
    try {
      r = parse_rep(label, n);
    } catch (const ParseError& e) {
      throw e.shifted(at);
    }
    if (theta && r.kind != RepKind::gp) throw ParseError(at, ".theta only follows GP(+-)");
    switch (r.kind) {
      case RepKind::cycle: f.merge(cycle_components(r.word, r.phase)); break;
      case RepKind::chain: f.add(Component::chain(r.tail)); break;
      case RepKind::uhf_cycle: f.add(Component::uhf_cycle(r.word)); break;
      case RepKind::uhf_chain: f.add(Component::uhf_chain(r.tail)); break;
      case RepKind::gp: f.add(Component::gp(r.sign, theta)); break;
      case RepKind::uhf_gp: f.add(Component::uhf_gp(r.sign)); break;
      case RepKind::fermion: f.add(Component::uhf_cycle(fermion_word(r.fermion))); break;
    }
  }
  return f;
}

}  // namespace cuntz
