#include "cuntz/morphism.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace cuntz {

Morphism::Morphism(std::vector<CuntzPoly> images, std::string name)
    : images_(std::move(images)), name_(std::move(name)) {
  if (images_.empty()) throw InvalidMorphism("morphism without generator images");
  if (!satisfies_cuntz_relations(images_))
    throw InvalidMorphism("generator images of " + (name_.empty() ? std::string("morphism") : name_) +
                          " violate the Cuntz relations");
}

Morphism Morphism::unchecked(std::vector<CuntzPoly> images, std::string name) {
  Morphism m;
  m.images_ = std::move(images);
  m.name_ = std::move(name);
  return m;
}

std::optional<Morphism> Morphism::try_make(std::vector<CuntzPoly> images, std::string name) {
  if (images.empty() || !satisfies_cuntz_relations(images)) return std::nullopt;
  return unchecked(std::move(images), std::move(name));
}

Morphism Morphism::identity(int n) {
  std::vector<CuntzPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(CuntzPoly::generator(n, i));
  return unchecked(std::move(images), "iota");
}

bool Morphism::grade_preserving() const {
  return std::all_of(images_.begin(), images_.end(), [](const CuntzPoly& p) {
    const auto g = p.gauge_grade();
    return g.size() == 1 && *g.begin() == 1;
  });
}

std::size_t Morphism::level() const {
  std::size_t l = 0;
  for (const auto& p : images_)
    for (const auto& [key, c] : p.terms()) l = std::max({l, key.left.size(), key.right.size()});
  return l;
}

bool operator==(const Morphism& a, const Morphism& b) {
  if (a.images_.size() != b.images_.size()) return false;
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    if (!equals(a.images_[i], b.images_[i])) return false;
  return true;
}

bool satisfies_cuntz_relations(const std::vector<CuntzPoly>& images) {
  const int n = images.front().alphabet_size();
  if (static_cast<int>(images.size()) != n) return false;
  CuntzPoly range_sum(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CuntzPoly expected = i == j ? CuntzPoly::identity(n) : CuntzPoly(n);
      if (!equals(images[i].adjoint() * images[j], expected)) return false;
    }
    range_sum += images[i] * images[i].adjoint();
  }
  return equals(range_sum, CuntzPoly::identity(images.front().alphabet_size()));
}

bool is_unitary(const CuntzPoly& u) {
  const CuntzPoly one = CuntzPoly::identity(u.alphabet_size());
  return equals(u * u.adjoint(), one) && equals(u.adjoint() * u, one);
}

namespace {

class WordImageCache {
 public:
  explicit WordImageCache(const Morphism& m) : m_(m) {}

  const CuntzPoly& operator()(const Word& j) {
    auto it = cache_.find(j);
    if (it != cache_.end()) return it->second;
    CuntzPoly value = j.empty() ? CuntzPoly::identity(m_.alphabet_size())
                                : (*this)(j.substr(0, j.size() - 1)) * m_.image(j.back());
    return cache_.emplace(j, std::move(value)).first->second;
  }

 private:
  const Morphism& m_;
  std::map<Word, CuntzPoly> cache_;
};

}  // namespace

CuntzPoly apply(const Morphism& m, const CuntzPoly& x) {
  if (x.alphabet_size() != m.alphabet_size()) throw AlphabetMismatch(m.alphabet_size(), x.alphabet_size());
  WordImageCache cache(m);
  CuntzPoly out(m.alphabet_size());
  for (const auto& [key, c] : x.terms()) {
    CuntzPoly term = cache(key.left) * cache(key.right).adjoint();
    for (const auto& [k, v] : term.terms()) out.add_term(k, c * v);
  }
  out.reduce();
  return out;
}

CuntzPoly apply_word(const Morphism& m, const Word& j) {
  WordImageCache cache(m);
  return cache(j);
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
  std::vector<CuntzPoly> images;
  for (const auto& img : m2.images()) images.push_back(apply(m1, img));
  std::string name = m1.name().empty() || m2.name().empty() ? std::string()
                                                             : m1.name() + " . " + m2.name();
  return Morphism::unchecked(std::move(images), std::move(name));
}

Morphism ad_unitary(const CuntzPoly& u, const Morphism& m) {
  if (!is_unitary(u)) throw InvalidMorphism("Ad u requires a unitary u, got " + u.to_string());
  std::vector<CuntzPoly> images;
  const CuntzPoly us = u.adjoint();
  for (const auto& img : m.images()) images.push_back(u * img * us);
  return Morphism::unchecked(std::move(images), m.name().empty() ? "" : "Ad u . " + m.name());
}

CuntzPoly zeta(const CuntzPoly& x) {
  if (x.alphabet_size() != 2) throw std::invalid_argument("zeta is defined on O_2 only");
  const CuntzPoly s1 = CuntzPoly::generator(2, 1);
  const CuntzPoly s2 = CuntzPoly::generator(2, 2);
  return s1 * x * s1.adjoint() - s2 * x * s2.adjoint();
}

// ---------------------------------------------------------------------------

SignedPermutation SignedPermutation::then(const SignedPermutation& inner) const {
  SignedPermutation out;
  for (int i = 0; i < 2; ++i) {
    const int mid = inner.target[i] - 1;
    out.target[i] = target[mid];
    out.sign[i] = inner.sign[i] * sign[mid];
  }
  return out;
}

Morphism SignedPermutation::to_morphism() const {
  std::vector<CuntzPoly> images;
  for (int i = 0; i < 2; ++i) images.push_back(CuntzPoly::generator(2, target[i]) * Scalar(sign[i]));
  return Morphism::unchecked(std::move(images), dictionary_name(*this));
}

const std::vector<SignedPermutation>& dihedral_group() {
  static const std::vector<SignedPermutation> group = [] {
    std::vector<SignedPermutation> g;
    for (auto target : {std::array<int, 2>{1, 2}, std::array<int, 2>{2, 1}})
      for (int a : {1, -1})
        for (int b : {1, -1}) g.push_back({target, {a, b}});
    return g;
  }();
  return group;
}

std::string dictionary_name(const SignedPermutation& g) {
  const bool swap = g.target[0] == 2;
  std::string flips;
  if (g.sign[0] < 0 && g.sign[1] < 0) {
    flips = "theta";
  } else if (g.sign[0] < 0) {
    flips = "beta1";
  } else if (g.sign[1] < 0) {
    flips = "beta2";
  }
  if (!swap) return flips.empty() ? "iota" : flips;
  return flips.empty() ? "alpha" : "alpha." + flips;
}

std::optional<SignedPermutation> as_signed_permutation(const Morphism& m) {
  if (m.alphabet_size() != 2) return std::nullopt;
  for (const auto& g : dihedral_group())
    if (g.to_morphism() == m) return g;
  return std::nullopt;
}

Morphism named_automorphism(std::string_view tag) {
  const auto s = [](int i) { return CuntzPoly::generator(2, i); };
  const Scalar inv_r2 = Scalar(0, mpq_class(1, 2));
  if (tag == "iota" || tag == "id") return Morphism::identity(2);
  if (tag == "alpha") return Morphism({s(2), s(1)}, "alpha");
  if (tag == "beta1") return Morphism({-s(1), s(2)}, "beta1");
  if (tag == "beta2") return Morphism({s(1), -s(2)}, "beta2");
  if (tag == "theta") return Morphism({-s(1), -s(2)}, "theta");
  if (tag == "phi" || tag == "phi_inverse") {
    // The Hadamard-type map is an involution, so phi^{-1} has the same images.
    return Morphism({(s(1) + s(2)) * inv_r2, (s(1) - s(2)) * inv_r2}, std::string(tag));
  }
  // The rotation by pi/4; unlike phi it is not an involution.
  if (tag == "phi_rot") return Morphism({(s(1) + s(2)) * inv_r2, (s(2) - s(1)) * inv_r2}, "phi_rot");
  if (tag == "phi_rot_inverse")
    return Morphism({(s(1) - s(2)) * inv_r2, (s(1) + s(2)) * inv_r2}, "phi_rot_inverse");
  throw std::invalid_argument("unknown automorphism '" + std::string(tag) + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

WordPermutation::WordPermutation(int n, int l, std::vector<int> image)
    : n_(n), l_(l), image_(std::move(image)) {
  if (n < 2 || l < 1) throw std::invalid_argument("word permutation needs N >= 2, l >= 1");
  if (image_.size() != int_pow(static_cast<std::size_t>(n), l))
    throw std::invalid_argument("word permutation must act on N^l points");
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("sigma is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

WordPermutation WordPermutation::identity(int n, int l) {
  std::vector<int> image(int_pow(static_cast<std::size_t>(n), l));
  std::iota(image.begin(), image.end(), 0);
  return WordPermutation(n, l, std::move(image));
}

WordPermutation WordPermutation::parse_cycles(std::string_view text, int n, int l) {
  WordPermutation p = identity(n, l);
  if (text == "id" || text.empty()) return p;
  const int points = static_cast<int>(p.points());
  auto parse_points = [&](std::string_view body) {
    std::vector<int> pts;
    if (body.find(',') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t end = body.find(',', pos);
        if (end == std::string_view::npos) end = body.size();
        int v = 0;
        auto tok = body.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
          throw std::invalid_argument("bad cycle '" + std::string(body) + "'");
        pts.push_back(v);
        pos = end + 1;
      }
    } else {
      for (char c : body) {
        if (c < '1' || c > '9') throw std::invalid_argument("bad cycle '" + std::string(body) + "'");
        pts.push_back(c - '0');
      }
    }
    for (int v : pts)
      if (v < 1 || v > points)
        throw std::invalid_argument("cycle point " + std::to_string(v) + " outside 1.." +
                                    std::to_string(points));
    return pts;
  };
  std::vector<std::vector<int>> cycles;
  if (text.front() != '(') {
    cycles.push_back(parse_points(text));
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != '(') throw std::invalid_argument("bad cycle notation '" + std::string(text) + "'");
      const std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos)
        throw std::invalid_argument("unclosed cycle in '" + std::string(text) + "'");
      cycles.push_back(parse_points(text.substr(pos + 1, close - pos - 1)));
      pos = close + 1;
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(points), false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto from = static_cast<std::size_t>(cyc[i] - 1);
      if (used[from]) throw std::invalid_argument("cycles are not disjoint in '" + std::string(text) + "'");
      used[from] = true;
      p.image_[from] = cyc[(i + 1) % cyc.size()] - 1;
    }
  }
  return p;
}

Word WordPermutation::word_of(int index) const {
  std::vector<int> letters(static_cast<std::size_t>(l_));
  for (int pos = l_ - 1; pos >= 0; --pos) {
    letters[static_cast<std::size_t>(pos)] = index % n_ + 1;
    index /= n_;
  }
  return Word(n_, letters);
}

int WordPermutation::index_of(const Word& w) const {
  if (static_cast<int>(w.size()) != l_) throw std::invalid_argument("word length differs from l");
  int idx = 0;
  for (std::size_t i = 0; i < w.size(); ++i) idx = idx * n_ + (w[i] - 1);
  return idx;
}

Word WordPermutation::apply(const Word& w) const { return word_of(image_[static_cast<std::size_t>(index_of(w))]); }

WordPermutation WordPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return WordPermutation(n_, l_, std::move(inv));
}

std::string WordPermutation::to_cycle_string() const {
  const bool wide = image_.size() > 9;
  std::vector<std::string> cycles;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) continue;
    std::string cyc;
    std::size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      if (wide && !cyc.empty()) cyc += ',';
      cyc += std::to_string(cur + 1);
      cur = static_cast<std::size_t>(image_[cur]);
    }
    cycles.push_back(cyc);
  }
  if (cycles.empty()) return "id";
  if (cycles.size() == 1) return cycles.front();
  std::string out;
  for (const auto& c : cycles) out += "(" + c + ")";
  return out;
}

PermEndo::PermEndo(WordPermutation sigma, std::string name)
    : sigma_(std::move(sigma)),
      unitary_(sigma_.alphabet_size()),
      morphism_(Morphism::identity(sigma_.alphabet_size())) {
  const int n = sigma_.alphabet_size();
  for (int idx = 0; idx < static_cast<int>(sigma_.points()); ++idx)
    unitary_.add_term(MonomialKey{sigma_.word_of(sigma_(idx)), sigma_.word_of(idx)}, Scalar(1));
  unitary_.reduce();
  std::vector<CuntzPoly> images;
  for (int i = 1; i <= n; ++i) images.push_back(unitary_ * CuntzPoly::generator(n, i));
  if (name.empty()) name = "psi_" + sigma_.to_cycle_string();
  morphism_ = Morphism(std::move(images), std::move(name));
}

PermEndo make_perm_endo(int n, int l, const WordPermutation& sigma) {
  if (sigma.alphabet_size() != n || sigma.order() != l)
    throw std::invalid_argument("sigma does not act on words of length l over N letters");
  return PermEndo(sigma);
}

PermEndo perm_endo(std::string_view cycles, int n, int l) {
  return PermEndo(WordPermutation::parse_cycles(cycles, n, l));
}

PermEndo nakanishi() {
  // rho(s_1) = s_{23} s_1^* + s_{31} s_2^* + s_{12} s_3^*
  // rho(s_2) = s_{32} s_1^* + s_{13} s_2^* + s_{21} s_3^*
  // rho(s_3) = s_{11} s_1^* + s_{22} s_2^* + s_{33} s_3^*
  // so sigma(ij) is the two-letter word multiplying s_j^* in rho(s_i).
  const std::map<std::string, std::string> table = {
      {"11", "23"}, {"12", "31"}, {"13", "12"}, {"21", "32"}, {"22", "13"},
      {"23", "21"}, {"31", "11"}, {"32", "22"}, {"33", "33"}};
  WordPermutation id = WordPermutation::identity(3, 2);
  std::vector<int> image(9);
  for (const auto& [from, to] : table)
    image[static_cast<std::size_t>(id.index_of(parse_word(from, 3)))] = id.index_of(parse_word(to, 3));
  return PermEndo(WordPermutation(3, 2, std::move(image)), "nakanishi");
}

std::vector<WordPermutation> all_word_permutations(int n, int l) {
  std::vector<int> image(int_pow(static_cast<std::size_t>(n), l));
  std::iota(image.begin(), image.end(), 0);
  std::vector<WordPermutation> out;
  do {
    out.emplace_back(n, l, image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Frame f) { return f == Frame::xi ? "xi" : "xi'"; }

namespace {

std::array<CuntzPoly, 2> frame_isometries(Frame f) {
  const CuntzPoly s1 = CuntzPoly::generator(2, 1);
  const CuntzPoly s2 = CuntzPoly::generator(2, 2);
  if (f == Frame::xi) return {s1, s2};
  const Scalar inv_r2 = Scalar(0, mpq_class(1, 2));
  return {(s1 + s2) * inv_r2, (s1 - s2) * inv_r2};
}

std::string summand_name(const Morphism& m) {
  if (auto g = as_signed_permutation(m)) return dictionary_name(*g);
  return {};
}

}  // namespace

Morphism direct_sum(const Morphism& first, const Morphism& second, Frame frame) {
  const auto z = frame_isometries(frame);
  std::vector<CuntzPoly> images;
  for (int i = 1; i <= 2; ++i)
    images.push_back(z[0] * first.image(i) * z[0].adjoint() + z[1] * second.image(i) * z[1].adjoint());
  return Morphism::unchecked(std::move(images));
}

std::optional<DirectSum> split_direct_sum(const Morphism& m) {
  if (m.alphabet_size() != 2) return std::nullopt;
  for (Frame frame : {Frame::xi, Frame::xi_prime}) {
    const auto z = frame_isometries(frame);
    std::array<std::vector<CuntzPoly>, 2> parts;
    for (int k = 0; k < 2; ++k)
      for (int i = 1; i <= 2; ++i) parts[k].push_back(z[k].adjoint() * m.image(i) * z[k]);
    auto first = Morphism::try_make(parts[0]);
    auto second = Morphism::try_make(parts[1]);
    if (!first || !second) continue;
    if (!(direct_sum(*first, *second, frame) == m)) continue;
    first->set_name(summand_name(*first));
    second->set_name(summand_name(*second));
    return DirectSum{std::move(*first), std::move(*second), frame};
  }
  return std::nullopt;
}

}  // namespace cuntz
