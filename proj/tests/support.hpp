#pragma once

// Independent oracles for the tests. Nothing here calls the library's
// product, reduction, equality or branching code.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cuntz/poly.hpp"
#include "cuntz/reps.hpp"

namespace oracle {

using cuntz::CuntzPoly;
using cuntz::Scalar;

// --- faithful action on words ------------------------------------------------
// s_i w = i w, s_i^* w = w' if w = i w' else 0, on words of a fixed length
// followed by a common implicit tail. Two polynomials agree iff they agree on
// every word longer than all their right indices.

using WordVec = std::map<std::string, Scalar>;

inline std::string letters(const cuntz::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s.push_back(static_cast<char>('0' + w[i]));
  return s;
}

inline WordVec act(const CuntzPoly& x, const WordVec& v) {
  WordVec out;
  for (const auto& [key, c] : x.terms()) {
    const std::string j = letters(key.left), k = letters(key.right);
    for (const auto& [w, a] : v) {
      if (w.size() < k.size()) throw std::logic_error("oracle word too short");
      if (w.compare(0, k.size(), k) != 0) continue;
      out[j + w.substr(k.size())] += c * a;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline std::vector<std::string> all_words(int n, std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& w : out)
      for (int a = 1; a <= n; ++a) next.push_back(w + static_cast<char>('0' + a));
    out = std::move(next);
  }
  return out;
}

inline std::size_t depth_of(const CuntzPoly& x) {
  std::size_t d = 0;
  for (const auto& [key, c] : x.terms()) d = std::max(d, key.right.size());
  return d;
}

/// x == y as operators.
inline bool same(const CuntzPoly& x, const CuntzPoly& y) {
  const std::size_t d = std::max(depth_of(x), depth_of(y));
  for (const auto& w : all_words(x.alphabet_size(), d)) {
    const WordVec e{{w, Scalar(1)}};
    if (act(x, e) != act(y, e)) return false;
  }
  return true;
}

/// x y == z, checked as x(y(e_w)) == z(e_w).
inline bool product_is(const CuntzPoly& x, const CuntzPoly& y, const CuntzPoly& z) {
  const std::size_t d = depth_of(y) + depth_of(x) + depth_of(z);
  for (const auto& w : all_words(x.alphabet_size(), d)) {
    const WordVec e{{w, Scalar(1)}};
    if (act(x, act(y, e)) != act(z, e)) return false;
  }
  return true;
}

// --- brute-force branching of P(J) . psi_sigma ----------------------------------
// Basis vectors of P(J) are the infinite words w (J_p J_p+1 ...)^inf; s_i
// prepends i and psi_sigma(s_i) = u_sigma s_i rewrites the first l letters by
// sigma. The predecessor of x is read off sigma^-1 on its first l letters.

struct Point {
  std::string w;  // finite head
  std::size_t p;  // 0-based start in J of the periodic tail
  friend auto operator<=>(const Point&, const Point&) = default;
};

class Brute {
 public:
  /// sigma maps a length-l word (as string) to a length-l word.
  Brute(std::string j, std::map<std::string, std::string> sigma_inverse, std::size_t l)
      : j_(std::move(j)), inv_(std::move(sigma_inverse)), l_(l) {}

  Point normal(Point x) const {
    const std::size_t k = j_.size();
    while (!x.w.empty() && x.w.back() == j_[(x.p + k - 1) % k]) {
      x.w.pop_back();
      x.p = (x.p + k - 1) % k;
    }
    return x;
  }

  char at(const Point& x, std::size_t i) const {
    return i < x.w.size() ? x.w[i] : j_[(x.p + i - x.w.size()) % j_.size()];
  }

  /// pred(x) = (letter, y) with psi(s_letter) y = x.
  std::pair<char, Point> pred(const Point& x) const {
    std::string head;
    for (std::size_t i = 0; i < l_; ++i) head.push_back(at(x, i));
    const std::string pre = inv_.at(head);
    // y = pre[1..] followed by x from position l on
    Point y;
    y.w = pre.substr(1);
    for (std::size_t i = l_; i < x.w.size(); ++i) y.w.push_back(x.w[i]);
    y.p = x.w.size() >= l_ ? x.p : (x.p + l_ - x.w.size()) % j_.size();
    return {pre[0], normal(y)};
  }

  /// Raw cycle words of the predecessor map reached from every label with
  /// |w| <= bound, each as its least rotation.
  std::multiset<std::string> cycles(std::size_t bound) const {
    std::set<Point> seen;
    std::multiset<std::string> out;
    std::vector<std::string> heads{""};
    std::vector<std::string> layer{""};
    const char top = static_cast<char>('0' + alphabet());
    for (std::size_t len = 1; len <= bound; ++len) {
      std::vector<std::string> next;
      for (const auto& w : layer)
        for (char c = '1'; c <= top; ++c) next.push_back(w + c);
      heads.insert(heads.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    for (const auto& h : heads)
      for (std::size_t p = 0; p < j_.size(); ++p) {
        Point x = normal({h, p});
        if (seen.count(x)) continue;
        std::vector<Point> path;
        std::map<Point, std::size_t> pos;
        while (!seen.count(x) && !pos.count(x)) {
          pos[x] = path.size();
          path.push_back(x);
          x = pred(x).second;
        }
        if (!seen.count(x)) {
          std::string word;
          for (std::size_t i = pos[x]; i < path.size(); ++i) word.push_back(pred(path[i]).first);
          out.insert(least_rotation(word));
        }
        seen.insert(path.begin(), path.end());
      }
    return out;
  }

  static std::string least_rotation(const std::string& w) {
    std::string best = w;
    for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, w.substr(i) + w.substr(0, i));
    return best;
  }

 private:
  int alphabet() const {
    char m = '1';
    for (const auto& [a, b] : inv_) m = std::max(m, *std::max_element(a.begin(), a.end()));
    return m - '0';
  }
  std::string j_;
  std::map<std::string, std::string> inv_;
  std::size_t l_;
};

/// Raw cycle word W = R^q becomes P(R; 0/q) + ... + P(R; (q-1)/q).
inline cuntz::Fingerprint to_fingerprint(const std::multiset<std::string>& words, int n) {
  cuntz::Fingerprint fp;
  for (const auto& w : words) {
    std::size_t r = w.size();
    for (std::size_t d = 1; d <= w.size(); ++d)
      if (w.size() % d == 0) {
        bool ok = true;
        for (std::size_t i = d; i < w.size() && ok; ++i) ok = w[i] == w[i - d];
        if (ok) { r = d; break; }
      }
    std::vector<int> root;
    for (std::size_t i = 0; i < r; ++i) root.push_back(w[i] - '0');
    const auto q = static_cast<std::int64_t>(w.size() / r);
    for (std::int64_t t = 0; t < q; ++t)
      fp.add(cuntz::Component::cycle(cuntz::Word(n, root), cuntz::Phase(t, q)));
  }
  return fp;
}

}  // namespace oracle
