#include "cuntz/fermions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cuntz/morphism.hpp"

namespace cuntz {

CarExpr CarExpr::scalar(const Scalar& c) {
  CarExpr x;
  x.add_term({}, c);
  return x;
}

CarExpr CarExpr::a(int n) {
  if (n < 1) throw std::invalid_argument("a_n needs n >= 1");
  CarExpr x;
  x.add_term({CarLetter{n, false}}, Scalar(1));
  return x;
}

CarExpr CarExpr::a_dag(int n) { return a(n).adjoint(); }

void CarExpr::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CarExpr CarExpr::adjoint() const {
  CarExpr out;
  for (const auto& [m, c] : terms_) {
    Monomial r(m.rbegin(), m.rend());
    for (auto& l : r) l.dagger = !l.dagger;
    out.add_term(r, c.conjugate());
  }
  return out;
}

CarExpr& CarExpr::operator+=(const CarExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CarExpr& CarExpr::operator-=(const CarExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CarExpr& CarExpr::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CarExpr operator*(const CarExpr& a, const CarExpr& b) {
  CarExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      CarExpr::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

std::string CarExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar coeff = c;
    const bool negative = coeff.is_rational() && coeff.rat_part() < 0;
    if (negative) coeff = -coeff;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << coeff.to_expr();
      continue;
    }
    if (!coeff.is_one()) os << coeff.to_expr() << " ";
    for (std::size_t i = 0; i < m.size(); ++i)
      os << (i ? " " : "") << "a" << m[i].index << (m[i].dagger ? "'" : "");
  }
  return os.str();
}

// ---------------------------------------------------------------------------

CuntzPoly car_generator(int n) {
  if (n < 1) throw std::invalid_argument("a_n needs n >= 1");
  CuntzPoly x = CuntzPoly::monomial(Word(2, {1}), Word(2, {2}));
  for (int i = 2; i <= n; ++i) x = zeta(x);
  return x;
}

CuntzPoly car_generator_closed(int n) {
  if (n < 1) throw std::invalid_argument("a_n needs n >= 1");
  CuntzPoly x(2);
  const std::size_t count = std::size_t{1} << (n - 1);
  for (std::size_t bits = 0; bits < count; ++bits) {
    Word j(2);
    int twos = 0;
    for (int i = n - 2; i >= 0; --i) {
      const bool two = (bits >> i) & 1U;
      j.push_back(two ? 2 : 1);
      twos += two;
    }
    x.add_term(MonomialKey{j + Word(2, {1}), j + Word(2, {2})}, Scalar(twos % 2 ? -1 : 1));
  }
  x.reduce();
  return x;
}

CuntzPoly psi_map(const CarExpr& x) {
  std::map<int, CuntzPoly> gens;
  auto gen = [&](const CarLetter& l) {
    auto it = gens.find(l.index);
    if (it == gens.end()) it = gens.emplace(l.index, car_generator_closed(l.index)).first;
    return l.dagger ? it->second.adjoint() : it->second;
  };
  CuntzPoly out(2);
  for (const auto& [m, c] : x.terms()) {
    CuntzPoly term = CuntzPoly::scalar(2, c);
    for (const auto& l : m) term = term * gen(l);
    out += term;
  }
  return out;
}

CarExpr dual_automorphism(const CarExpr& x) {
  CarExpr out;
  for (const auto& [m, c] : x.terms()) {
    CarExpr::Monomial r = m;
    Scalar coeff = c;
    for (auto& l : r) {
      if (l.index % 2 == 0) coeff = -coeff;
      l.dagger = !l.dagger;
    }
    out.add_term(r, coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------

HalfInt HalfInt::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.substr(slash + 1) != "2")
    throw std::invalid_argument("expected a half-integer p/2, got '" + text + "'");
  std::size_t used = 0;
  const long num = std::stol(text.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("bad half-integer '" + text + "'");
  if (num % 2 == 0) throw std::invalid_argument("'" + text + "' is an integer, not in Z + 1/2");
  return HalfInt{num};
}

std::string HalfInt::to_string() const { return std::to_string(twice) + "/2"; }

CarExpr mixture(HalfInt k) {
  if (k.twice % 2 == 0) throw std::invalid_argument("mixture index must lie in Z + 1/2");
  const long kk = k.twice > 0 ? k.twice : -k.twice;  // 2|k|
  const Scalar sign((kk - 1) / 2 % 2 ? -1 : 1);        // (-1)^{|k| - 1/2}
  const CarExpr n1 = CarExpr::a(1) * CarExpr::a_dag(1);
  const CarExpr n1bar = CarExpr::a_dag(1) * CarExpr::a(1);
  if (k.twice > 0) {
    const int m = static_cast<int>(kk + 2);
    return sign * (n1 * CarExpr::a_dag(m) + n1bar * CarExpr::a(m));
  }
  const int m = static_cast<int>(kk + 1);
  return sign * (n1 * CarExpr::a(m) - n1bar * CarExpr::a_dag(m));
}

FermionRep parse_fermion_rep(const std::string& text) {
  if (text == "fock") return FermionRep::fock;
  if (text == "fock*") return FermionRep::fock_dual;
  if (text == "iw") return FermionRep::iw;
  if (text == "iw*") return FermionRep::iw_dual;
  throw std::invalid_argument("unknown fermion representation '" + text + "' (fock, fock*, iw, iw*)");
}

std::string to_string(FermionRep r) {
  switch (r) {
    case FermionRep::fock: return "Fock";
    case FermionRep::fock_dual: return "Fock*";
    case FermionRep::iw: return "IW";
    case FermionRep::iw_dual: return "IW*";
  }
  return {};
}

Word fermion_word(FermionRep r) {
  switch (r) {
    case FermionRep::fock: return Word(2, {1});
    case FermionRep::fock_dual: return Word(2, {2});
    case FermionRep::iw: return Word(2, {1, 2});
    case FermionRep::iw_dual: return Word(2, {2, 1});
  }
  return Word(2);
}

std::string fermion_name(const Component& c) {
  if (c.kind == ComponentKind::uhf_cycle) {
    for (FermionRep r : {FermionRep::fock, FermionRep::fock_dual, FermionRep::iw, FermionRep::iw_dual})
      if (c.word == fermion_word(r)) return to_string(r);
  }
  return c.to_string();
}

// ---------------------------------------------------------------------------

namespace {

CuntzPoly anticommutator(const CuntzPoly& x, const CuntzPoly& y) { return x * y + y * x; }

std::string star(int n, bool dagger) { return "a" + std::to_string(n) + (dagger ? "*" : ""); }

}  // namespace

Report verify_car(int level) {
  Report r{"CAR relations up to a_" + std::to_string(level), {}};
  std::vector<CuntzPoly> a, ad;
  for (int n = 1; n <= level; ++n) {
    a.push_back(car_generator(n));
    ad.push_back(a.back().adjoint());
  }
  const CuntzPoly one = CuntzPoly::identity(2), zero(2);
  for (int n = 1; n <= level; ++n)
    for (int m = 1; m <= level; ++m)
      r.add("{" + star(n, false) + ", " + star(m, true) + "} = " + (n == m ? "I" : "0"),
            anticommutator(a[n - 1], ad[m - 1]) == (n == m ? one : zero));
  for (int n = 1; n <= level; ++n)
    for (int m = n; m <= level; ++m) {
      r.add("{" + star(n, false) + ", " + star(m, false) + "} = 0", is_zero(anticommutator(a[n - 1], a[m - 1])));
      r.add("{" + star(n, true) + ", " + star(m, true) + "} = 0", is_zero(anticommutator(ad[n - 1], ad[m - 1])));
    }
  return r;
}

Report verify_coherence(int level) {
  Report r{"zeta recursion vs. matrix-unit form", {}};
  for (int n = 1; n <= level; ++n)
    r.add("a" + std::to_string(n), car_generator(n) == psi_map(CarExpr::a(n)));
  return r;
}

Report verify_mixture_car(HalfInt cutoff) {
  Report r{"mixture CAR for |k| <= " + cutoff.to_string(), {}};
  std::vector<HalfInt> ks;
  for (long t = -cutoff.twice; t <= cutoff.twice; t += 2) ks.push_back(HalfInt{t});
  std::vector<CuntzPoly> b, bd;
  for (HalfInt k : ks) {
    b.push_back(psi_map(mixture(k)));
    bd.push_back(b.back().adjoint());
  }
  const CuntzPoly one = CuntzPoly::identity(2), zero(2);
  const std::size_t n = ks.size();
  std::vector<char> pass_dag(n * n), pass_plain(n * n);
#pragma omp parallel for schedule(dynamic) collapse(2)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      pass_dag[i * n + j] = anticommutator(b[i], bd[j]) == (i == j ? one : zero);
      pass_plain[i * n + j] = j < i || is_zero(anticommutator(b[i], b[j]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string bi = "b[" + ks[i].to_string() + "]", bj = "b[" + ks[j].to_string() + "]";
      r.add("{" + bi + ", " + bj + "*} = " + (i == j ? "I" : "0"), pass_dag[i * n + j]);
      if (j >= i) r.add("{" + bi + ", " + bj + "} = 0", pass_plain[i * n + j]);
    }
  return r;
}

Report vacuum_check(FermionRep rep, HalfInt cutoff) {
  Report r{to_string(rep) + " vacuum", {}};
  const PermRep pr = PermRep::cycle(fermion_word(rep));
  const Vector omega = Vector::basis(pr.omega());
  auto on = [&](const CarExpr& x, const Vector& v) { return act(psi_map(x), v, pr); };

  // Annihilators of Table 5 type.
  const int top = static_cast<int>(cutoff.twice) + 2;
  for (int n = 1; n <= top; ++n) {
    bool dagger = false;
    switch (rep) {
      case FermionRep::fock: dagger = false; break;
      case FermionRep::fock_dual: dagger = true; break;
      case FermionRep::iw: dagger = n % 2 == 0; break;
      case FermionRep::iw_dual: dagger = n % 2 == 1; break;
    }
    const CarExpr x = dagger ? CarExpr::a_dag(n) : CarExpr::a(n);
    r.add(star(n, dagger) + " Omega = 0", on(x, omega).is_zero());
  }
  if (rep != FermionRep::fock) return r;

  const Vector omega_star = on(CarExpr::a_dag(1), omega);
  for (long t = 1; t <= cutoff.twice; t += 2) {
    const HalfInt k{t}, mk{-t};
    const Scalar sign((t - 1) / 2 % 2 ? -1 : 1);
    const int i2 = static_cast<int>(t + 2), i1 = static_cast<int>(t + 1);  // 2k+2, 2k+1
    const CarExpr bk = mixture(k), bmk = mixture(mk);
    const std::string ks = k.to_string();
    auto same = [&](std::string name, const CarExpr& lhs, const CarExpr& rhs, const Vector& v) {
      const Vector got = on(lhs, v);
      const Vector want = on(sign * rhs, v);
      if (got == want) return r.add(std::move(name), true);
      Vector flipped = want;
      flipped *= Scalar(-1);
      r.add(std::move(name), false,
            got == flipped ? "holds with the opposite sign" : "computed " + got.to_string());
    };
    const std::string s = sign == Scalar(1) ? "" : "-";
    same("b[" + ks + "] Omega = " + s + "a" + std::to_string(i2) + "* Omega", bk, CarExpr::a_dag(i2), omega);
    same("b[-" + ks + "]* Omega = " + s + "a" + std::to_string(i1) + "* Omega", bmk.adjoint(),
         CarExpr::a_dag(i1), omega);
    r.add("b[" + ks + "]* Omega = 0", on(bk.adjoint(), omega).is_zero());
    r.add("b[-" + ks + "] Omega = 0", on(bmk, omega).is_zero());
    same("b[-" + ks + "] Omega* = " + s + "a" + std::to_string(i1) + "* Omega*", bmk, CarExpr::a_dag(i1),
         omega_star);
    same("b[" + ks + "]* Omega* = " + s + "a" + std::to_string(i2) + "* Omega*", bk.adjoint(),
         CarExpr::a_dag(i2), omega_star);
    r.add("b[" + ks + "] Omega* = 0", on(bk, omega_star).is_zero());
    r.add("b[-" + ks + "]* Omega* = 0", on(bmk.adjoint(), omega_star).is_zero());
  }

  // Finitely many wedge vectors: distinct creation words give distinct
  // (hence orthogonal) basis vectors up to sign.
  auto wedge_instances = [&](const Vector& vac, bool dual) {
    std::vector<CarExpr> creators;
    for (long t = 1; t <= 3; t += 2) {
      creators.push_back(dual ? mixture(HalfInt{-t}) : mixture(HalfInt{t}));
      creators.push_back(dual ? mixture(HalfInt{t}).adjoint() : mixture(HalfInt{-t}).adjoint());
    }
    std::set<Label> seen;
    bool ok = true;
    std::size_t count = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << creators.size()); ++mask) {
      CarExpr word = CarExpr::identity();
      for (std::size_t i = 0; i < creators.size(); ++i)
        if (mask >> i & 1U) word = word * creators[i];
      const Vector v = on(word, vac);
      ok = ok && v.terms().size() == 1 && seen.insert(v.terms().begin()->first.first).second;
      ++count;
    }
    return std::pair{ok, count};
  };
  const auto [ok_w, n_w] = wedge_instances(omega, false);
  r.add(std::to_string(n_w) + " wedge vectors over Omega are distinct basis vectors", ok_w);
  const auto [ok_d, n_d] = wedge_instances(omega_star, true);
  r.add(std::to_string(n_d) + " wedge vectors over Omega* are distinct basis vectors", ok_d);
  return r;
}

std::string FermionBranch::to_string() const {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " + ") + n;
  return out.empty() ? "0" : out;
}

FermionBranch fermion_branch(FermionRep rep, const Morphism& m) {
  FermionBranch out{uhf_branch(fermion_word(rep), m), {}};
  for (const auto& [c, mult] : out.uhf.fingerprint.parts())
    for (std::size_t i = 0; i < mult; ++i) out.names.push_back(fermion_name(c));
  std::sort(out.names.begin(), out.names.end());
  return out;
}

}  // namespace cuntz
