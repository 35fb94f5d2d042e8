#include "cuntz/reps.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <sstream>

namespace cuntz {

namespace {

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

const Phase kHalf(1, 2);

}  // namespace

std::string Label::to_string() const {
  const std::string e = "e" + std::to_string(anchor);
  return word.empty() ? e : "s" + word.to_string() + " " + e;
}

// ---------------------------------------------------------------------------

PermRep PermRep::cycle(Word j, Phase z) {
  if (j.empty()) throw std::invalid_argument("P(J) needs a nonempty J");
  if (!is_primitive(j))
    throw std::invalid_argument("P(" + j.to_string() + ") is periodic; use decompose_power");
  PermRep r;
  r.cycle_ = true;
  r.j_ = std::move(j);
  r.z_ = z;
  return r;
}

PermRep PermRep::chain(EvWord k) {
  PermRep r;
  r.cycle_ = false;
  r.k_ = std::move(k);
  return r;
}

int PermRep::alphabet_size() const { return cycle_ ? j_.alphabet_size() : k_.alphabet_size(); }

Label PermRep::normalize(Word w, long anchor) const {
  if (cycle_) {
    const long k = static_cast<long>(j_.size());
    // s_{j_{p-1}} e_p = e_{p-1}: a trailing j_{p-1} folds into the cycle.
    while (!w.empty() && w.back() == j_[static_cast<std::size_t>(mod(anchor - 2, k))]) {
      w.pop_back();
      anchor = mod(anchor - 2, k) + 1;
    }
  } else {
    while (!w.empty() && anchor >= 1 && w.back() == k_.letter(static_cast<std::size_t>(anchor))) {
      w.pop_back();
      --anchor;
    }
  }
  return Label{std::move(w), anchor};
}

std::optional<std::pair<Label, Phase>> PermRep::generator(int i, const Label& v) const {
  if (v.word.empty()) {
    if (cycle_) {
      const long k = static_cast<long>(j_.size());
      const long prev = mod(v.anchor - 2, k) + 1;
      if (j_[static_cast<std::size_t>(prev - 1)] == i)
        return std::pair{Label{v.word, prev}, prev == 1 ? z_ : Phase()};
    } else if (v.anchor >= 1 && k_.letter(static_cast<std::size_t>(v.anchor)) == i) {
      return std::pair{Label{v.word, v.anchor - 1}, Phase()};
    }
  }
  Word w = v.word;
  w.push_front(i);
  return std::pair{Label{std::move(w), v.anchor}, Phase()};
}

std::optional<std::pair<Label, Phase>> PermRep::generator_adjoint(int i, const Label& v) const {
  if (!v.word.empty()) {
    if (v.word.front() != i) return std::nullopt;
    return std::pair{Label{v.word.substr(1), v.anchor}, Phase()};
  }
  if (cycle_) {
    if (j_[static_cast<std::size_t>(v.anchor - 1)] != i) return std::nullopt;
    const long k = static_cast<long>(j_.size());
    return std::pair{Label{v.word, v.anchor % k + 1}, v.anchor == 1 ? -z_ : Phase()};
  }
  if (k_.letter(static_cast<std::size_t>(v.anchor + 1)) != i) return std::nullopt;
  return std::pair{Label{v.word, v.anchor + 1}, Phase()};
}

long PermRep::sector(const Label& v) const {
  const long grade = v.anchor - static_cast<long>(v.word.size());
  return cycle_ ? mod(grade - 1, static_cast<long>(j_.size())) : grade;
}

std::string PermRep::to_string() const {
  if (!cycle_) return "P(" + k_.to_string() + ")";
  return "P(" + j_.to_string() + (z_.is_zero() ? "" : ";" + z_.to_string()) + ")";
}

// ---------------------------------------------------------------------------

void Vector::add(const Label& v, Phase q, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar coeff = c;
  if (q.den() % 2 == 0 && !(q < kHalf)) {
    q = q - kHalf;
    coeff = -coeff;
  }
  auto [it, inserted] = terms_.try_emplace(Key{v, q}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Vector& Vector::operator+=(const Vector& o) {
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

Vector operator-(Vector a, const Vector& b) {
  for (const auto& [key, c] : b.terms_) a.add(key.first, key.second, -c);
  return a;
}

std::string Vector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << "(" << c << ") ";
    if (!key.second.is_zero()) os << "exp(2 pi i " << key.second.to_string() << ") ";
    os << key.first.to_string();
  }
  return os.str();
}

std::optional<std::pair<Label, Phase>> act_monomial(const PermRep& rep, const MonomialKey& key,
                                                    const Label& v) {
  std::pair<Label, Phase> cur{v, Phase()};
  // s_K^* = s_{k_m}^* ... s_{k_1}^*, so k_1 is stripped first.
  for (std::size_t i = 0; i < key.right.size(); ++i) {
    auto r = rep.generator_adjoint(key.right[i], cur.first);
    if (!r) return std::nullopt;
    cur = {std::move(r->first), cur.second + r->second};
  }
  for (std::size_t i = key.left.size(); i-- > 0;) {
    auto r = rep.generator(key.left[i], cur.first);
    cur = {std::move(r->first), cur.second + r->second};
  }
  return cur;
}

Vector act(const CuntzPoly& x, const Vector& v, const PermRep& rep) {
  if (x.alphabet_size() != rep.alphabet_size()) throw AlphabetMismatch(x.alphabet_size(), rep.alphabet_size());
  Vector out;
  for (const auto& [key, c] : x.terms())
    for (const auto& [vk, vc] : v.terms())
      if (auto r = act_monomial(rep, key, vk.first)) out.add(r->first, r->second + vk.second, c * vc);
  return out;
}

// ---------------------------------------------------------------------------

Component Component::cycle(Word j, Phase z) {
  Component c;
  c.kind = ComponentKind::cycle;
  c.word = canonical_cycle(j).representative;
  c.phase = z;
  return c;
}

Component Component::chain(const EvWord& k) {
  Component c;
  c.kind = ComponentKind::chain;
  c.tail = EvWord(Word(k.alphabet_size()), tail_class(k));
  return c;
}

Component Component::uhf_cycle(const Word& j) {
  Component c;
  c.kind = ComponentKind::uhf_cycle;
  c.word = primitive_split(j).root;
  return c;
}

Component Component::uhf_chain(const EvWord& k) {
  Component c;
  c.kind = ComponentKind::uhf_chain;
  c.tail = aligned_tail(k);
  return c;
}

Component Component::gp(int sign, bool theta) {
  Component c;
  c.kind = ComponentKind::gp;
  c.sign = sign;
  c.theta = theta;
  return c;
}

Component Component::uhf_gp(int sign) {
  Component c;
  c.kind = ComponentKind::uhf_gp;
  c.sign = sign;
  return c;
}

std::string Component::to_string() const {
  const std::string s = sign > 0 ? "+" : "-";
  switch (kind) {
    case ComponentKind::cycle:
      return "P(" + word.to_string() + (phase.is_zero() ? "" : ";" + phase.to_string()) + ")";
    case ComponentKind::chain:
      return "P(" + tail.to_string() + ")";
    case ComponentKind::uhf_cycle:
      return "P[" + word.to_string() + "]";
    case ComponentKind::uhf_chain:
      return "P[" + tail.to_string() + "]";
    case ComponentKind::gp:
      return "GP(" + s + ")" + (theta ? ".theta" : "");
    case ComponentKind::uhf_gp:
      return "GP[" + s + "]";
  }
  return {};
}

nlohmann::json Component::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case ComponentKind::cycle:
      j = {{"kind", "cycle"}, {"word", word.to_string()}, {"phase", phase.to_string()}};
      break;
    case ComponentKind::chain:
      j = {{"kind", "chain"}, {"word", tail.to_string()}};
      break;
    case ComponentKind::uhf_cycle:
      j = {{"kind", "uhf_cycle"}, {"word", word.to_string()}};
      break;
    case ComponentKind::uhf_chain:
      j = {{"kind", "uhf_chain"}, {"word", tail.to_string()}};
      break;
    case ComponentKind::gp:
      j = {{"kind", "gp"}, {"sign", sign > 0 ? "+" : "-"}, {"theta", theta}};
      break;
    case ComponentKind::uhf_gp:
      j = {{"kind", "uhf_gp"}, {"sign", sign > 0 ? "+" : "-"}};
      break;
  }
  j["label"] = to_string();
  return j;
}

void Fingerprint::add(const Component& c, std::size_t multiplicity) {
  if (multiplicity > 0) parts_[c] += multiplicity;
}

void Fingerprint::merge(const Fingerprint& o) {
  for (const auto& [c, m] : o.parts_) add(c, m);
}

std::size_t Fingerprint::size() const {
  std::size_t n = 0;
  for (const auto& [c, m] : parts_) n += m;
  return n;
}

std::string Fingerprint::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [c, m] : parts_)
    for (std::size_t i = 0; i < m; ++i) out += (out.empty() ? "" : " + ") + c.to_string();
  return out;
}

nlohmann::json Fingerprint::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, m] : parts_) {
    nlohmann::json j = c.to_json();
    j["multiplicity"] = m;
    out.push_back(std::move(j));
  }
  return out;
}

Fingerprint decompose_power(const Word& j, std::size_t l, Phase z) {
  if (!is_primitive(j)) throw std::invalid_argument("decompose_power: " + j.to_string() + " is periodic");
  if (l == 0) throw std::invalid_argument("decompose_power: power must be positive");
  Fingerprint f;
  for (const Phase& q : z.roots(static_cast<std::int64_t>(l))) f.add(Component::cycle(j, q));
  return f;
}

Fingerprint cycle_components(const Word& w, Phase z) {
  const PrimitiveSplit split = primitive_split(w);
  return decompose_power(split.root, split.power, z);
}

// ---------------------------------------------------------------------------

BranchSystem::BranchSystem(PermRep base, Morphism m) : base_(std::move(base)), m_(std::move(m)) {
  if (m_.alphabet_size() != base_.alphabet_size())
    throw AlphabetMismatch(m_.alphabet_size(), base_.alphabet_size());
  if (!m_.grade_preserving())
    throw NotPermutative("branching needs a grade-preserving endomorphism");
  for (const auto& img : m_.images()) adjoint_images_.push_back(img.adjoint());
}

BranchSystem compose_with_endo(const PermRep& rep, const Morphism& m) { return BranchSystem(rep, m); }

std::pair<Label, Phase> BranchSystem::single_term(const Vector& x, const char* what) const {
  if (x.terms().size() != 1) throw NotPermutative(std::string(what) + " is not basis-to-basis");
  const auto& [key, c] = *x.terms().begin();
  if (c == Scalar(1)) return {key.first, key.second};
  if (c == Scalar(-1)) return {key.first, key.second + kHalf};
  throw NotPermutative(std::string(what) + " has a non-unimodular coefficient");
}

std::pair<Label, Phase> BranchSystem::t(int i, const Label& v) const {
  return single_term(act(m_.image(i), Vector::basis(v), base_), "m(s_i)");
}

BranchSystem::Step BranchSystem::pred(const Label& v) const {
  std::optional<Step> found;
  for (int i = 1; i <= m_.alphabet_size(); ++i) {
    const Vector x = act(adjoint_images_[static_cast<std::size_t>(i - 1)], Vector::basis(v), base_);
    if (x.is_zero()) continue;
    if (found) throw NotPermutative("two predecessors of " + v.to_string());
    auto [label, q] = single_term(x, "m(s_i)^*");
    found = Step{i, std::move(label), -q};
  }
  if (!found) throw NotPermutative("no predecessor of " + v.to_string());
  return *found;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t int_pow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

void all_words(int n, std::size_t len, std::vector<Word>& out) {
  std::vector<int> letters(len, 1);
  for (;;) {
    out.emplace_back(n, letters);
    std::size_t pos = len;
    while (pos > 0 && letters[pos - 1] == n) letters[--pos] = 1;
    if (pos == 0) return;
    ++letters[pos - 1];
  }
}

std::vector<Word> words_up_to(int n, std::size_t bound) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= bound; ++len) all_words(n, len, out);
  return out;
}

struct SearchPlan {
  std::size_t level = 1;
  std::size_t bound = 0;
  std::size_t cap = 0;
  std::vector<Label> seeds;
  // chain bookkeeping
  long a = 0;
  long p = 1;
};

SearchPlan plan_search(const BranchSystem& sys, const BranchOptions& opts) {
  SearchPlan plan;
  const PermRep& rep = sys.base();
  const int n = rep.alphabet_size();
  plan.level = std::max<std::size_t>(sys.morphism().level(), 1);
  plan.bound = opts.seed_bound.value_or(plan.level - 1);
  std::set<Label> seeds;
  if (rep.is_cycle()) {
    const long k = static_cast<long>(rep.length());
    plan.cap = 10 * int_pow(static_cast<std::size_t>(n), plan.level) * static_cast<std::size_t>(k) + plan.bound;
    for (long anchor = 1; anchor <= k; ++anchor)
      for (const Word& w : words_up_to(n, plan.bound)) seeds.insert(rep.normalize(w, anchor));
  } else {
    plan.a = static_cast<long>(rep.tail().prefix().size());
    plan.p = static_cast<long>(rep.tail().period().size());
    const std::size_t bound = std::max(plan.bound, plan.level - 1);
    plan.cap = 10 * int_pow(static_cast<std::size_t>(n), plan.level) *
                   static_cast<std::size_t>(plan.a + plan.p) + bound + plan.level;
    for (long m = plan.a; m < plan.a + plan.p; ++m)
      for (const Word& w : words_up_to(n, bound)) seeds.insert(rep.normalize(w, m + static_cast<long>(w.size())));
  }
  plan.seeds.assign(seeds.begin(), seeds.end());
  return plan;
}

[[noreturn]] void diverged(const BranchSystem& sys, const Label& seed, std::size_t cap) {
  throw BranchDiverged("orbit of " + seed.to_string() + " in " + sys.base().to_string() + " . " +
                       (sys.morphism().name().empty() ? "m" : sys.morphism().name()) +
                       " did not close within " + std::to_string(cap) + " steps");
}

template <class PredFn>
Label cycle_min_from(const BranchSystem& sys, const Label& seed, std::size_t cap, PredFn&& pred) {
  std::map<Label, std::size_t> pos;
  std::vector<Label> path;
  Label v = seed;
  while (true) {
    if (auto it = pos.find(v); it != pos.end())
      return *std::min_element(path.begin() + static_cast<std::ptrdiff_t>(it->second), path.end());
    if (path.size() > cap) diverged(sys, seed, cap);
    pos.emplace(v, path.size());
    path.push_back(v);
    v = pred(v).prev;
  }
}

/// Chain component identifier: (D, least (w, anchor mod D) on the spine).
using ChainId = std::pair<long, Label>;

struct ChainKey {
  Word state;
  long phase;
  friend auto operator<=>(const ChainKey&, const ChainKey&) = default;
};

std::optional<ChainKey> chain_key(const PermRep& rep, const SearchPlan& plan, const Label& v) {
  const long d = static_cast<long>(plan.level) - 1 - static_cast<long>(v.word.size());
  if (d < 0) return std::nullopt;
  const long m = v.anchor + d;
  if (v.anchor - static_cast<long>(v.word.size()) < plan.a + 1) return std::nullopt;
  Word s = v.word;
  for (long i = 1; i <= d; ++i) s.push_back(rep.tail().letter(static_cast<std::size_t>(v.anchor + i)));
  return ChainKey{std::move(s), mod(m - plan.a, plan.p)};
}

template <class PredFn>
ChainId chain_id_from(const BranchSystem& sys, const SearchPlan& plan, const Label& seed, PredFn&& pred) {
  std::map<ChainKey, std::size_t> seen;
  std::vector<Label> path;
  Label v = seed;
  while (true) {
    if (path.size() > plan.cap) diverged(sys, seed, plan.cap);
    if (auto key = chain_key(sys.base(), plan, v)) {
      auto [it, inserted] = seen.emplace(*key, path.size());
      if (!inserted) {
        const std::size_t r1 = it->second;
        const long d = static_cast<long>(path.size() - r1);
        Label best{};
        bool first = true;
        for (std::size_t r = r1; r < path.size(); ++r) {
          Label reduced{path[r].word, mod(path[r].anchor, d)};
          if (first || reduced < best) best = reduced;
          first = false;
        }
        return {d, best};
      }
    }
    path.push_back(v);
    v = pred(v).prev;
  }
}

Certificate certify_cycle(const BranchSystem& sys, const Label& v, const Word& w, Phase z,
                          std::string component) {
  Certificate c{std::move(component), v, w, z, false};
  std::pair<Label, Phase> cur{v, Phase()};
  for (std::size_t r = w.size(); r-- > 0;) {
    auto [label, q] = sys.t(w[r], cur.first);
    cur = {std::move(label), cur.second + q};
  }
  c.verified = cur.first == v && cur.second == z;
  return c;
}

RawCycle trace_cycle(const BranchSystem& sys, const Label& start) {
  RawCycle c;
  c.word = Word(sys.base().alphabet_size());
  Label v = start;
  do {
    const auto step = sys.pred(v);
    c.labels.push_back(v);
    c.word.push_back(step.letter);
    c.phase = c.phase + step.phase;
    v = step.prev;
  } while (!(v == start));
  return c;
}

RawChain trace_chain(const BranchSystem& sys, const SearchPlan& plan, const ChainId& id) {
  const auto& [d, reduced] = id;
  // Lift (w, anchor mod D) to an anchor deep inside the periodic regime.
  long anchor = reduced.anchor;
  while (anchor - static_cast<long>(reduced.word.size()) < plan.a + 1) anchor += d;
  RawChain c;
  c.period = Word(sys.base().alphabet_size());
  Label v{reduced.word, anchor};
  for (long r = 0; r < d; ++r) {
    const auto step = sys.pred(v);
    c.labels.push_back(v);
    c.period.push_back(step.letter);
    v = step.prev;
  }
  return c;
}

BranchResult assemble(const BranchSystem& sys, const SearchPlan& plan, const std::set<Label>& cycle_mins,
                      const std::set<ChainId>& chain_ids) {
  BranchResult out;
  out.seed_bound = plan.bound;
  out.seeds = plan.seeds.size();
  for (const Label& start : cycle_mins) {
    RawCycle c = trace_cycle(sys, start);
    const Fingerprint parts = cycle_components(c.word, c.phase);
    out.fingerprint.merge(parts);
    out.certificates.push_back(certify_cycle(sys, c.labels.front(), c.word, c.phase, parts.to_string()));
    out.cycles.push_back(std::move(c));
  }
  for (const ChainId& id : chain_ids) {
    RawChain c = trace_chain(sys, plan, id);
    const Component comp = Component::chain(EvWord(Word(c.period.alphabet_size()), c.period));
    out.fingerprint.add(comp);
    // t_period maps the spine label one period further back onto labels[0].
    Label ahead{c.labels.front().word, c.labels.front().anchor + id.first};
    Certificate cert = certify_cycle(sys, ahead, c.period, Phase(), comp.to_string());
    cert.gp_vector = c.labels.front();
    std::pair<Label, Phase> cur{ahead, Phase()};
    for (std::size_t r = c.period.size(); r-- > 0;) cur = sys.t(c.period[r], cur.first);
    cert.verified = cur.first == c.labels.front();
    out.certificates.push_back(std::move(cert));
    out.chains.push_back(std::move(c));
  }
  return out;
}

}  // namespace

BranchResult branch(const BranchSystem& sys, const BranchOptions& opts) {
  if (!opts.parallel) return branch_serial(sys, opts);
  const SearchPlan plan = plan_search(sys, opts);
  const bool cyc = sys.base().is_cycle();
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(plan.seeds.size());
  std::vector<Label> mins(plan.seeds.size());
  std::vector<ChainId> ids(plan.seeds.size());
  std::string error;
  bool diverged_error = false;
#pragma omp parallel
  {
    std::map<Label, BranchSystem::Step> memo;
    auto pred = [&](const Label& v) -> const BranchSystem::Step& {
      auto it = memo.find(v);
      if (it == memo.end()) it = memo.emplace(v, sys.pred(v)).first;
      return it->second;
    };
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t s = 0; s < count; ++s) {
      try {
        const Label& seed = plan.seeds[static_cast<std::size_t>(s)];
        if (cyc) {
          mins[static_cast<std::size_t>(s)] = cycle_min_from(sys, seed, plan.cap, pred);
        } else {
          ids[static_cast<std::size_t>(s)] = chain_id_from(sys, plan, seed, pred);
        }
      } catch (const BranchDiverged& e) {
#pragma omp critical(branch_error)
        {
          if (error.empty()) error = e.what();
          diverged_error = true;
        }
      } catch (const std::exception& e) {
#pragma omp critical(branch_error)
        if (error.empty()) error = e.what();
      }
    }
  }
  if (!error.empty()) {
    if (diverged_error) throw BranchDiverged(error);
    throw NotPermutative(error);
  }
  std::set<Label> cycle_mins;
  std::set<ChainId> chain_ids;
  if (cyc) {
    cycle_mins.insert(mins.begin(), mins.end());
  } else {
    chain_ids.insert(ids.begin(), ids.end());
  }
  return assemble(sys, plan, cycle_mins, chain_ids);
}

BranchResult branch_serial(const BranchSystem& sys, const BranchOptions& opts) {
  const SearchPlan plan = plan_search(sys, opts);
  std::map<Label, BranchSystem::Step> memo;
  auto pred = [&](const Label& v) -> const BranchSystem::Step& {
    auto it = memo.find(v);
    if (it == memo.end()) it = memo.emplace(v, sys.pred(v)).first;
    return it->second;
  };
  std::set<Label> cycle_mins;
  std::set<ChainId> chain_ids;
  for (const Label& seed : plan.seeds) {
    if (sys.base().is_cycle()) {
      cycle_mins.insert(cycle_min_from(sys, seed, plan.cap, pred));
    } else {
      chain_ids.insert(chain_id_from(sys, plan, seed, pred));
    }
  }
  return assemble(sys, plan, cycle_mins, chain_ids);
}

BranchResult branch(const PermRep& rep, const Morphism& m, const BranchOptions& opts) {
  return branch(BranchSystem(rep, m), opts);
}

BranchResult uhf_branch(const Word& j, const Morphism& m, const BranchOptions& opts) {
  const BranchSystem sys(PermRep::cycle(primitive_split(j).root), m);
  BranchResult res = branch(sys, opts);
  res.fingerprint = Fingerprint();
  res.certificates.clear();
  for (const RawCycle& c : res.cycles) {
    for (std::size_t r = 0; r < c.labels.size(); ++r) {
      if (sys.base().sector(c.labels[r]) != 0) continue;
      const Word rotated = rotate(c.word, r);
      const Component comp = Component::uhf_cycle(rotated);
      res.fingerprint.add(comp);
      res.certificates.push_back(certify_cycle(sys, c.labels[r], rotated, c.phase, comp.to_string()));
    }
  }
  return res;
}

nlohmann::json Certificate::to_json() const {
  return {{"component", component},
          {"gp_vector", gp_vector.to_string()},
          {"word", word.to_string()},
          {"phase", phase.to_string()},
          {"verified", verified}};
}

nlohmann::json BranchResult::to_json() const {
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : certificates) certs.push_back(c.to_json());
  return {{"components", fingerprint.to_json()},
          {"certificates", certs},
          {"seed_bound", seed_bound},
          {"seeds", seeds}};
}

// ---------------------------------------------------------------------------

UhfRestriction restrict_to_uhf(const PermRep& rep, long window) {
  UhfRestriction out;
  if (rep.is_cycle()) {
    for (const Word& r : rotations(rep.word())) out.components.add(Component::uhf_cycle(r));
    return out;
  }
  const EvWord& k = rep.tail();
  out.infinite_multiplicity = true;
  for (long eta = 0; eta < static_cast<long>(k.period().size()); ++eta)
    out.components.add(Component::uhf_chain(shift(k, eta)));
  for (long eta = -window; eta <= window; ++eta) {
    const EvWord w = shift(k, eta);
    out.window.push_back({eta, w, aligned_tail(w)});
  }
  return out;
}

nlohmann::json UhfRestriction::to_json() const {
  nlohmann::json out = {{"components", components.to_json()},
                        {"infinite_multiplicity", infinite_multiplicity}};
  if (!window.empty()) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& s : window)
      w.push_back({{"eta", s.eta}, {"word", s.word.to_string()}, {"tail", s.tail.to_string()}});
    out["window"] = w;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

const SignedPermutation kIota{{1, 2}, {1, 1}};
const SignedPermutation kAlpha{{2, 1}, {1, 1}};
const SignedPermutation kBeta1{{1, 2}, {-1, 1}};
const SignedPermutation kBeta2{{1, 2}, {1, -1}};
const SignedPermutation kTheta{{1, 2}, {-1, -1}};

/// GP(sign)[.theta] . g as a reduced label. Writing the composite
/// beta2^[sign<0] theta^[theta] g = a . r with a in {iota, alpha} (which
/// fixes GP(+)) leaves r in {iota, beta2, theta, beta1 = beta2 theta}.
Component compose_gp(int sign, bool theta, const SignedPermutation& g, bool uhf) {
  SignedPermutation h = g;
  if (theta) h = kTheta.then(h);
  if (sign < 0) h = kBeta2.then(h);
  const std::pair<SignedPermutation, Component> reps[] = {{kIota, Component::gp(1, false)},
                                                          {kBeta2, Component::gp(-1, false)},
                                                          {kTheta, Component::gp(1, true)},
                                                          {kBeta1, Component::gp(-1, true)}};
  for (const auto& a : {kIota, kAlpha})
    for (const auto& [r, label] : reps)
      if (a.then(r) == h) return uhf ? Component::uhf_gp(label.sign) : label;
  throw std::logic_error("dihedral coset decomposition failed");
}

std::optional<Fingerprint> gp_from(int sign, const Morphism& m, bool uhf, std::string& how) {
  if (auto g = as_signed_permutation(m)) {
    Fingerprint f;
    f.add(compose_gp(sign, false, *g, uhf));
    how += dictionary_name(*g);
    return f;
  }
  if (auto split = split_direct_sum(m)) {
    auto g1 = as_signed_permutation(split->first);
    auto g2 = as_signed_permutation(split->second);
    if (!g1 || !g2) return std::nullopt;
    Fingerprint f;
    f.add(compose_gp(sign, false, *g1, uhf));
    f.add(compose_gp(sign, false, *g2, uhf));
    how += dictionary_name(*g1) + " +_" + to_string(split->frame) + " " + dictionary_name(*g2);
    return f;
  }
  return std::nullopt;
}

}  // namespace

GpResult gp_branch(int sign, const Morphism& m, bool uhf) {
  if (m.alphabet_size() != 2) throw std::invalid_argument("GP rules are stated on O_2 only");
  if (sign != 1 && sign != -1) throw std::invalid_argument("GP sign must be +1 or -1");
  GpResult out;
  std::string how;
  if (auto f = gp_from(sign, m, uhf, how)) {
    out.fingerprint = std::move(f);
    out.derivation = "m = " + how;
    return out;
  }
  const CuntzPoly s1 = CuntzPoly::generator(2, 1), s2 = CuntzPoly::generator(2, 2);
  const CuntzPoly u = s1 * s2.adjoint() + s2 * s1.adjoint();
  how.clear();
  if (auto f = gp_from(sign, ad_unitary(u, m), uhf, how)) {
    out.fingerprint = std::move(f);
    out.derivation = "Ad u . m = " + how;
    return out;
  }
  out.derivation = "not derivable by the GP rules";
  return out;
}

}  // namespace cuntz
