#include "rootadj/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>

#include "rootadj/error.hpp"

namespace rootadj {

namespace {

constexpr double kPi = std::numbers::pi;

// Expanded letter: 2k is g_k, 2k + 1 is its inverse.
using Code = int;

std::vector<Letter> compress(const std::vector<Code>& codes) {
  std::vector<Letter> out;
  for (Code c : codes) {
    int gen = c / 2, e = (c % 2 == 0) ? 1 : -1;
    if (!out.empty() && out.back().first == gen) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(gen, e);
    }
  }
  return out;
}

std::vector<Code> reduce_concat(std::vector<Code> u, const std::vector<Code>& w) {
  for (Code c : w) {
    if (!u.empty() && (u.back() ^ 1) == c)
      u.pop_back();
    else
      u.push_back(c);
  }
  return u;
}

std::vector<Code> invert(const std::vector<Code>& w) {
  std::vector<Code> out(w.rbegin(), w.rend());
  for (Code& c : out) c ^= 1;
  return out;
}

double word_count(size_t gens, int max_len) {
  double k = 2.0 * static_cast<double>(gens), total = 0, level = k;
  for (int len = 1; len <= max_len; ++len) {
    total += level;
    level *= k - 1;
  }
  return total;
}

// Visits freely reduced words by length, then lexicographically; stops when visit returns true.
void enumerate_words(const std::vector<IsometryMatrix>& gens, int max_len,
                     const std::function<bool(const std::vector<Code>&, const IsometryMatrix&)>& visit) {
  if (word_count(gens.size(), max_len) > kWordBudget)
    throw Error(ErrorCode::BudgetExceeded, "word enumeration would exceed the budget");
  std::vector<IsometryMatrix> letters;
  for (const IsometryMatrix& g : gens) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  const int k = static_cast<int>(letters.size());
  std::vector<Code> word;
  std::function<bool(int, const IsometryMatrix&)> dfs = [&](int remaining, const IsometryMatrix& m) {
    if (remaining == 0) return visit(word, m);
    for (Code c = 0; c < k; ++c) {
      if (!word.empty() && (word.back() ^ 1) == c) continue;
      word.push_back(c);
      bool stop = dfs(remaining - 1, m * letters[static_cast<size_t>(c)]);
      word.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (int len = 1; len <= max_len; ++len)
    if (dfs(len, IsometryMatrix::identity())) return;
}

Complex ray(const Complex& z, const BoundaryPoint& x) {
  if (x.is_infinity()) return 1.0;
  Complex p(x.value(), 0);
  return (p - z) / (p - std::conj(z));
}

std::optional<RegionCertificate> certify_oriented(const std::array<ProperGeodesic, 3>& o, const Tolerances& tol) {
  RegionCertificate cert;
  cert.lines = o;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      IntersectionResult r = intersect(o[i], o[j], tol);
      if (std::holds_alternative<Coincident>(r)) return std::nullopt;
      if (const auto* x = std::get_if<Crossing>(&r)) {
        const ProperGeodesic& third = o[3 - i - j];
        if (side_of(third, x->z, tol.geo) <= 0) return std::nullopt;
        auto inner_end = [&](const ProperGeodesic& g, const ProperGeodesic& other) {
          return side_of(other, g.p, tol.vertex) > 0 ? g.p : g.q;
        };
        double angle = std::abs(std::arg(ray(x->z, inner_end(o[i], o[j])) / ray(x->z, inner_end(o[j], o[i]))));
        if (angle < tol.vertex) return std::nullopt;
        long m = std::lround(kPi / angle);
        if (m < 2 || std::abs(angle - kPi / static_cast<double>(m)) > 10 * tol.vertex) return std::nullopt;
        cert.orders.push_back(m);
        continue;
      }
      for (int t = 0; t < 2; ++t) {
        const ProperGeodesic& g = t == 0 ? o[i] : o[j];
        const ProperGeodesic& other = t == 0 ? o[j] : o[i];
        if (side_of(g, other.p, tol.vertex) < 0 || side_of(g, other.q, tol.vertex) < 0) return std::nullopt;
      }
    }
  }
  cert.outcome = cert.orders.empty() ? Outcome::DiscreteFree : Outcome::DiscreteNotFree;
  return cert;
}

}  // namespace

IsometryMatrix evaluate_word(const std::vector<IsometryMatrix>& generators, const std::vector<Letter>& word) {
  IsometryMatrix m;
  for (auto [gen, e] : word) {
    if (gen < 0 || static_cast<size_t>(gen) >= generators.size())
      throw Error(ErrorCode::InvalidArgument, "word letter out of range");
    m = m * generators[static_cast<size_t>(gen)].pow(e);
  }
  return m;
}

std::string word_string(const std::vector<Letter>& word) {
  std::string out;
  for (auto [gen, e] : word) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(gen);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::optional<RegionCertificate> certify_region_free(const ProperGeodesic& g1, const ProperGeodesic& g2,
                                                     const ProperGeodesic& g3, const Tolerances& tol) {
  const ProperGeodesic* g[3] = {&g1, &g2, &g3};
  for (int mask = 0; mask < 8; ++mask) {
    std::array<ProperGeodesic, 3> o;
    for (int i = 0; i < 3; ++i) o[i] = (mask >> i) & 1 ? g[i]->reversed() : *g[i];
    if (auto cert = certify_oriented(o, tol)) return cert;
  }
  return std::nullopt;
}

std::optional<WordWitness> near_identity_search(const std::vector<IsometryMatrix>& generators, int max_len,
                                                double delta) {
  if (max_len > 12) throw Error(ErrorCode::InvalidArgument, "max_len must be at most 12");
  std::optional<WordWitness> found;
  enumerate_words(generators, max_len, [&](const std::vector<Code>& w, const IsometryMatrix& m) {
    double d = m.distance_to_identity();
    if (d >= delta) return false;
    found = WordWitness{compress(w), m, d};
    return true;
  });
  return found;
}

std::optional<WordWitness> infinite_order_elliptic_witness(const std::vector<IsometryMatrix>& generators,
                                                           int max_len, const Tolerances& tol) {
  if (max_len > 10) throw Error(ErrorCode::InvalidArgument, "max_len must be at most 10");
  std::optional<WordWitness> found;
  enumerate_words(generators, max_len, [&](const std::vector<Code>& w, const IsometryMatrix& m) {
    ElementClass c = classify(m, tol);
    if (!c.is(Kind::Elliptic)) return false;
    RationalRecognition r = recognize_rational(c.rotation_angle / (2 * kPi), tol);
    if (r.value || r.unresolved) return false;
    found = WordWitness{compress(w), m, r.residual};
    return true;
  });
  return found;
}

namespace {

using Pair = std::pair<IsometryMatrix, IsometryMatrix>;

template <typename T, typename Mul, typename Inv>
std::pair<T, T> apply_move(const std::pair<T, T>& p, const NielsenMove& mv, Mul mul, Inv inv) {
  if (mv.kind == NielsenMove::Swap) return {p.second, p.first};
  if (mv.kind == NielsenMove::InvertFirst) return {inv(p.first), p.second};
  if (mv.kind == NielsenMove::InvertSecond) return {p.first, inv(p.second)};
  bool first = mv.kind == NielsenMove::ReplaceFirst;
  const T& old = first ? p.first : p.second;
  const T& other = first ? p.second : p.first;
  T o = mv.exponent < 0 ? inv(other) : other;
  T next = mv.other_on_left ? mul(o, old) : mul(old, o);
  return first ? std::pair<T, T>{next, p.second} : std::pair<T, T>{p.first, next};
}

Pair apply_move(const Pair& p, const NielsenMove& mv) {
  return apply_move<IsometryMatrix>(
      p, mv, [](const IsometryMatrix& x, const IsometryMatrix& y) { return x * y; },
      [](const IsometryMatrix& x) { return x.inverse(); });
}

bool same_move(const NielsenMove& x, const NielsenMove& y) {
  return x.kind == y.kind && x.other_on_left == y.other_on_left && x.exponent == y.exponent;
}

bool is_stopping(const IsometryMatrix& a, const IsometryMatrix& b, const Tolerances& tol) {
  try {
    return std::holds_alternative<StoppingClass>(classify_stopping(build_hexagon(a, b, tol), tol));
  } catch (const Error&) {
    return false;
  }
}

const std::vector<std::vector<NielsenMove>> kFinishes = [] {
  const NielsenMove sw{NielsenMove::Swap}, i1{NielsenMove::InvertFirst}, i2{NielsenMove::InvertSecond};
  return std::vector<std::vector<NielsenMove>>{{}, {sw}, {i1}, {i2}, {i1, i2}, {sw, i1}, {sw, i2}, {sw, i1, i2}};
}();

}  // namespace

std::pair<IsometryMatrix, IsometryMatrix> replay(const std::pair<IsometryMatrix, IsometryMatrix>& pair,
                                                 const std::vector<NielsenMove>& moves) {
  Pair p = pair;
  for (const NielsenMove& mv : moves) p = apply_move(p, mv);
  return p;
}

std::string to_string(ReduceStatus s) {
  switch (s) {
    case ReduceStatus::Stopped: return "stopped";
    case ReduceStatus::NeedsElliptic: return "needs-elliptic";
    case ReduceStatus::NotFreeEvidence: return "not-free-evidence";
    case ReduceStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

ReduceResult nielsen_trace_reduce(const IsometryMatrix& a, const IsometryMatrix& b, int max_iter,
                                  const Tolerances& tol) {
  if (!classify(a, tol).is(Kind::Hyperbolic) || !classify(b, tol).is(Kind::Hyperbolic))
    throw Error(ErrorCode::InvalidArgument, "trace reduction needs two hyperbolic generators");
  build_hexagon(a, b, tol);

  ReduceResult res;
  res.pair = {a, b};
  std::pair<std::vector<Code>, std::vector<Code>> words = {{0}, {2}};
  auto push = [&](const NielsenMove& mv) {
    res.pair = apply_move(res.pair, mv);
    words = apply_move<std::vector<Code>>(words, mv, reduce_concat, invert);
    res.fsequence.moves.push_back(mv);
  };
  auto max_trace = [&] { return std::max(std::abs(res.pair.first.trace()), std::abs(res.pair.second.trace())); };

  for (int iter = 0;; ++iter) {
    res.max_traces.push_back(max_trace());
    // Swaps and inversions keep every trace; try them before giving up on the current pair.
    bool stopped = false;
    for (const auto& finish : kFinishes) {
      Pair p = res.pair;
      for (const NielsenMove& mv : finish) p = apply_move(p, mv);
      if (!is_stopping(p.first, p.second, tol)) continue;
      for (const NielsenMove& mv : finish) push(mv);
      stopped = true;
      break;
    }
    if (stopped) {
      res.status = ReduceStatus::Stopped;
      break;
    }
    if (iter >= max_iter) break;

    bool first_big = std::abs(res.pair.first.trace()) >= std::abs(res.pair.second.trace());
    NielsenMove::Kind kind = first_big ? NielsenMove::ReplaceFirst : NielsenMove::ReplaceSecond;
    const NielsenMove candidates[4] = {{kind, true, -1}, {kind, true, 1}, {kind, false, -1}, {kind, false, 1}};
    // Equal traces come from conjugate pairs; the one with smaller entries keeps the geometry well conditioned.
    int best = 0;
    double best_trace = 0, best_size = 0;
    for (int i = 0; i < 4; ++i) {
      Pair p = apply_move(res.pair, candidates[i]);
      const IsometryMatrix& m = first_big ? p.first : p.second;
      double t = std::abs(m.trace()), size = m.raw().max_abs();
      double slack = tol.alg * std::max(1.0, best_trace);
      if (i == 0 || t < best_trace - slack || (t < best_trace + slack && size < best_size)) {
        best = i;
        best_trace = t;
        best_size = size;
      }
    }
    double current = max_trace();
    if (best_trace >= current - tol.alg * std::max(1.0, current)) break;
    push(candidates[best]);

    const IsometryMatrix& fresh = first_big ? res.pair.first : res.pair.second;
    const std::vector<Code>& word = first_big ? words.first : words.second;
    ElementClass c = classify(fresh, tol);
    if (c.is(Kind::Identity)) {
      res.status = ReduceStatus::NotFreeEvidence;
      res.witness = WordWitness{compress(word), fresh, fresh.distance_to_identity()};
      break;
    }
    if (c.is(Kind::Elliptic)) {
      res.status = ReduceStatus::NeedsElliptic;
      RationalRecognition r = recognize_rational(c.rotation_angle / (2 * kPi), tol);
      res.witness = WordWitness{compress(word), fresh, r.residual};
      res.max_traces.push_back(max_trace());
      break;
    }
  }

  for (size_t i = 0; i < res.fsequence.moves.size(); ++i) {
    if (i > 0 && same_move(res.fsequence.moves[i], res.fsequence.moves[i - 1]))
      ++res.fsequence.runs.back();
    else
      res.fsequence.runs.push_back(1);
  }
  return res;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Agreement: return "agreement";
    case CheckStatus::Disagreement: return "disagreement";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct AdjoinedGroup {
  std::vector<IsometryMatrix> gens;
  std::vector<std::array<ProperGeodesic, 3>> triples;
};

AdjoinedGroup adjoined_group(const HexagonConfig& h, Role role, long s, long n, const Tolerances& tol) {
  long g = std::gcd(s, n);
  s /= g;
  n /= g;
  HexagonConfig base = h;
  if (s > n) {
    PowerSplit split = reduce_rational_power(s, n);
    IsometryMatrix a = h.a, b = h.b;
    (role == Role::B ? b : a) = (role == Role::B ? b : a).pow(split.w);
    base = build_hexagon(a, b, tol);
    if (split.r == 0) n = 1;
  }
  AdjoinedGroup out;
  if (n == 1) {
    out.gens = {base.a, base.b};
    out.triples.push_back({base.line(kL), base.line(kLA), base.line(kLB)});
    return out;
  }
  RootedView view = rooted_view(base, role);
  IsometryMatrix root = fan_root(base, role, n, tol);
  out.gens = {root, view.y};
  const ProperGeodesic& l = base.line(kL);
  const ProperGeodesic& ly = base.line(view.line_y);
  std::vector<ProperGeodesic> fan;
  for (long j = -1; j <= n + 1; ++j) fan.push_back(j == 0 ? l : involution_line(l, root.pow(j), tol));
  for (size_t j = 0; j + 1 < fan.size(); ++j) out.triples.push_back({fan[j], fan[j + 1], ly});
  return out;
}

}  // namespace

CrossCheckReport cross_check(const Verdict& v, const HexagonConfig& h, Role role, long s, long n,
                             const Tolerances& tol) {
  CrossCheckReport rep;
  AdjoinedGroup grp = adjoined_group(h, role, s, n, tol);
  for (const auto& t : grp.triples) {
    if ((rep.certificate = certify_region_free(t[0], t[1], t[2], tol))) break;
  }
  if (rep.certificate)
    rep.evidence.push_back(std::string("region certificate: ") + to_string(rep.certificate->outcome));

  std::vector<IsometryMatrix> elems = {grp.gens[0], grp.gens[1], grp.gens[0].inverse() * grp.gens[1]};
  bool finite_elliptic = false, other_elliptic = false;
  for (const IsometryMatrix& m : elems) {
    ElementClass c = classify(m, tol);
    if (!c.is(Kind::Elliptic)) continue;
    try {
      (is_primitive(c, tol) ? finite_elliptic : other_elliptic) = true;
    } catch (const Error&) {
      other_elliptic = true;
    }
  }

  auto disagree = [&](const std::string& why) {
    rep.status = CheckStatus::Disagreement;
    rep.evidence.push_back(why);
  };
  bool cert_free = rep.certificate && rep.certificate->outcome == Outcome::DiscreteFree;
  bool cert_not_free = rep.certificate && rep.certificate->outcome == Outcome::DiscreteNotFree;

  switch (v.outcome) {
    case Outcome::DiscreteFree:
      if (finite_elliptic || other_elliptic) {
        disagree("elliptic element among the generators and their quotient");
      } else if (cert_not_free) {
        disagree("region certificate shows torsion");
      } else if ((rep.witness = near_identity_search(grp.gens, 8, 1e-3))) {
        disagree("word close to the identity");
      } else {
        rep.status = cert_free ? CheckStatus::Agreement : CheckStatus::Inconclusive;
      }
      break;
    case Outcome::DiscreteNotFree:
      if (cert_free) {
        disagree("region certificate shows a free group");
      } else if ((rep.witness = infinite_order_elliptic_witness(grp.gens, 4, tol))) {
        disagree("elliptic of infinite order");
      } else {
        rep.status = (finite_elliptic || cert_not_free) ? CheckStatus::Agreement : CheckStatus::Inconclusive;
      }
      break;
    case Outcome::NotDiscrete:
      if (rep.certificate) {
        disagree("region certificate shows a discrete group");
      } else if ((rep.witness = infinite_order_elliptic_witness(grp.gens, 6, tol)) ||
                 (rep.witness = near_identity_search(grp.gens, 8, 1e-3))) {
        rep.status = CheckStatus::Agreement;
      }
      break;
    case Outcome::NeedsEllipticAlgorithm: {
      if (cert_free) {
        disagree("region certificate shows a free group");
        break;
      }
      std::vector<IsometryMatrix> pair = grp.gens;
      if (v.reduced_pair) pair = {v.reduced_pair->first, v.reduced_pair->second};
      rep.witness = infinite_order_elliptic_witness(pair, 6, tol);
      bool elliptic = v.elliptic && classify(*v.elliptic, tol).is(Kind::Elliptic);
      if (rep.witness)
        rep.evidence.push_back("elliptic of infinite order in the reduced pair");
      rep.status = elliptic ? CheckStatus::Agreement : CheckStatus::Inconclusive;
      break;
    }
  }
  if (rep.status == CheckStatus::Disagreement && v.borderline()) {
    rep.status = CheckStatus::Inconclusive;
    rep.evidence.push_back("verdict carries borderline flags");
  }
  return rep;
}

}  // namespace rootadj
