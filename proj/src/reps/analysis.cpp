#include "sl2loc/reps/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sl2loc/linalg.hpp"

namespace sl2loc::reps {

namespace {

Rational eval_k(const IndexPoly& c, long k) {
  return c.eval(Rational(k), Rational(0), Rational(0));
}

Rational coeff_of_k(const IndexPoly& p, int power) {
  auto it = p.terms().find(IndexPoly::Monomial{power, 0, 0});
  return it == p.terms().end() ? Rational(0) : it->second;
}

struct RootAnalysis {
  bool identically_zero = false;
  bool resolved = true;         // false when degree > 2
  std::vector<Rational> roots;  // all rational roots
};

/// Rational roots of a numeric coefficient polynomial in k (degree <= 2).
RootAnalysis rational_roots_in_k(const IndexPoly& p) {
  RootAnalysis ra;
  if (p.is_zero()) {
    ra.identically_zero = true;
    return ra;
  }
  if (p.degree_in(0) > 2 || p.degree_in(1) > 0 || p.degree_in(2) > 0) {
    ra.resolved = false;
    return ra;
  }
  Rational c0 = coeff_of_k(p, 0), c1 = coeff_of_k(p, 1), c2 = coeff_of_k(p, 2);
  if (c2.is_zero()) {
    if (!c1.is_zero()) ra.roots.push_back(-c0 / c1);
    return ra;
  }
  Rational disc = c1 * c1 - Rational(4) * c0 * c2;
  if (disc.is_negative()) return ra;
  auto s = disc.exact_sqrt();
  if (!s) return ra;  // irrational roots: no rational (hence no integer) zeros
  ra.roots.push_back((-c1 + *s) / (Rational(2) * c2));
  if (!s->is_zero()) ra.roots.push_back((-c1 - *s) / (Rational(2) * c2));
  return ra;
}

/// coeff(k) != 0 for every integer k in the domain with k >= from, certified
/// by exact root analysis.
bool nonvanishing_from(const IndexPoly& coeff, const IndexDomain& dom, long from) {
  RootAnalysis ra = rational_roots_in_k(coeff);
  if (ra.identically_zero || !ra.resolved) return false;
  for (const Rational& r : ra.roots) {
    if (!r.is_integer()) continue;
    long k = r.to_long();
    if (dom.contains(k) && k >= from) return false;
  }
  return true;
}

/// Kernel of (act(X) - lambda) on the window slice, as module elements.
/// Rows range over every index the images touch, so a kernel vector is in
/// the honest kernel of the operator, not of a window truncation.
std::vector<Element> solve_kernel(const Sl2Module& M, Letter x, const Rational& lambda,
                                  long window) {
  const std::vector<long> cols = M.domain.window_slice(window);

  std::map<long, linalg::SparseRow> by_target;  // target index -> (col -> coeff)
  for (size_t j = 0; j < cols.size(); ++j) {
    Element img = M.act(x, M.basis_element(cols[j]));
    if (!lambda.is_zero()) img.add(cols[j], -lambda);
    for (const auto& [idx, c] : img.parts) by_target[idx][j] = c;
  }
  std::vector<linalg::SparseRow> rows;
  rows.reserve(by_target.size());
  for (auto& [idx, row] : by_target) rows.push_back(std::move(row));

  std::vector<Element> out;
  for (const auto& v : linalg::sparse_kernel_basis(rows, cols.size())) {
    Element e = M.zero_element();
    for (const auto& [j, c] : v) e.parts[cols[j]] = c;
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

/// Reduces a set of candidate elements to a canonical echelon basis.
std::vector<Element> reduce_elements(const Sl2Module& M, const std::vector<Element>& vs,
                                     long /*window*/) {
  linalg::SparseSpan span;
  for (const auto& v : vs) span.insert(v.parts);
  std::vector<Element> out;
  for (const auto& row : span.reduced_basis()) {
    Element e = M.zero_element();
    e.parts = row;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

// --- weights -----------------------------------------------------------------

bool is_weight_basis(const Sl2Module& M) {
  return M.numeric_rule(Letter::H).is_diagonal();
}

Rational weight_of(const Sl2Module& M, long k) {
  ActionRule h = M.numeric_rule(Letter::H);
  auto c = h.coeff_at(0);
  return c ? eval_k(*c, k) : Rational(0);
}

WeightsResult weights(const Sl2Module& M, long window) {
  ActionRule h = M.numeric_rule(Letter::H);
  if (!h.is_diagonal()) {
    for (const auto& term : h.terms)
      if (term.shift != 0) return NotAWeightBasis{term.shift};
  }
  WeightList list;
  for (long k : M.domain.window_slice(window)) list.entries.emplace_back(k, weight_of(M, k));
  return list;
}

// --- Casimir -------------------------------------------------------------------

Rational casimir_scalar(const Sl2Module& M, long window) {
  std::optional<Rational> scalar;
  for (long k : M.domain.window_slice(window)) {
    Element v = M.basis_element(k);
    Element omega = M.act(Letter::H, M.act(Letter::H, v)) +
                    M.act(Letter::E, M.act(Letter::F, v)).scaled(Rational(2)) +
                    M.act(Letter::F, M.act(Letter::E, v)).scaled(Rational(2));
    Element diff = omega - v.scaled(omega.coeff(k));
    if (!diff.is_zero())
      throw Error("casimir_scalar: not scalar at k=" + std::to_string(k) + " on " +
                  M.id().to_string());
    if (scalar && !(*scalar == omega.coeff(k)))
      throw Error("casimir_scalar: scalar varies across the window on " +
                  M.id().to_string());
    scalar = omega.coeff(k);
  }
  if (!scalar) throw Error("casimir_scalar: empty window");
  return *scalar;
}

// --- vector solves ---------------------------------------------------------------

namespace {

std::vector<Element> weight_filter(const Sl2Module& M, const std::vector<Element>& vs,
                                   long window) {
  std::vector<Element> kept;
  if (is_weight_basis(M)) {
    // split each solution into weight-homogeneous components; each component
    // is itself a solution because the solved operator maps weight spaces to
    // weight spaces
    for (const auto& v : vs) {
      std::map<Rational, Element> by_weight;
      for (const auto& [k, c] : v.parts) {
        auto [it, fresh] = by_weight.try_emplace(weight_of(M, k), M.zero_element());
        it->second.add(k, c);
      }
      for (auto& [w, comp] : by_weight) kept.push_back(comp);
    }
  } else {
    for (const auto& v : vs) {
      if (v.is_zero()) continue;
      Element hv = M.act(Letter::H, v);
      Rational c = hv.coeff(v.parts.begin()->first) / v.parts.begin()->second;
      if (hv == v.scaled(c)) kept.push_back(v);
    }
  }
  return reduce_elements(M, kept, window);
}

}  // namespace

std::vector<Element> highest_weight_vectors(const Sl2Module& M, long window) {
  return weight_filter(M, solve_kernel(M, Letter::E, Rational(0), window), window);
}

std::vector<Element> lowest_weight_vectors(const Sl2Module& M, long window) {
  return weight_filter(M, solve_kernel(M, Letter::F, Rational(0), window), window);
}

std::vector<Element> whittaker_vectors(const Sl2Module& M, const Rational& eta,
                                       long window) {
  return reduce_elements(M, solve_kernel(M, Letter::E, eta, window), window);
}

std::vector<Element> h_eigenvectors(const Sl2Module& M, long window) {
  if (is_weight_basis(M)) {
    std::vector<Element> vs;
    for (long k : M.domain.window_slice(window)) vs.push_back(M.basis_element(k));
    return vs;
  }
  // Non-diagonal H. If the extreme off-diagonal term never vanishes, a
  // finitely supported eigenvector is impossible: at the extreme index K of
  // a candidate v, the image coefficient at K + shift is coeff(K) * v_K and
  // nothing else reaches it, so v_K = 0 and the support collapses.
  ActionRule h = M.numeric_rule(Letter::H);
  long extreme_shift = 0;
  IndexPoly extreme_coeff;
  for (const auto& term : h.terms)
    if (std::abs(term.shift) > std::abs(extreme_shift)) {
      extreme_shift = term.shift;
      extreme_coeff = term.coeff;
    }
  long lo = M.domain.kind == IndexDomain::Kind::AllIntegers ? -4 * window : 0;
  if (extreme_shift != 0 && nonvanishing_from(extreme_coeff, M.domain, lo)) {
    // corroborate with exact solves at a few diagonal candidate eigenvalues
    auto d = h.coeff_at(0);
    for (long k : {0L, 1L, window / 2}) {
      Rational cand = d ? eval_k(*d, k) : Rational(0);
      if (!solve_kernel(M, Letter::H, cand, window).empty())
        throw Error("h_eigenvectors: cascade argument contradicted by a solve");
    }
    return {};
  }
  throw Error("h_eigenvectors: undecided module shape on " + M.id().to_string());
}

// --- generated subspaces ----------------------------------------------------------

GeneratedSubspace submodule_generated(const Sl2Module& M, const Element& v, long window) {
  if (v.is_zero()) throw Error("submodule_generated: zero generator");
  const std::vector<long> cols = M.domain.window_slice(window);
  std::set<long> in_window(cols.begin(), cols.end());

  bool window_closed = true;
  auto clip = [&](Element e) {
    Element r = M.zero_element();
    for (const auto& [k, c] : e.parts) {
      if (in_window.count(k))
        r.add(k, c);
      else
        window_closed = false;
    }
    return r;
  };

  for (const auto& [k, c] : v.parts)
    if (!in_window.count(k))
      throw Error("submodule_generated: generator not supported in the window");
  Element start = v;

  linalg::SparseSpan span;
  span.insert(start.parts);
  std::vector<Element> work{start};
  while (!work.empty()) {
    Element e = work.back();
    work.pop_back();
    for (Letter x : {Letter::E, Letter::F, Letter::H}) {
      Element img = clip(M.act(x, e));
      if (img.is_zero()) continue;
      if (span.insert(img.parts)) work.push_back(img);
    }
  }

  GeneratedSubspace out;
  out.window_closed = window_closed;
  for (const auto& row : span.reduced_basis()) {
    Element e = M.zero_element();
    e.parts = row;
    out.basis.push_back(std::move(e));
  }
  return out;
}

// --- composition -------------------------------------------------------------------

std::string CompositionReport::describe() const {
  std::string out = family_name(family) + " t=" + t.to_string() + ": submodule dim " +
                    std::to_string(sub_indices.size());
  out += sub_invariant ? " (invariant" : " (NOT invariant";
  out += sub_irreducible ? ", irreducible)" : ", reducible)";
  out += "; weights";
  for (const auto& w : sub_weights) out += " " + w.to_string();
  if (quotient_lowest)
    out += "; quotient lowest-weight piece from index " +
           std::to_string(quotient_lowest->index) + " weight " +
           quotient_lowest->weight.to_string();
  if (quotient_highest)
    out += "; quotient highest-weight piece from index " +
           std::to_string(quotient_highest->index) + " weight " +
           quotient_highest->weight.to_string();
  if (!split_verified) out += "; split NOT verified";
  return out;
}

namespace {

CompositionReport composition_once(Family family, const Rational& t, long window);

bool composition_agrees(const CompositionReport& a, const CompositionReport& b) {
  auto entry_eq = [](const std::optional<WeightEntry>& x,
                     const std::optional<WeightEntry>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->index == y->index && x->weight == y->weight);
  };
  return a.sub_indices == b.sub_indices && a.sub_invariant == b.sub_invariant &&
         a.sub_irreducible == b.sub_irreducible &&
         a.split_verified == b.split_verified &&
         entry_eq(a.quotient_highest, b.quotient_highest) &&
         entry_eq(a.quotient_lowest, b.quotient_lowest);
}

}  // namespace

CompositionReport composition_report(Family family, const Rational& t, long window) {
  CompositionReport rep = composition_once(family, t, window);
  rep.window_stable = composition_agrees(rep, composition_once(family, t, 2 * window));
  return rep;
}

namespace {

CompositionReport composition_once(Family family, const Rational& t, long window) {
  if (family != Family::DualVermaOpen && family != Family::PrincipalEven)
    throw Error("composition_report: only DualVermaOpen and PrincipalEven have the "
                "t-dimensional submodule analysis");
  Sl2Module M = global_module(family, t, Rational(0));
  const long tm1 = t.to_long() - 1;

  CompositionReport rep;
  rep.family = family;
  rep.t = t;
  rep.window = window;

  std::set<long> sub;
  for (long k = 0; k <= tm1; ++k) {
    sub.insert(k);
    rep.sub_indices.push_back(k);
    rep.sub_weights.push_back(weight_of(M, k));
  }

  // exact invariance of the span
  rep.sub_invariant = true;
  for (long k : rep.sub_indices)
    for (Letter x : {Letter::E, Letter::F, Letter::H})
      for (const auto& [idx, c] : M.act(x, M.basis_element(k)).parts)
        if (!sub.count(idx)) rep.sub_invariant = false;

  // irreducibility of the submodule: mutual reachability inside the span
  rep.sub_irreducible = true;
  for (long k = 0; k < tm1; ++k) {
    if (M.act(Letter::F, M.basis_element(k)).coeff(k + 1).is_zero())
      rep.sub_irreducible = false;
    if (M.act(Letter::E, M.basis_element(k + 1)).coeff(k).is_zero())
      rep.sub_irreducible = false;
  }

  auto act_mod_sub = [&](Letter x, const Element& e) {
    Element r = M.act(x, e);
    for (long k : rep.sub_indices) {
      auto it = r.parts.find(k);
      if (it != r.parts.end()) r.parts.erase(it);
    }
    return r;
  };

  // the piece above the submodule: a highest-weight quotient generated at t
  Element top_gen = M.basis_element(tm1 + 1);
  if (act_mod_sub(Letter::E, top_gen).is_zero())
    rep.quotient_highest = WeightEntry{tm1 + 1, weight_of(M, tm1 + 1)};
  for (long k = tm1 + 1; k <= window; ++k)
    rep.quotient_upper_weights.push_back(weight_of(M, k));

  rep.split_verified = rep.quotient_highest.has_value();
  if (family == Family::PrincipalEven) {
    // and the piece below: a lowest-weight quotient generated at -1
    Element low_gen = M.basis_element(-1);
    if (act_mod_sub(Letter::F, low_gen).is_zero())
      rep.quotient_lowest = WeightEntry{-1, weight_of(M, -1)};
    for (long k = -1; k >= -window; --k)
      rep.quotient_lower_weights.push_back(weight_of(M, k));
    rep.split_verified = rep.split_verified && rep.quotient_lowest.has_value();
    // no action may cross between the two pieces modulo the submodule
    for (long k : M.domain.window_slice(window)) {
      if (sub.count(k)) continue;
      for (Letter x : {Letter::E, Letter::F, Letter::H})
        for (const auto& [idx, c] : act_mod_sub(x, M.basis_element(k)).parts)
          if ((k > tm1) != (idx > tm1)) rep.split_verified = false;
    }
  }
  return rep;
}

}  // namespace

// --- irreducibility -----------------------------------------------------------------

std::string Certificate::describe() const {
  switch (kind) {
    case Kind::IrreducibleWeight:
      return std::string("irreducible (multiplicity-one weight reachability") +
             (window_stable ? ", window-stable)" : ")");
    case Kind::IrreducibleWhittaker:
      return std::string("irreducible (Whittaker lowering cascade") +
             (window_stable ? ", window-stable)" : ")");
    case Kind::Reducible: {
      std::string out = "reducible: invariant span of indices {";
      for (size_t i = 0; i < witness.size(); ++i)
        out += (i ? "," : "") + std::to_string(witness[i]);
      return out + "}";
    }
    default:
      return "unknown: " + detail;
  }
}

namespace {

Certificate certify_once(const Sl2Module& M, long window) {
  Certificate cert;
  const std::vector<long> slice = M.domain.window_slice(window);
  std::map<long, size_t> pos;
  for (size_t i = 0; i < slice.size(); ++i) pos[slice[i]] = i;

  if (is_weight_basis(M)) {
    // strategy (a): multiplicity-one weight module
    std::set<Rational> seen;
    for (long k : slice)
      if (!seen.insert(weight_of(M, k)).second) {
        cert.kind = Certificate::Kind::Unknown;
        cert.detail = "weight multiplicities exceed one on the window";
        return cert;
      }

    // adjacency through nonzero action coefficients; record edges that exit
    // the window (they disqualify a subset from witnessing reducibility)
    std::vector<std::vector<size_t>> out(slice.size()), in(slice.size());
    std::vector<bool> exits(slice.size(), false);
    for (size_t i = 0; i < slice.size(); ++i) {
      long k = slice[i];
      for (Letter x : {Letter::E, Letter::F, Letter::H}) {
        for (const auto& term : M.numeric_rule(x).terms) {
          if (term.shift == 0) continue;
          if (eval_k(term.coeff, k).is_zero()) continue;
          long target = k + term.shift;
          if (!M.domain.contains(target)) continue;  // dies by the module relation
          auto it = pos.find(target);
          if (it == pos.end()) {
            exits[i] = true;
            continue;
          }
          out[i].push_back(it->second);
          in[it->second].push_back(i);
        }
      }
    }

    auto reach = [&](size_t start, const std::vector<std::vector<size_t>>& adj) {
      std::vector<bool> vis(slice.size(), false);
      std::vector<size_t> stack{start};
      vis[start] = true;
      while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        for (size_t w : adj[u])
          if (!vis[w]) {
            vis[w] = true;
            stack.push_back(w);
          }
      }
      return vis;
    };

    std::vector<bool> fwd = reach(0, out), bwd = reach(0, in);
    bool strongly_connected = true;
    for (size_t i = 0; i < slice.size(); ++i)
      if (!fwd[i] || !bwd[i]) strongly_connected = false;
    if (strongly_connected) {
      cert.kind = Certificate::Kind::IrreducibleWeight;
      cert.detail = "every window basis vector generates every other";
      return cert;
    }

    // find a closed proper forward closure as a witness
    for (size_t i = 0; i < slice.size(); ++i) {
      std::vector<bool> cl = reach(i, out);
      size_t size = 0;
      bool closed = true;
      for (size_t j = 0; j < slice.size(); ++j)
        if (cl[j]) {
          ++size;
          if (exits[j]) closed = false;
        }
      if (!closed || size == slice.size()) continue;
      cert.kind = Certificate::Kind::Reducible;
      for (size_t j = 0; j < slice.size(); ++j)
        if (cl[j]) cert.witness.push_back(slice[j]);
      return cert;
    }
    cert.kind = Certificate::Kind::Unknown;
    cert.detail = "reachability fails only through the window boundary";
    return cert;
  }

  if (M.family == Family::WhittakerOpen && !M.eta.is_zero()) {
    // strategy (b): E - eta strictly lowers with provably nonvanishing
    // coefficients, so every nonzero element reaches b_0; b_0 then
    // generates the window upward through the eta terms.
    ActionRule lower = M.numeric_rule(Letter::E) - single_rule(0, IndexPoly(M.eta));
    if (lower.terms.size() != 1 || lower.terms[0].shift != -1) {
      cert.kind = Certificate::Kind::Unknown;
      cert.detail = "E - eta is not a single lowering shift";
      return cert;
    }
    if (!nonvanishing_from(lower.terms[0].coeff, M.domain, 1)) {
      cert.kind = Certificate::Kind::Unknown;
      cert.detail = "lowering coefficient may vanish above the window";
      return cert;
    }
    for (long k = 1; k <= window; ++k)
      if (eval_k(lower.terms[0].coeff, k).is_zero()) {
        cert.kind = Certificate::Kind::Unknown;
        cert.detail = "lowering coefficient vanishes inside the window";
        return cert;
      }
    GeneratedSubspace up = submodule_generated(M, M.basis_element(0), window);
    if (up.basis.size() != slice.size()) {
      cert.kind = Certificate::Kind::Unknown;
      cert.detail = "b_0 does not generate the full window upward";
      return cert;
    }
    cert.kind = Certificate::Kind::IrreducibleWhittaker;
    cert.detail = "E - eta lowers to b_0; b_0 generates upward";
    return cert;
  }

  cert.kind = Certificate::Kind::Unknown;
  cert.detail = "no certificate strategy applies to this module shape";
  return cert;
}

}  // namespace

Certificate irreducibility_certificate(const Sl2Module& M, long window) {
  Certificate cert = certify_once(M, window);
  Certificate again = certify_once(M, 2 * window);
  cert.window_stable = cert.kind == again.kind && cert.witness == again.witness;
  return cert;
}

// --- K-weight parity -----------------------------------------------------------------

ParityReport k_weight_parity(Family family, const Rational& t, long window) {
  if (family != Family::PrincipalEven && family != Family::PrincipalOdd)
    throw Error("k_weight_parity: only the principal-series families carry the "
                "K-type parity dichotomy");
  auto parity_of = [&](Family f) {
    Sl2Module M = global_module(f, t, Rational(0));
    std::set<int> parities;
    for (long k : M.domain.window_slice(window)) {
      Rational w = weight_of(M, k);
      long v = w.to_long();  // integer weights for integer t
      parities.insert(static_cast<int>(((v % 2) + 2) % 2));
    }
    return parities;
  };
  ParityReport rep;
  rep.family = family;
  auto own = parity_of(family);
  rep.single_parity = own.size() == 1;
  rep.parity = own.empty() ? 0 : *own.begin();
  Family other =
      family == Family::PrincipalEven ? Family::PrincipalOdd : Family::PrincipalEven;
  auto theirs = parity_of(other);
  rep.other_parity = theirs.empty() ? 0 : *theirs.begin();
  rep.distinct = rep.single_parity && theirs.size() == 1 && rep.parity != rep.other_parity;
  return rep;
}

// --- Borel-Weil dimension count ---------------------------------------------------------

long borel_weil_dim(long n) {
  const long B = std::max(std::labs(n) + 3, 4L);
  // unknowns: p = sum a_e z^e (e in 0..B), q = sum b_j w^j (j in 0..B);
  // constraint: p(z) - z^n q(1/z) = 0 coefficientwise
  const size_t ncols = 2 * static_cast<size_t>(B + 1);
  linalg::Matrix A;
  for (long e = std::min(0L, n - B); e <= std::max(B, n); ++e) {
    linalg::Row row(ncols, Rational(0));
    bool nonzero = false;
    if (0 <= e && e <= B) {
      row[static_cast<size_t>(e)] = Rational(1);
      nonzero = true;
    }
    long j = n - e;
    if (0 <= j && j <= B) {
      row[static_cast<size_t>(B + 1 + j)] = Rational(-1);
      nonzero = true;
    }
    if (nonzero) A.push_back(std::move(row));
  }
  return static_cast<long>(ncols) - linalg::rank(A);
}

}  // namespace sl2loc::reps
