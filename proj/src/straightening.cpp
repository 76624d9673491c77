#include "aslkit/straightening.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "aslkit/error.hpp"
#include "aslkit/linalg.hpp"
#include "aslkit/veronese.hpp"

namespace aslkit {

bool is_standard(const Poset& p, const PosetMonomial& m) {
  for (ElementId a : m.factors) p.check(a);
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < m.factors.size(); ++j) {
      if (!p.comparable(m.factors[i], m.factors[j])) return false;
    }
  }
  return true;
}

// ---- LinComb ----------------------------------------------------------------

LinComb LinComb::monomial(PosetMonomial m, mpq_class c) {
  LinComb out;
  out.add(m, c);
  return out;
}

void LinComb::add(const PosetMonomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

LinComb& LinComb::operator+=(const LinComb& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

LinComb& LinComb::operator-=(const LinComb& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

LinComb LinComb::scaled(const mpq_class& c) const {
  LinComb out;
  if (sgn(c) == 0) return out;
  for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
  return out;
}

LinComb operator-(LinComb a, const LinComb& b) {
  a -= b;
  return a;
}

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::Discrete: return "discrete";
    case SystemKind::Hibi: return "hibi";
    case SystemKind::DiscreteVeronese2: return "v2-discrete";
    case SystemKind::HibiVeronese2: return "v2-hibi";
  }
  return "unknown";
}

// ---- systems ------------------------------------------------------------------

namespace {

std::vector<int> positions(const Poset& p) {
  std::vector<int> pos(p.size());
  const auto ext = linear_extension(p);
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
  return pos;
}

std::pair<ElementId, ElementId> ordered_key(const StraighteningSystem& s, ElementId a, ElementId b) {
  return s.ext_pos[a] < s.ext_pos[b] ? std::pair{a, b} : std::pair{b, a};
}

StraighteningSystem make_system(SystemKind kind, Poset host) {
  StraighteningSystem s;
  s.kind = kind;
  s.host = std::move(host);
  s.ext_pos = positions(s.host);
  return s;
}

StraighteningSystem make_veronese_system(SystemKind kind, const Poset& base) {
  auto z = zigzag(base, 2);
  auto s = make_system(kind, std::move(z.poset));
  s.base = base;
  s.vertex_tuples = std::move(z.tuples);
  return s;
}

void require_distributive(const LatticeView& l) {
  auto d = is_distributive(l);
  if (!d.distributive) {
    const auto& p = l.base();
    const auto& w = *d.witness;
    throw Error(ErrorCode::NotDistributive, "lattice is not distributive",
                p.label(w[0]) + "," + p.label(w[1]) + "," + p.label(w[2]));
  }
}

std::string tuple_text(const Poset& base, ElementId a, ElementId b) {
  return "(" + base.label(a) + " " + base.label(b) + ")";
}

}  // namespace

PosetMonomial StraighteningSystem::monomial(std::vector<ElementId> factors) const {
  for (ElementId a : factors) host.check(a);
  std::sort(factors.begin(), factors.end(), [&](ElementId x, ElementId y) { return ext_pos[x] < ext_pos[y]; });
  return PosetMonomial{std::move(factors)};
}

const StraighteningRelation& StraighteningSystem::relation(ElementId a, ElementId b) const {
  auto it = relations.find(ordered_key(*this, a, b));
  if (it == relations.end()) {
    throw Error(ErrorCode::InvalidArgument, "no relation for a comparable pair", host.label(a) + "," + host.label(b));
  }
  return it->second;
}

std::vector<ElementId> StraighteningSystem::flatten(const PosetMonomial& m) const {
  if (!veronese()) return m.factors;
  std::vector<ElementId> out;
  for (ElementId v : m.factors) out.insert(out.end(), vertex_tuples[v].begin(), vertex_tuples[v].end());
  return out;
}

StraighteningSystem discrete_system(const Poset& p) {
  auto s = make_system(SystemKind::Discrete, p);
  for (auto [a, b] : incomparable_pairs(s.host)) {
    auto key = ordered_key(s, a, b);
    s.relations[key] = StraighteningRelation{s.monomial({a, b}), LinComb{}};
  }
  return s;
}

StraighteningSystem hibi_system(const LatticeView& l) {
  require_distributive(l);
  auto s = make_system(SystemKind::Hibi, l.base());
  for (auto [a, b] : incomparable_pairs(s.host)) {
    auto key = ordered_key(s, a, b);
    s.relations[key] = StraighteningRelation{s.monomial({a, b}),
                                             LinComb::monomial(s.monomial({l.meet_of(a, b), l.join_of(a, b)}))};
  }
  return s;
}

StraighteningSystem veronese2_discrete_system(const Poset& p) {
  auto s = make_veronese_system(SystemKind::DiscreteVeronese2, p);
  std::vector<int> base_pos = positions(p);
  std::map<std::vector<ElementId>, ElementId> index;
  for (std::size_t v = 0; v < s.vertex_tuples.size(); ++v) index[s.vertex_tuples[v]] = static_cast<ElementId>(v);

  for (auto [x, y] : incomparable_pairs(s.host)) {
    std::vector<ElementId> q = s.vertex_tuples[x];
    q.insert(q.end(), s.vertex_tuples[y].begin(), s.vertex_tuples[y].end());
    LinComb rhs;
    if (is_chain(p, q)) {
      std::sort(q.begin(), q.end(), [&](ElementId a, ElementId b) { return base_pos[a] < base_pos[b]; });
      // Outer and inner pairs of the sorted quadruple.
      rhs = LinComb::monomial(s.monomial({index.at({q[0], q[3]}), index.at({q[1], q[2]})}));
    }
    s.relations[ordered_key(s, x, y)] = StraighteningRelation{s.monomial({x, y}), std::move(rhs)};
  }
  return s;
}

std::pair<std::pair<ElementId, ElementId>, std::pair<ElementId, ElementId>> hibi_veronese_rhs(
    const LatticeView& l, ElementId a, ElementId b, ElementId c, ElementId d) {
  const ElementId lo = l.meet_of(a, c);
  const ElementId hi = l.join_of(b, d);
  const ElementId mu = l.join_of(l.meet_of(a, d), l.meet_of(b, c));
  const ElementId nu = l.meet_of(l.join_of(a, d), l.join_of(b, c));
  return {{lo, hi}, {mu, nu}};
}

StraighteningSystem veronese2_hibi_system(const LatticeView& l) {
  require_distributive(l);
  const Poset& p = l.base();
  auto s = make_veronese_system(SystemKind::HibiVeronese2, p);
  std::map<std::vector<ElementId>, ElementId> index;
  for (std::size_t v = 0; v < s.vertex_tuples.size(); ++v) index[s.vertex_tuples[v]] = static_cast<ElementId>(v);

  for (auto [x, y] : incomparable_pairs(s.host)) {
    const ElementId a = s.vertex_tuples[x][0], b = s.vertex_tuples[x][1];
    const ElementId c = s.vertex_tuples[y][0], d = s.vertex_tuples[y][1];
    const auto [first, second] = hibi_veronese_rhs(l, a, b, c, d);
    const std::string where = tuple_text(p, a, b) + tuple_text(p, c, d) + " -> " +
                              tuple_text(p, first.first, first.second) + tuple_text(p, second.first, second.second);
    if (!p.leq(first.first, first.second) || !p.leq(second.first, second.second)) {
      throw Error(ErrorCode::ProofObligationFailed, "right-hand factor is not a 2-multichain", where);
    }
    const ElementId v1 = index.at({first.first, first.second});
    const ElementId v2 = index.at({second.first, second.second});
    if (!s.host.leq(v1, v2)) {
      throw Error(ErrorCode::ProofObligationFailed, "right-hand side is not standard", where);
    }
    if (!s.host.leq(v1, x) || !s.host.leq(v1, y)) {
      throw Error(ErrorCode::ProofObligationFailed, "smaller factor is not below both vertices", where);
    }
    s.relations[ordered_key(s, x, y)] =
        StraighteningRelation{s.monomial({x, y}), LinComb::monomial(s.monomial({v1, v2}))};
  }
  return s;
}

// ---- rewriting ----------------------------------------------------------------

std::optional<std::pair<std::size_t, std::size_t>> least_incomparable_pair(const StraighteningSystem& s,
                                                                           const PosetMonomial& m) {
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    for (std::size_t j = i + 1; j < m.factors.size(); ++j) {
      if (!s.host.comparable(m.factors[i], m.factors[j])) return std::pair{i, j};
    }
  }
  return std::nullopt;
}

LinComb rewrite_at(const StraighteningSystem& s, const PosetMonomial& m, std::size_t i, std::size_t j) {
  const auto& rel = s.relation(m.factors.at(i), m.factors.at(j));
  std::vector<ElementId> rest;
  for (std::size_t k = 0; k < m.factors.size(); ++k) {
    if (k != i && k != j) rest.push_back(m.factors[k]);
  }
  LinComb out;
  for (const auto& [t, c] : rel.rhs.terms()) {
    auto f = rest;
    f.insert(f.end(), t.factors.begin(), t.factors.end());
    out.add(s.monomial(std::move(f)), c);
  }
  return out;
}

const Straightener::Entry& Straightener::reduce(const PosetMonomial& m, std::vector<PosetMonomial>& path) {
  if (auto it = cache_.find(m); it != cache_.end()) return it->second;
  if (std::find(path.begin(), path.end(), m) != path.end()) {
    throw Error(ErrorCode::NonTermination, "rewriting revisited a monomial", monomial_text(s_.host, m));
  }
  Entry e;
  auto pr = least_incomparable_pair(s_, m);
  if (!pr) {
    e.nf = LinComb::monomial(m);
  } else {
    path.push_back(m);
    const LinComb step = rewrite_at(s_, m, pr->first, pr->second);
    for (const auto& [t, c] : step.terms()) {
      const Entry& sub = reduce(t, path);
      e.nf += sub.nf.scaled(c);
      e.depth = std::max(e.depth, sub.depth + 1);
    }
    if (step.is_zero()) e.depth = 1;
    path.pop_back();
  }
  const std::size_t budget = 4 * m.degree() * m.degree();
  if (e.depth > budget) {
    throw Error(ErrorCode::NonTermination, "rewrite budget of " + std::to_string(budget) + " steps exceeded",
                monomial_text(s_.host, m));
  }
  return cache_.emplace(m, std::move(e)).first->second;
}

const LinComb& Straightener::normal_form(const PosetMonomial& m) {
  std::vector<PosetMonomial> path;
  return reduce(m, path).nf;
}

LinComb Straightener::normal_form(const LinComb& c) {
  LinComb out;
  for (const auto& [m, k] : c.terms()) out += normal_form(m).scaled(k);
  return out;
}

std::size_t Straightener::depth(const PosetMonomial& m) {
  std::vector<PosetMonomial> path;
  return reduce(m, path).depth;
}

LinComb straighten(const StraighteningSystem& s, const PosetMonomial& m) {
  Straightener st(s);
  return st.normal_form(m);
}

std::vector<std::int64_t> termination_measure(const StraighteningSystem& s, const PosetMonomial& m) {
  const Poset& ground = s.veronese() ? *s.base : s.host;
  std::vector<std::int64_t> out;
  for (ElementId a : s.flatten(m)) out.push_back(ground.height(a));
  std::sort(out.begin(), out.end());
  if (s.veronese()) {
    const auto pos = positions(*s.base);
    std::int64_t sum = 0;
    for (ElementId v : m.factors) sum += std::int64_t{pos[s.vertex_tuples[v][0]]} * pos[s.vertex_tuples[v][1]];
    out.push_back(sum);
  }
  return out;
}

std::vector<PosetMonomial> monomials_of_degree(const StraighteningSystem& s, std::size_t degree) {
  std::vector<PosetMonomial> out;
  std::vector<ElementId> cur;
  const auto n = static_cast<ElementId>(s.host.size());
  std::function<void(ElementId)> rec = [&](ElementId from) {
    if (cur.size() == degree) {
      out.push_back(s.monomial(cur));
      return;
    }
    for (ElementId a = from; a < n; ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---- verification ---------------------------------------------------------------

Report verify_asl2(const StraighteningSystem& s) {
  Report r;
  std::string total_w, incomp_w, std_w, lead_w, deg_w;
  for (auto [a, b] : incomparable_pairs(s.host)) {
    if (!s.relations.count(ordered_key(s, a, b)) && total_w.empty()) {
      total_w = "missing relation for " + s.host.label(a) + "," + s.host.label(b);
    }
  }
  for (const auto& [key, rel] : s.relations) {
    const auto& f = rel.lhs.factors;
    if ((f.size() != 2 || s.host.comparable(f[0], f[1])) && incomp_w.empty()) incomp_w = relation_text(s, rel);
    for (const auto& [t, c] : rel.rhs.terms()) {
      if (t.degree() != 2 && deg_w.empty()) deg_w = relation_text(s, rel);
      if (!is_standard(s.host, t)) {
        if (std_w.empty()) std_w = relation_text(s, rel);
        continue;
      }
      // In a standard monomial sorted by a linear extension the first factor
      // is the minimum.
      const ElementId low = t.factors.at(0);
      if (f.size() == 2 && !(s.host.less(low, f[0]) && s.host.less(low, f[1])) && lead_w.empty()) {
        lead_w = relation_text(s, rel);
      }
    }
  }
  r.expect("asl2.total", total_w.empty(), total_w);
  r.expect("asl2.lhs_incomparable", incomp_w.empty(), incomp_w);
  r.expect("asl2.homogeneous", deg_w.empty(), deg_w);
  r.expect("asl2.rhs_standard", std_w.empty(), std_w);
  r.expect("asl2.leading_factor", lead_w.empty(), lead_w);
  return r;
}

Report audit_confluence(const StraighteningSystem& s, std::size_t degree, std::size_t exhaustive_degree,
                        std::size_t samples, std::uint64_t seed) {
  Report r;
  const std::string tag = "deg" + std::to_string(degree);
  std::vector<PosetMonomial> mons;
  if (degree <= exhaustive_degree) {
    mons = monomials_of_degree(s, degree);
  } else if (!s.host.empty()) {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<ElementId> f;
      for (std::size_t i = 0; i < degree; ++i) f.push_back(static_cast<ElementId>(rng() % s.host.size()));
      mons.push_back(s.monomial(std::move(f)));
    }
  }

  Straightener st(s);
  std::string conf_w, term_w;
  try {
    for (const auto& m : mons) {
      const LinComb nf = st.normal_form(m);
      const auto measure = termination_measure(s, m);
      std::set<std::pair<ElementId, ElementId>> seen;
      for (std::size_t i = 0; i < m.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < m.factors.size(); ++j) {
          if (s.host.comparable(m.factors[i], m.factors[j])) continue;
          if (!seen.emplace(m.factors[i], m.factors[j]).second) continue;
          const LinComb step = rewrite_at(s, m, i, j);
          for (const auto& [t, c] : step.terms()) {
            if (!(termination_measure(s, t) < measure) && term_w.empty()) {
              term_w = monomial_text(s.host, m) + " -> " + monomial_text(s.host, t);
            }
          }
          if (st.normal_form(step) != nf && conf_w.empty()) {
            conf_w = monomial_text(s.host, m) + " rewritten at " + s.host.label(m.factors[i]) + "," +
                     s.host.label(m.factors[j]) + " gives " + lincomb_text(s.host, st.normal_form(step)) +
                     " instead of " + lincomb_text(s.host, nf);
          }
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonTermination) throw;
    term_w = e.what() + std::string(" at ") + e.witness();
  }
  r.expect("confluence." + tag, conf_w.empty(), conf_w);
  r.expect("termination." + tag, term_w.empty(), term_w);
  return r;
}

Report verify_asl1_by_count(const StraighteningSystem& s, std::size_t m_max) {
  Report r;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const std::string tag = "asl1.m" + std::to_string(m);
    auto audit = audit_confluence(s, m);
    for (const auto& c : audit.checks()) {
      r.add(tag + "." + c.name.substr(0, c.name.find('.')), c.status, c.witness);
    }

    std::vector<PosetMonomial> standard;
    for (const auto& mon : monomials_of_degree(s, m)) {
      if (is_standard(s.host, mon)) standard.push_back(mon);
    }
    const std::size_t target = s.veronese() ? hilbert_function(*s.base, 2 * m) : hilbert_function(s.host, m);
    r.expect(tag + ".count", standard.size() == target,
             std::to_string(standard.size()) + " standard monomials, expected " + std::to_string(target));

    if (s.veronese()) {
      // Read first entries upwards and second entries downwards along the chain.
      std::set<std::vector<ElementId>> reads;
      std::string w;
      for (const auto& mon : standard) {
        std::vector<ElementId> word;
        for (ElementId v : mon.factors) word.push_back(s.vertex_tuples[v][0]);
        for (auto it = mon.factors.rbegin(); it != mon.factors.rend(); ++it) word.push_back(s.vertex_tuples[*it][1]);
        if (!is_multichain(*s.base, MultiChain{word}) && w.empty()) w = "not a multichain: " + monomial_text(s.host, mon);
        if (!reads.insert(word).second && w.empty()) w = "repeated reading: " + monomial_text(s.host, mon);
      }
      r.expect(tag + ".snake", w.empty(), w);
    }
  }
  return r;
}

Report verify_identity_in_base(const StraighteningSystem& v, const StraighteningSystem& base_system) {
  const bool matching = (v.kind == SystemKind::DiscreteVeronese2 && base_system.kind == SystemKind::Discrete) ||
                        (v.kind == SystemKind::HibiVeronese2 && base_system.kind == SystemKind::Hibi);
  if (!matching || base_system.host.size() != v.base->size()) {
    throw Error(ErrorCode::InvalidArgument, "base system does not match the Veronese system",
                to_string(v.kind) + " over " + to_string(base_system.kind));
  }
  Report r;
  Straightener st(base_system);
  std::string w;
  for (const auto& [key, rel] : v.relations) {
    const LinComb lhs = st.normal_form(base_system.monomial(v.flatten(rel.lhs)));
    LinComb rhs;
    for (const auto& [t, c] : rel.rhs.terms()) rhs += st.normal_form(base_system.monomial(v.flatten(t))).scaled(c);
    if (lhs != rhs && w.empty()) {
      w = relation_text(v, rel) + " flattens to " + lincomb_text(base_system.host, lhs) + " vs " +
          lincomb_text(base_system.host, rhs);
    }
  }
  r.expect("identity_in_base", w.empty(), w);
  return r;
}

namespace {

struct MinorContext {
  const StraighteningSystem& s;
  std::map<std::vector<ElementId>, ElementId> index;

  std::optional<ElementId> entry(ElementId i, ElementId j) const {
    const Poset& p = *s.base;
    if (p.leq(i, j)) return index.at({i, j});
    if (p.leq(j, i)) return index.at({j, i});
    return std::nullopt;
  }

  LinComb product(ElementId i, ElementId j, ElementId k, ElementId l) const {
    auto x = entry(i, j), y = entry(k, l);
    if (!x || !y) return {};
    return LinComb::monomial(s.monomial({*x, *y}));
  }

  // Rows r1, r2 and columns c1, c2 of the symmetric matrix.
  LinComb minor(ElementId r1, ElementId r2, ElementId c1, ElementId c2) const {
    return product(r1, c1, r2, c2) - product(r1, c2, r2, c1);
  }
};

std::string minor_name(const Poset& p, ElementId r1, ElementId r2, ElementId c1, ElementId c2) {
  return "[" + p.label(r1) + "," + p.label(r2) + "|" + p.label(c1) + "," + p.label(c2) + "]";
}

std::vector<std::vector<mpq_class>> to_rows(const std::vector<LinComb>& combs, const std::vector<PosetMonomial>& basis) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& c : combs) {
    std::vector<mpq_class> row(basis.size(), mpq_class(0));
    for (const auto& [m, k] : c.terms()) {
      row[std::lower_bound(basis.begin(), basis.end(), m) - basis.begin()] = k;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string coefficient_prefix(const mpq_class& c, bool first) {
  std::string sign = sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  mpq_class a = abs(c);
  return sign + (a == 1 ? std::string() : a.get_str() + "*");
}

}  // namespace

Report verify_minor_relations(const Poset& p) {
  Report r;
  const auto s = veronese2_discrete_system(p);
  MinorContext ctx{s, {}};
  for (std::size_t v = 0; v < s.vertex_tuples.size(); ++v) ctx.index[s.vertex_tuples[v]] = static_cast<ElementId>(v);

  // Relations grouped by the multiset of variables they involve.
  std::map<std::vector<ElementId>, std::vector<LinComb>> by_vars;
  for (const auto& [key, rel] : s.relations) {
    auto vars = s.flatten(rel.lhs);
    std::sort(vars.begin(), vars.end());
    by_vars[vars].push_back(LinComb::monomial(rel.lhs) - rel.rhs);
  }

  const auto n = static_cast<ElementId>(p.size());
  std::string span_w, single_w;
  std::size_t subsets = 0;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) {
      for (ElementId c = b; c < n; ++c) {
        for (ElementId d = c; d < n; ++d) {
          const std::vector<ElementId> vars = {a, b, c, d};
          const std::array<LinComb, 3> minors = {ctx.minor(a, b, c, d), ctx.minor(a, c, b, d), ctx.minor(a, d, b, c)};
          const std::array<std::string, 3> names = {minor_name(p, a, b, c, d), minor_name(p, a, c, b, d),
                                                    minor_name(p, a, d, b, c)};
          const auto& rels = by_vars[vars];

          std::set<PosetMonomial> support;
          for (const auto& m : minors)
            for (const auto& [t, k] : m.terms()) support.insert(t);
          for (const auto& rel : rels)
            for (const auto& [t, k] : rel.terms()) support.insert(t);
          const std::vector<PosetMonomial> basis(support.begin(), support.end());
          const auto rel_rows = to_rows(rels, basis);
          const auto minor_rows = to_rows({minors.begin(), minors.end()}, basis);
          for (std::size_t k = 0; k < 3; ++k) {
            if (!solve_in_span(rel_rows, minor_rows[k], mpq_class(0), mpq_class(1)) && span_w.empty()) {
              span_w = names[k] + " = " + lincomb_text(s.host, minors[k]) + " is not spanned by the relations";
            }
          }

          const bool distinct = a < b && b < c && c < d;
          if (!distinct) {
            // Coinciding variables leave at most one relation up to sign.
            std::vector<LinComb> nonzero;
            for (const auto& m : minors) {
              if (m.is_zero()) continue;
              const bool repeat = std::any_of(nonzero.begin(), nonzero.end(), [&](const LinComb& x) {
                return x == m || x == m.scaled(-1);
              });
              if (!repeat) nonzero.push_back(m);
            }
            if (nonzero.size() > 1 && single_w.empty()) single_w = names[0] + ", " + names[1] + ", " + names[2];
            continue;
          }

          ++subsets;
          const std::string tag = "minors." + p.label(a) + "," + p.label(b) + "," + p.label(c) + "," + p.label(d);
          auto coeffs = solve_in_span(std::vector<std::vector<mpq_class>>{minor_rows[1], minor_rows[0]}, minor_rows[2],
                                      mpq_class(0), mpq_class(1));
          if (!coeffs) {
            r.fail(tag, names[2] + " is not a combination of " + names[1] + " and " + names[0]);
            continue;
          }
          LinComb combined = minors[1].scaled((*coeffs)[0]);
          combined += minors[0].scaled((*coeffs)[1]);
          if (combined != minors[2]) {
            r.fail(tag, "dependency does not reproduce " + names[2]);
            continue;
          }
          std::string dep = names[2] + " =";
          bool first = true;
          for (std::size_t k = 0; k < 2; ++k) {
            if (sgn((*coeffs)[k]) == 0) continue;
            dep += (first ? " " : "") + coefficient_prefix((*coeffs)[k], first) + names[1 - k];
            first = false;
          }
          if (first) dep += " 0";
          r.pass(tag, dep);
        }
      }
    }
  }
  r.expect("minors.span", span_w.empty(), span_w);
  r.expect("minors.coincident", single_w.empty(), single_w);
  if (subsets == 0) r.skip("minors.dependency", "fewer than four elements");
  return r;
}

Report verify_hibi_special_cases(const LatticeView& l, const StraighteningSystem& v) {
  Report r;
  const Poset& p = l.base();
  const auto pos = positions(p);
  std::map<std::vector<ElementId>, ElementId> index;
  for (std::size_t k = 0; k < v.vertex_tuples.size(); ++k) index[v.vertex_tuples[k]] = static_cast<ElementId>(k);
  auto vertex = [&](ElementId x, ElementId y) { return p.leq(x, y) ? index.at({x, y}) : index.at({y, x}); };

  std::size_t total = 0, comparable = 0;
  std::string total_w, comparable_w;
  for (const auto& [key, rel] : v.relations) {
    const ElementId x = rel.lhs.factors[0], y = rel.lhs.factors[1];
    const ElementId a = v.vertex_tuples[x][0], b = v.vertex_tuples[x][1];
    const ElementId c = v.vertex_tuples[y][0], d = v.vertex_tuples[y][1];
    std::vector<ElementId> q = {a, b, c, d};
    if (is_chain(p, q)) {
      ++total;
      std::sort(q.begin(), q.end(), [&](ElementId s, ElementId t) { return pos[s] < pos[t]; });
      const auto expected = LinComb::monomial(v.monomial({index.at({q[0], q[3]}), index.at({q[1], q[2]})}));
      if (expected != rel.rhs && total_w.empty()) total_w = relation_text(v, rel);
    }
    const ElementId ac = l.join_of(a, c), bd = l.meet_of(b, d);
    if (p.comparable(ac, bd)) {
      ++comparable;
      const auto expected =
          LinComb::monomial(v.monomial({index.at({l.meet_of(a, c), l.join_of(b, d)}), vertex(ac, bd)}));
      if (expected != rel.rhs && comparable_w.empty()) comparable_w = relation_text(v, rel);
    }
  }
  if (total == 0) {
    r.skip("hibi.total_order", "no totally ordered quadruple");
  } else {
    r.expect("hibi.total_order", total_w.empty(), total_w);
  }
  if (comparable == 0) {
    r.skip("hibi.join_meet_comparable", "no pair with comparable join and meet");
  } else {
    r.expect("hibi.join_meet_comparable", comparable_w.empty(), comparable_w);
  }
  return r;
}

std::size_t hilbert_function(const Poset& p, std::size_t i) {
  if (i == 0) return 1;
  const auto ext = linear_extension(p);
  std::vector<std::size_t> count(p.size(), 1);
  for (std::size_t len = 1; len < i; ++len) {
    std::vector<std::size_t> next(p.size(), 0);
    for (ElementId top : ext) {
      for (ElementId x : ext) {
        if (p.leq(x, top)) next[top] += count[x];
      }
    }
    count = std::move(next);
  }
  std::size_t total = 0;
  for (auto c : count) total += c;
  return total;
}

// ---- text -------------------------------------------------------------------------

std::string monomial_text(const Poset& host, const PosetMonomial& m) {
  if (m.factors.empty()) return "1";
  std::string out = "[";
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out += ",";
    out += host.label(m.factors[i]);
  }
  return out + "]";
}

std::string lincomb_text(const Poset& host, const LinComb& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, k] : c.terms()) {
    if (!first) out += sgn(k) < 0 ? " - " : " + ";
    else if (sgn(k) < 0) out += "-";
    mpq_class a = abs(k);
    out += a.get_str() + "*" + monomial_text(host, m);
    first = false;
  }
  return out;
}

std::string relation_text(const StraighteningSystem& s, const StraighteningRelation& r) {
  return monomial_text(s.host, r.lhs) + " -> " + lincomb_text(s.host, r.rhs);
}

std::vector<std::string> relations_text(const StraighteningSystem& s) {
  std::vector<std::string> out;
  for (const auto& [key, rel] : s.relations) out.push_back(relation_text(s, rel));
  return out;
}

}  // namespace aslkit
