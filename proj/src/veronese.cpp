#include "aslkit/veronese.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aslkit/error.hpp"

namespace aslkit {

std::optional<ElementId> TuplePoset::find(const std::vector<ElementId>& tuple) const {
  auto it = index.find(tuple);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ElementId TuplePoset::id_of(const std::vector<ElementId>& tuple) const {
  if (auto id = find(tuple)) return *id;
  std::string s;
  for (auto v : tuple) s += (s.empty() ? "" : ",") + std::to_string(v);
  throw Error(ErrorCode::UnknownElement, "tuple (" + s + ") is not an element", s);
}

std::string multichain_label(const Poset& base, const MultiChain& mc) {
  const bool short_labels = std::all_of(base.labels().begin(), base.labels().end(),
                                        [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (auto it = mc.ids.rbegin(); it != mc.ids.rend(); ++it) {
    if (!short_labels && it != mc.ids.rbegin()) out += ',';
    out += base.label(*it);
  }
  return out;
}

namespace {

TuplePoset tuple_poset_from(std::vector<std::vector<ElementId>> tuples, std::vector<std::string> labels,
                            const std::function<bool(ElementId, ElementId)>& leq) {
  TuplePoset tp;
  tp.poset = Poset::from_order(std::move(labels), leq);
  tp.tuples = std::move(tuples);
  for (std::size_t i = 0; i < tp.tuples.size(); ++i) tp.index.emplace(tp.tuples[i], static_cast<ElementId>(i));
  return tp;
}

std::vector<std::vector<ElementId>> as_tuples(const std::vector<MultiChain>& mcs) {
  std::vector<std::vector<ElementId>> out;
  out.reserve(mcs.size());
  for (const auto& mc : mcs) out.push_back(mc.ids);
  return out;
}

std::string render_support(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (ElementId a : s) out += (out.size() > 1 ? "," : "") + p.label(a);
  return out + "}";
}

std::string render_vertex_chain(const TuplePoset& tp, const MultiChain& mc) {
  std::string out = "(";
  for (std::size_t i = 0; i < mc.ids.size(); ++i) out += (i ? "," : "") + tp.poset.label(mc.ids[i]);
  return out + ")";
}

std::map<std::vector<ElementId>, std::size_t> index_of(const std::vector<MultiChain>& mcs) {
  std::map<std::vector<ElementId>, std::size_t> out;
  for (std::size_t i = 0; i < mcs.size(); ++i) out.emplace(mcs[i].ids, i);
  return out;
}

}  // namespace

// ---- zig-zag ---------------------------------------------------------------

bool zigzag_leq(const Poset& base, const MultiChain& a, const MultiChain& b) {
  if (a.ids.size() != b.ids.size()) return false;
  for (std::size_t k = 0; k < a.ids.size(); ++k) {
    // k is 0-based: even k is an odd (1-based) coordinate.
    const bool ok = (k % 2 == 0) ? base.leq(a.ids[k], b.ids[k]) : base.leq(b.ids[k], a.ids[k]);
    if (!ok) return false;
  }
  return true;
}

TuplePoset zigzag(const Poset& base, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zig-zag degree must be positive");
  auto mcs = multichains(base, d);
  std::vector<std::string> labels;
  for (const auto& mc : mcs) labels.push_back(multichain_label(base, mc));
  return tuple_poset_from(as_tuples(mcs), std::move(labels),
                          [&](ElementId a, ElementId b) { return zigzag_leq(base, mcs[a], mcs[b]); });
}

MultiChain snake_read(const TuplePoset& z, const MultiChain& vertices) {
  const std::size_t m = vertices.ids.size();
  if (m == 0) return {};
  const std::size_t d = z.tuples.at(vertices.ids.front()).size();
  MultiChain out;
  out.ids.reserve(m * d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t col = (k % 2 == 0) ? t : m - 1 - t;
      out.ids.push_back(z.tuples.at(vertices.ids[col]).at(k));
    }
  }
  return out;
}

MultiChain snake_split(const TuplePoset& z, const MultiChain& long_chain, std::size_t m) {
  if (m == 0 || long_chain.ids.size() % m != 0) {
    throw Error(ErrorCode::InvalidMultiChain, "length is not a multiple of m");
  }
  const std::size_t d = long_chain.ids.size() / m;
  MultiChain out;
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<ElementId> tuple(d);
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t col = (k % 2 == 0) ? t : m - 1 - t;
      tuple[k] = long_chain.ids[k * m + col];
    }
    auto id = z.find(tuple);
    if (!id) throw Error(ErrorCode::InvalidMultiChain, "snake column is not a vertex of the zig-zag poset");
    out.ids.push_back(*id);
  }
  return out;
}

MultichainBijection zigzag_correspondence(const Poset& base, std::size_t d, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  MultichainBijection bij;
  bij.constructed = zigzag(base, d);
  bij.source = multichains(base, m * d);
  bij.target = multichains(bij.constructed.poset, m);
  const auto tidx = index_of(bij.target);
  const auto sidx = index_of(bij.source);
  bij.forward.assign(bij.source.size(), 0);
  bij.backward.assign(bij.target.size(), bij.source.size());
  for (std::size_t i = 0; i < bij.source.size(); ++i) {
    auto split = snake_split(bij.constructed, bij.source[i], m);
    auto it = tidx.find(split.ids);
    if (it == tidx.end()) {
      throw Error(ErrorCode::InvalidMultiChain, "snake split is not a multichain of Z_d(P)",
                  render_vertex_chain(bij.constructed, split));
    }
    bij.forward[i] = it->second;
  }
  for (std::size_t j = 0; j < bij.target.size(); ++j) {
    auto read = snake_read(bij.constructed, bij.target[j]);
    auto it = sidx.find(read.ids);
    if (it == sidx.end() || bij.forward[it->second] != j) {
      throw Error(ErrorCode::InvalidMultiChain, "snake reading is not inverse to the split",
                  render_vertex_chain(bij.constructed, bij.target[j]));
    }
    bij.backward[j] = it->second;
  }
  return bij;
}

// ---- H_n(d) ----------------------------------------------------------------

bool in_h_poset(const HVector& v, int n) {
  const int d = static_cast<int>(v.coords.size());
  int sum = 0;
  for (int c : v.coords) {
    if (c < 1 || c > n) return false;
    sum += c;
  }
  return sum <= n + d - 1;
}

std::string hvector_label(const HVector& v, int n) {
  std::string out;
  for (std::size_t k = 0; k < v.coords.size(); ++k) {
    if (n > 9 && k > 0) out += ',';
    out += std::to_string(v.coords[k]);
  }
  return out;
}

TuplePoset h_poset(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "h_poset needs n, d >= 1");
  std::vector<std::vector<ElementId>> tuples;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int budget) {
    if (static_cast<int>(cur.size()) == d) {
      tuples.push_back(cur);
      return;
    }
    // Remaining coordinates each need at least 1.
    const int rest = d - static_cast<int>(cur.size()) - 1;
    for (int c = 1; c <= n && c + rest <= budget; ++c) {
      cur.push_back(c);
      rec(budget - c);
      cur.pop_back();
    }
  };
  rec(n + d - 1);
  std::vector<std::string> labels;
  for (const auto& t : tuples) labels.push_back(hvector_label(HVector{t}, n));
  return tuple_poset_from(tuples, std::move(labels), [&](ElementId a, ElementId b) {
    for (int k = 0; k < d; ++k) {
      if (tuples[a][k] > tuples[b][k]) return false;
    }
    return true;
  });
}

// ---- rank-3 construction ---------------------------------------------------

int HeightGapVector::total() const { return std::accumulate(gaps.begin(), gaps.end(), 0); }

bool HeightGapVector::operator<=(const HeightGapVector& other) const {
  if (gaps.size() != other.gaps.size()) return false;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    if (gaps[k] > other.gaps[k]) return false;
  }
  return true;
}

HeightGapVector height_gap_vector(const Poset& base, const MultiChain& mc) {
  if (mc.ids.empty() || !is_multichain(base, mc)) {
    throw Error(ErrorCode::InvalidMultiChain, "not a multichain of the host poset");
  }
  HeightGapVector v;
  v.gaps.reserve(mc.ids.size());
  int prev = 0;
  for (ElementId a : mc.ids) {
    const int h = base.height(a);
    v.gaps.push_back(h - prev);
    prev = h;
  }
  return v;
}

VeroneseElement make_veronese_element(const Poset& base, const MultiChain& mc) {
  return VeroneseElement{mc, height_gap_vector(base, mc)};
}

bool rank3_leq(const Poset& base, const VeroneseElement& a, const VeroneseElement& b) {
  if (a.chain.ids.size() != b.chain.ids.size()) return false;
  if (!(a.v <= b.v)) return false;
  std::vector<ElementId> all = a.chain.ids;
  all.insert(all.end(), b.chain.ids.begin(), b.chain.ids.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return is_chain(base, all);
}

bool rank3_leq(const Poset& base, const MultiChain& a, const MultiChain& b) {
  return rank3_leq(base, make_veronese_element(base, a), make_veronese_element(base, b));
}

namespace {

struct Rank3Relation {
  std::vector<MultiChain> chains;
  std::vector<std::uint8_t> leq;  // row-major
  bool at(std::size_t a, std::size_t b) const { return leq[a * chains.size() + b] != 0; }
};

Rank3Relation rank3_relation(const Poset& base, std::size_t d) {
  Rank3Relation rel;
  rel.chains = multichains(base, d);
  std::vector<VeroneseElement> elems;
  for (const auto& mc : rel.chains) elems.push_back(make_veronese_element(base, mc));
  const std::size_t n = elems.size();
  rel.leq.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) rel.leq[a * n + b] = rank3_leq(base, elems[a], elems[b]) ? 1 : 0;
  }
  return rel;
}

}  // namespace

std::optional<std::array<MultiChain, 3>> rank3_transitivity_witness(const Poset& base, std::size_t d) {
  const auto rel = rank3_relation(base, d);
  const std::size_t n = rel.chains.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !rel.at(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != b && rel.at(b, c) && !rel.at(a, c)) {
          return std::array<MultiChain, 3>{rel.chains[a], rel.chains[b], rel.chains[c]};
        }
      }
    }
  }
  return std::nullopt;
}

TuplePoset rank3_veronese(const Poset& base, std::size_t d, bool force) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "Veronese degree must be positive");
  const std::size_t r = rank(base);
  if (r > 3 && !force) {
    throw Error(ErrorCode::RankTooLarge,
                "rank " + std::to_string(r) + " exceeds 3; pass the override to build the relation anyway",
                std::to_string(r));
  }
  if (r > 3) {
    if (auto w = rank3_transitivity_witness(base, d)) {
      const std::string witness = multichain_label(base, (*w)[0]) + " <= " + multichain_label(base, (*w)[1]) +
                                  " <= " + multichain_label(base, (*w)[2]);
      throw Error(ErrorCode::RelationNotTransitive, "transitivity fails for " + witness, witness);
    }
  }
  auto rel = rank3_relation(base, d);
  std::vector<std::string> labels;
  for (const auto& mc : rel.chains) labels.push_back(multichain_label(base, mc));
  return tuple_poset_from(as_tuples(rel.chains), std::move(labels),
                          [&](ElementId a, ElementId b) { return rel.at(a, b); });
}

// ---- bijections ------------------------------------------------------------

namespace {

using Key = std::vector<int>;

// Positions of the elements of a totally ordered support, bottom = 0.
std::map<ElementId, int> chain_positions(const Poset& p, const ElementSet& s) {
  std::vector<ElementId> ids(s.begin(), s.end());
  std::sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) { return p.less(a, b); });
  std::map<ElementId, int> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = static_cast<int>(i);
  return pos;
}

ElementSet target_support(const TuplePoset& tp, const MultiChain& vertices) {
  ElementSet s;
  for (ElementId v : vertices.ids) {
    for (ElementId a : tp.tuples.at(v)) s.insert(a);
  }
  return s;
}

// Matches md-multichains with m-multichains class by class (same support),
// each class sorted lexicographically in the support's intrinsic order.
std::vector<std::size_t> match_support_classes(const Poset& base, const TuplePoset& constructed,
                                               const std::vector<MultiChain>& source,
                                               const std::vector<MultiChain>& target) {
  std::map<ElementSet, std::vector<std::size_t>> src_classes, tgt_classes;
  for (std::size_t i = 0; i < source.size(); ++i) src_classes[support(source[i])].push_back(i);
  for (std::size_t j = 0; j < target.size(); ++j) tgt_classes[target_support(constructed, target[j])].push_back(j);

  std::vector<std::size_t> forward(source.size(), target.size());
  for (auto& [supp, src] : src_classes) {
    auto it = tgt_classes.find(supp);
    const std::size_t tgt_size = it == tgt_classes.end() ? 0 : it->second.size();
    if (tgt_size != src.size()) {
      throw Error(ErrorCode::SupportClassSizeMismatch,
                  "support " + render_support(base, supp) + " has " + std::to_string(src.size()) +
                      " source and " + std::to_string(tgt_size) + " target multichains",
                  render_support(base, supp));
    }
    auto& tgt = it->second;
    const auto pos = chain_positions(base, supp);
    auto src_key = [&](std::size_t i) {
      Key k;
      for (ElementId a : source[i].ids) k.push_back(pos.at(a));
      return k;
    };
    auto tgt_key = [&](std::size_t j) {
      Key k;
      for (ElementId v : target[j].ids) {
        for (ElementId a : constructed.tuples.at(v)) k.push_back(pos.at(a));
      }
      return k;
    };
    std::sort(src.begin(), src.end(), [&](std::size_t x, std::size_t y) { return src_key(x) < src_key(y); });
    std::sort(tgt.begin(), tgt.end(), [&](std::size_t x, std::size_t y) { return tgt_key(x) < tgt_key(y); });
    for (std::size_t k = 0; k < src.size(); ++k) forward[src[k]] = tgt[k];
  }
  for (const auto& [supp, tgt] : tgt_classes) {
    if (!src_classes.contains(supp)) {
      throw Error(ErrorCode::SupportClassSizeMismatch,
                  "support " + render_support(base, supp) + " has target multichains but no source",
                  render_support(base, supp));
    }
  }
  return forward;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& forward, std::size_t target_size) {
  std::vector<std::size_t> backward(target_size, forward.size());
  for (std::size_t i = 0; i < forward.size(); ++i) backward[forward[i]] = i;
  return backward;
}

}  // namespace

MultichainBijection chain_bijection(const Poset& chain, std::size_t d, std::size_t m) {
  std::vector<ElementId> all(chain.size());
  std::iota(all.begin(), all.end(), 0);
  if (!is_chain(chain, all)) throw Error(ErrorCode::InvalidArgument, "chain_bijection needs a totally ordered input");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  MultichainBijection bij;
  // Chains of any length give a partial order, so the rank guard is lifted.
  bij.constructed = rank3_veronese(chain, d, /*force=*/true);
  bij.source = multichains(chain, m * d);
  bij.target = multichains(bij.constructed.poset, m);
  bij.forward = match_support_classes(chain, bij.constructed, bij.source, bij.target);
  bij.backward = invert(bij.forward, bij.target.size());
  return bij;
}

MultichainBijection global_bijection(const Poset& base, std::size_t d, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  MultichainBijection bij;
  bij.constructed = rank3_veronese(base, d);
  bij.source = multichains(base, m * d);
  bij.target = multichains(bij.constructed.poset, m);
  const auto sidx = index_of(bij.source);
  const auto tidx = index_of(bij.target);
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  bij.forward.assign(bij.source.size(), kUnset);

  for (const auto& c : maximal_chains(base)) {
    // The chain as an abstract poset with its own (intrinsic) heights.
    std::vector<std::string> labels;
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (std::size_t i = 0; i < c.ids.size(); ++i) {
      labels.push_back(base.label(c.ids[i]));
      if (i > 0) covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
    }
    const auto abstract = Poset::from_covers(labels, covers);
    const auto local = chain_bijection(abstract, d, m);

    for (std::size_t i = 0; i < local.source.size(); ++i) {
      std::vector<ElementId> src;
      for (ElementId a : local.source[i].ids) src.push_back(c.ids[a]);
      std::vector<ElementId> tgt;
      for (ElementId v : local.target[local.forward[i]].ids) {
        std::vector<ElementId> tuple;
        for (ElementId a : local.constructed.tuples[v]) tuple.push_back(c.ids[a]);
        tgt.push_back(bij.constructed.id_of(tuple));
      }
      auto t = tidx.find(tgt);
      if (t == tidx.end()) {
        throw Error(ErrorCode::IncoherentChainMaps,
                    "chain map image is not a multichain of P^(d)",
                    render_vertex_chain(bij.constructed, MultiChain{tgt}));
      }
      const std::size_t s = sidx.at(src);
      if (bij.forward[s] != kUnset && bij.forward[s] != t->second) {
        throw Error(ErrorCode::IncoherentChainMaps, "maximal chains disagree on an overlap",
                    multichain_label(base, bij.source[s]));
      }
      bij.forward[s] = t->second;
    }
  }
  std::vector<char> hit(bij.target.size(), 0);
  for (std::size_t s = 0; s < bij.forward.size(); ++s) {
    if (bij.forward[s] == kUnset || hit[bij.forward[s]]) {
      throw Error(ErrorCode::IncoherentChainMaps, "chain-wise map is not a bijection",
                  multichain_label(base, bij.source[s]));
    }
    hit[bij.forward[s]] = 1;
  }
  if (bij.source.size() != bij.target.size()) {
    throw Error(ErrorCode::SupportClassSizeMismatch, "multichain counts differ",
                std::to_string(bij.source.size()) + " vs " + std::to_string(bij.target.size()));
  }
  bij.backward = invert(bij.forward, bij.target.size());
  return bij;
}

// ---- property reports ------------------------------------------------------

namespace {

std::string suffix_m(std::size_t m) { return ".m" + std::to_string(m); }

}  // namespace

Report check_properties(const Poset& base, std::size_t d, std::size_t m_max) {
  Report report;
  report.note_convention("P^(d) vertices labelled by multichains written top element first");
  TuplePoset vp;
  {
    CheckTimer t(report);
    try {
      vp = rank3_veronese(base, d);
      report.pass("order_axioms");
    } catch (const Error& e) {
      report.fail("order_axioms", e.what());
      return report;
    }
  }
  {
    CheckTimer t(report);
    if (!unique_minimal(base)) {
      report.skip("unique_minimum", "P has " + std::to_string(minimal_elements(base).size()) + " minimal elements");
    } else {
      const auto mins = minimal_elements(vp.poset);
      std::string w;
      for (ElementId a : mins) w += (w.empty() ? "" : ",") + vp.poset.label(a);
      report.expect("unique_minimum", mins.size() == 1, "P^(d) minimal elements {" + w + "}");
    }
  }
  {
    CheckTimer t(report);
    const auto rp = rank(base);
    const auto rv = rank(vp.poset);
    report.expect("rank", rp == rv, "rank(P)=" + std::to_string(rp) + " rank(P^(d))=" + std::to_string(rv));
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    CheckTimer t(report);
    const auto lhs = multichains(base, m * d).size();
    const auto rhs = multichains(vp.poset, m).size();
    report.expect("multichain_count" + suffix_m(m), lhs == rhs,
                  "|M_" + std::to_string(m * d) + "(P)|=" + std::to_string(lhs) + " |M_" + std::to_string(m) +
                      "(P^(d))|=" + std::to_string(rhs));
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    CheckTimer t(report);
    try {
      auto bij = global_bijection(base, d, m);
      std::string bad;
      for (std::size_t i = 0; i < bij.source.size() && bad.empty(); ++i) {
        if (support(bij.source[i]) != target_support(bij.constructed, bij.target[bij.forward[i]])) {
          bad = multichain_label(base, bij.source[i]);
        }
      }
      report.expect("bijection" + suffix_m(m), bad.empty(), "support not preserved at " + bad);
    } catch (const Error& e) {
      report.fail("bijection" + suffix_m(m), e.what());
    }
  }
  return report;
}

Report check_zigzag_properties(const Poset& base, std::size_t d, std::size_t m_max) {
  Report report;
  report.note_convention("Z_d(P) vertices labelled by multichains written top element first");
  const auto z = zigzag(base, d);
  {
    CheckTimer t(report);
    const auto rp = rank(base);
    const auto rz = rank(z.poset);
    report.expect("rank", rp == rz, "rank(P)=" + std::to_string(rp) + " rank(Z)=" + std::to_string(rz));
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    CheckTimer t(report);
    const auto lhs = multichains(base, m * d).size();
    const auto rhs = multichains(z.poset, m).size();
    report.expect("multichain_count" + suffix_m(m), lhs == rhs,
                  "|M_" + std::to_string(m * d) + "(P)|=" + std::to_string(lhs) + " |M_" + std::to_string(m) +
                      "(Z)|=" + std::to_string(rhs));
  }
  for (std::size_t m = 1; m <= m_max; ++m) {
    CheckTimer t(report);
    try {
      zigzag_correspondence(base, d, m);
      report.pass("snake_bijection" + suffix_m(m));
    } catch (const Error& e) {
      report.fail("snake_bijection" + suffix_m(m), e.what());
    }
  }
  {
    CheckTimer t(report);
    const auto zmins = minimal_elements(z.poset).size();
    const bool has_strict_pair = !base.covers().empty();
    if (d >= 3 && has_strict_pair) {
      report.expect("minimality", zmins >= 2, "Z_d(P) has " + std::to_string(zmins) + " minimal elements");
    } else if (d == 2 && unique_minimal(base) && maximal_elements(base).size() == 1) {
      report.expect("minimality", zmins == 1, "Z_2(P) has " + std::to_string(zmins) + " minimal elements");
    } else {
      report.skip("minimality", "no minimal-element claim applies (Z_d(P) has " + std::to_string(zmins) +
                                    " minimal elements)");
    }
  }
  return report;
}

}  // namespace aslkit
