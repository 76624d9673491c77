#include "aslkit/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "aslkit/error.hpp"

namespace aslkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::EmptyPoset: return "EmptyPoset";
    case ErrorCode::NotPartialOrder: return "NotPartialOrder";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::InvalidMultiChain: return "InvalidMultiChain";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::RelationNotTransitive: return "RelationNotTransitive";
    case ErrorCode::SupportClassSizeMismatch: return "SupportClassSizeMismatch";
    case ErrorCode::IncoherentChainMaps: return "IncoherentChainMaps";
    case ErrorCode::ProofObligationFailed: return "ProofObligationFailed";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::GenericityFailed: return "GenericityFailed";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLabel, "label '" + l + "' appears twice", l);
    }
  }
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<ElementId, ElementId>>& covers) {
  check_labels(labels);
  const auto n = static_cast<ElementId>(labels.size());
  std::vector<std::vector<ElementId>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw Error(ErrorCode::UnknownElement, "cover references an element outside the ground set");
    }
    if (a == b) {
      throw Error(ErrorCode::CycleDetected, "self-cover on '" + labels[a] + "'", labels[a]);
    }
    succ[a].push_back(b);
    ++indeg[b];
  }

  // Kahn's algorithm; anything left over sits on a directed cycle.
  std::vector<ElementId> topo;
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId a = 0; a < n; ++a) {
    if (indeg[a] == 0) ready.push(a);
  }
  while (!ready.empty()) {
    ElementId a = ready.top();
    ready.pop();
    topo.push_back(a);
    for (ElementId b : succ[a]) {
      if (--indeg[b] == 0) ready.push(b);
    }
  }
  if (static_cast<ElementId>(topo.size()) != n) {
    std::string witness;
    for (ElementId a = 0; a < n; ++a) {
      if (indeg[a] > 0) witness += (witness.empty() ? "" : ",") + labels[a];
    }
    throw Error(ErrorCode::CycleDetected, "cover graph has a directed cycle through {" + witness + "}",
                witness);
  }

  Poset p;
  p.labels_ = std::move(labels);
  p.order_.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    ElementId a = *it;
    p.order_[a * n + a] = 1;
    for (ElementId b : succ[a]) {
      for (ElementId c = 0; c < n; ++c) {
        if (p.order_[b * n + c]) p.order_[a * n + c] = 1;
      }
    }
  }
  p.finalize();
  return p;
}

Poset Poset::from_order(std::vector<std::string> labels,
                        const std::function<bool(ElementId, ElementId)>& leq) {
  check_labels(labels);
  const auto n = static_cast<ElementId>(labels.size());
  Poset p;
  p.order_.assign(static_cast<std::size_t>(n) * n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) p.order_[a * n + b] = leq(a, b) ? 1 : 0;
  }
  for (ElementId a = 0; a < n; ++a) {
    if (!p.order_[a * n + a]) {
      throw Error(ErrorCode::NotPartialOrder, "relation is not reflexive at '" + labels[a] + "'",
                  labels[a]);
    }
    for (ElementId b = a + 1; b < n; ++b) {
      if (p.order_[a * n + b] && p.order_[b * n + a]) {
        throw Error(ErrorCode::NotPartialOrder, "relation is not antisymmetric",
                    labels[a] + "," + labels[b]);
      }
    }
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!p.order_[a * n + b]) continue;
      for (ElementId c = 0; c < n; ++c) {
        if (p.order_[b * n + c] && !p.order_[a * n + c]) {
          throw Error(ErrorCode::NotPartialOrder, "relation is not transitive",
                      labels[a] + "," + labels[b] + "," + labels[c]);
        }
      }
    }
  }
  p.labels_ = std::move(labels);
  p.finalize();
  return p;
}

void Poset::finalize() {
  const auto n = static_cast<ElementId>(labels_.size());
  covers_.clear();
  up_.assign(n, {});
  down_.assign(n, {});
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (a == b || !order_[a * n + b]) continue;
      bool cover = true;
      for (ElementId c = 0; c < n && cover; ++c) {
        if (c != a && c != b && order_[a * n + c] && order_[c * n + b]) cover = false;
      }
      if (cover) {
        covers_.emplace_back(a, b);
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
  // Heights by longest descending cover path; process in a topological order.
  heights_.assign(n, -1);
  std::function<int(ElementId)> ht = [&](ElementId a) {
    if (heights_[a] >= 0) return heights_[a];
    int h = 0;
    for (ElementId b : down_[a]) h = std::max(h, ht(b) + 1);
    return heights_[a] = h;
  };
  for (ElementId a = 0; a < n; ++a) ht(a);
}

void Poset::check(ElementId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= size()) {
    throw Error(ErrorCode::UnknownElement, "element id " + std::to_string(a) + " is not in the poset");
  }
}

const std::string& Poset::label(ElementId a) const {
  check(a);
  return labels_[a];
}

std::optional<ElementId> Poset::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<ElementId>(i);
  }
  return std::nullopt;
}

ElementId Poset::id_of(std::string_view label) const {
  if (auto id = find(label)) return *id;
  throw Error(ErrorCode::UnknownElement, "unknown label '" + std::string(label) + "'",
              std::string(label));
}

bool Poset::leq(ElementId a, ElementId b) const {
  check(a);
  check(b);
  return order_[static_cast<std::size_t>(a) * size() + b] != 0;
}

int Poset::height(ElementId a) const {
  check(a);
  return heights_[a];
}

const std::vector<ElementId>& Poset::upper_covers(ElementId a) const {
  check(a);
  return up_[a];
}

const std::vector<ElementId>& Poset::lower_covers(ElementId a) const {
  check(a);
  return down_[a];
}

Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  check_labels(labels);
  std::map<std::string, ElementId, std::less<>> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<ElementId>(i);
  std::vector<std::pair<ElementId, ElementId>> ids;
  ids.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      const auto& bad = ia == index.end() ? a : b;
      throw Error(ErrorCode::UnknownElement, "cover references unknown label '" + bad + "'", bad);
    }
    ids.emplace_back(ia->second, ib->second);
  }
  return Poset::from_covers(labels, ids);
}

std::size_t rank(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoset, "rank of the empty poset");
  int best = 0;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) best = std::max(best, p.height(a));
  return static_cast<std::size_t>(best) + 1;
}

std::vector<MultiChain> multichains(const Poset& p, std::size_t m) {
  std::vector<MultiChain> out;
  if (m == 0) return out;
  const auto n = static_cast<ElementId>(p.size());
  std::vector<ElementId> cur;
  cur.reserve(m);
  std::function<void()> rec = [&]() {
    if (cur.size() == m) {
      out.push_back(MultiChain{cur});
      return;
    }
    for (ElementId a = 0; a < n; ++a) {
      if (cur.empty() || p.leq(cur.back(), a)) {
        cur.push_back(a);
        rec();
        cur.pop_back();
      }
    }
  };
  rec();
  return out;
}

std::vector<Chain> maximal_chains(const Poset& p) {
  std::vector<Chain> out;
  std::vector<ElementId> path;
  std::function<void(ElementId)> rec = [&](ElementId a) {
    path.push_back(a);
    const auto& up = p.upper_covers(a);
    if (up.empty()) {
      out.push_back(Chain{path});
    } else {
      for (ElementId b : up) rec(b);
    }
    path.pop_back();
  };
  for (ElementId a : minimal_elements(p)) rec(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_poset_ideal(const Poset& p, const ElementSet& s) {
  for (ElementId a : s) p.check(a);
  for (ElementId a : s) {
    for (ElementId b = 0; b < static_cast<ElementId>(p.size()); ++b) {
      if (p.leq(b, a) && !s.contains(b)) return false;
    }
  }
  return true;
}

std::vector<ElementId> linear_extension(const Poset& p) {
  const auto n = static_cast<ElementId>(p.size());
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : p.covers()) ++indeg[b];
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (ElementId a = 0; a < n; ++a) {
    if (indeg[a] == 0) ready.push(a);
  }
  std::vector<ElementId> out;
  out.reserve(n);
  while (!ready.empty()) {
    ElementId a = ready.top();
    ready.pop();
    out.push_back(a);
    for (ElementId b : p.upper_covers(a)) {
      if (--indeg[b] == 0) ready.push(b);
    }
  }
  return out;
}

ElementSet minimal_elements(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoset, "minimal elements of the empty poset");
  ElementSet out;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) {
    if (p.height(a) == 0) out.insert(a);
  }
  return out;
}

ElementSet maximal_elements(const Poset& p) {
  if (p.empty()) throw Error(ErrorCode::EmptyPoset, "maximal elements of the empty poset");
  ElementSet out;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) {
    if (p.upper_covers(a).empty()) out.insert(a);
  }
  return out;
}

bool unique_minimal(const Poset& p) { return minimal_elements(p).size() == 1; }

ElementSet support(const MultiChain& mc) { return ElementSet(mc.ids.begin(), mc.ids.end()); }

std::vector<std::pair<ElementId, ElementId>> incomparable_pairs(const Poset& p) {
  std::vector<std::pair<ElementId, ElementId>> out;
  const auto n = static_cast<ElementId>(p.size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (!p.comparable(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_chain(const Poset& p, const std::vector<ElementId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!p.comparable(ids[i], ids[j])) return false;
    }
  }
  return true;
}

bool is_multichain(const Poset& p, const MultiChain& mc) {
  for (ElementId a : mc.ids) {
    if (a < 0 || static_cast<std::size_t>(a) >= p.size()) return false;
  }
  for (std::size_t i = 1; i < mc.ids.size(); ++i) {
    if (!p.leq(mc.ids[i - 1], mc.ids[i])) return false;
  }
  return true;
}

std::optional<std::vector<ElementId>> is_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return std::nullopt;
  const auto n = static_cast<ElementId>(p.size());
  using Signature = std::tuple<int, std::size_t, std::size_t>;
  auto sig = [](const Poset& x, ElementId a) {
    return Signature{x.height(a), x.upper_covers(a).size(), x.lower_covers(a).size()};
  };
  std::vector<Signature> sp(n), sq(n);
  for (ElementId a = 0; a < n; ++a) {
    sp[a] = sig(p, a);
    sq[a] = sig(q, a);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Map p's elements in a linear-extension order so that lower covers are
  // fixed before the elements above them.
  const auto order = linear_extension(p);
  std::vector<ElementId> image(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) return true;
    ElementId a = order[k];
    for (ElementId b = 0; b < n; ++b) {
      if (used[b] || sq[b] != sp[a]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < k && ok; ++t) {
        ElementId c = order[t];
        ElementId d = image[c];
        if (p.leq(a, c) != q.leq(b, d) || p.leq(c, a) != q.leq(d, b)) ok = false;
      }
      if (!ok) continue;
      image[a] = b;
      used[b] = 1;
      if (rec(k + 1)) return true;
      used[b] = 0;
      image[a] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dot_export(const Poset& p, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph " << dot_quote(std::string(graph_name)) << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  std::map<int, std::vector<ElementId>> levels;
  for (ElementId a = 0; a < static_cast<ElementId>(p.size()); ++a) levels[p.height(a)].push_back(a);
  for (const auto& [h, ids] : levels) {
    os << "  { rank=same;";
    for (ElementId a : ids) os << ' ' << dot_quote(p.label(a)) << ';';
    os << " }\n";
  }
  for (auto [a, b] : p.covers()) {
    os << "  " << dot_quote(p.label(a)) << " -> " << dot_quote(p.label(b)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace aslkit
