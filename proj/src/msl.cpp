#include "aslkit/msl.hpp"

#include <functional>
#include <random>

#include "aslkit/error.hpp"
#include "aslkit/linalg.hpp"

namespace aslkit {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string index_text(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s;
}

void require_dims(int n, int d) {
  if (n < 1 || d < 1) {
    throw Error(ErrorCode::InvalidArgument, "n and d must be positive",
                "n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

void require_j(const FormTableau& t, int j) {
  if (j < 1 || j > t.d - 1) {
    throw Error(ErrorCode::InvalidArgument, "j must satisfy 1 <= j <= d-1",
                "j=" + std::to_string(j) + " d=" + std::to_string(t.d));
  }
}

// Product l_{idx_1,1} ... l_{idx_k,k}.
MultiPoly form_product(const FormTableau& t, const std::vector<int>& idx) {
  MultiPoly p = MultiPoly::constant(t.n, t.field, ExactScalar::one(t.field));
  for (std::size_t k = 0; k < idx.size(); ++k) p = p * t.poly(idx[k], static_cast<int>(k) + 1);
  return p;
}

bool componentwise_geq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

std::vector<int> lifted(const std::vector<int>& g, int d) {
  std::vector<int> x = g;
  x.resize(d, 1);
  return x;
}

}  // namespace

bool LinearForm::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

MultiPoly FormTableau::poly(int i, int j) const { return MultiPoly::linear(at(i, j).coeffs, field); }

bool genericity_check(const FormTableau& t) {
  const auto zero = ExactScalar::zero(t.field), one = ExactScalar::one(t.field);
  std::vector<int> sel(t.n, 1);
  while (true) {
    std::vector<std::vector<ExactScalar>> m;
    for (int i = 1; i <= t.n; ++i) m.push_back(t.at(i, sel[i - 1]).coeffs);
    if (determinant(m, zero, one).is_zero()) return false;
    int k = t.n - 1;
    while (k >= 0 && sel[k] == t.d) sel[k--] = 1;
    if (k < 0) return true;
    ++sel[k];
  }
}

FormTableau make_tableau(int n, int d, const FieldSpec& field, std::vector<std::vector<LinearForm>> forms) {
  require_dims(n, d);
  if (forms.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::InvalidArgument, "need n rows of forms");
  for (const auto& row : forms) {
    if (row.size() != static_cast<std::size_t>(d)) throw Error(ErrorCode::InvalidArgument, "need d forms per row");
    for (const auto& f : row) {
      if (f.coeffs.size() != static_cast<std::size_t>(n)) {
        throw Error(ErrorCode::InvalidArgument, "forms must have n coefficients");
      }
    }
  }
  FormTableau t{n, d, field, std::move(forms), false};
  t.generic = genericity_check(t);
  return t;
}

FormTableau random_tableau(int n, int d, std::uint64_t seed, const FieldSpec& field) {
  require_dims(n, d);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<std::vector<LinearForm>> forms(n, std::vector<LinearForm>(d));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < n; ++k) {
          const std::uint64_t r = rng();
          const std::int64_t v = field.kind == FieldSpec::Kind::Prime ? static_cast<std::int64_t>(r % field.p)
                                                                      : static_cast<std::int64_t>(r % 201) - 100;
          forms[i][j].coeffs.push_back(ExactScalar::from_int(v, field));
        }
      }
    }
    auto t = make_tableau(n, d, field, std::move(forms));
    if (t.generic) return t;
  }
  throw Error(ErrorCode::GenericityFailed, "no generic tableau in 32 draws",
              "n=" + std::to_string(n) + " d=" + std::to_string(d) + " seed=" + std::to_string(seed) + " field=" +
                  field.to_string());
}

std::vector<VGen> veronese_generators(const FormTableau& t) {
  std::vector<VGen> out;
  const auto h = h_poset(t.n, t.d);
  for (const auto& idx : h.tuples) out.push_back(VGen{HVector{idx}, form_product(t, idx)});
  return out;
}

std::vector<MGen> module_generators(const FormTableau& t, int j) {
  require_j(t, j);
  std::vector<MGen> out;
  const auto h = h_poset(t.n, j);
  for (const auto& idx : h.tuples) out.push_back(MGen{idx, form_product(t, idx)});
  return out;
}

ElementSet ideal_of(const TuplePoset& h, const std::vector<int>& g) {
  ElementSet out;
  for (std::size_t id = 0; id < h.tuples.size(); ++id) {
    const auto& a = h.tuples[id];
    if (!componentwise_geq(a, lifted(g, static_cast<int>(a.size())))) out.insert(static_cast<ElementId>(id));
  }
  return out;
}

Report verify_msl2(const FormTableau& t, int j) {
  require_j(t, j);
  Report r;
  const auto hd = h_poset(t.n, t.d);
  const auto hj = h_poset(t.n, j);
  const auto vgens = veronese_generators(t);
  const auto mgens = module_generators(t, j);

  std::string ideal_w, swap_w, order_w;
  std::size_t pairs = 0;
  for (std::size_t gi = 0; gi < mgens.size(); ++gi) {
    const auto& g = mgens[gi].index;
    const auto ideal = ideal_of(hd, g);
    if (!is_poset_ideal(hd.poset, ideal) && ideal_w.empty()) ideal_w = "I(g" + index_text(g) + ")";
    for (ElementId fid : ideal) {
      ++pairs;
      const auto& a = hd.tuples[fid];
      const std::string where = "f" + index_text(a) + " * g" + index_text(g);
      int s = -1;
      for (int k = 0; k < j; ++k) {
        if (a[k] < g[k]) {
          s = k;
          break;
        }
      }
      if (s < 0) {
        if (swap_w.empty()) swap_w = where + ": no index with a_s < i_s";
        continue;
      }
      std::vector<int> a_swapped = a, g_swapped = g;
      a_swapped[s] = g[s];
      g_swapped[s] = a[s];
      const MultiPoly lhs = vgens[fid].poly * mgens[gi].poly;
      const MultiPoly rhs = form_product(t, a_swapped) * form_product(t, g_swapped);
      if (!(lhs == rhs) && swap_w.empty()) swap_w = where + " differs from the swapped product";
      const auto gp = hj.find(g_swapped);
      if ((!gp || !hj.poset.less(*gp, static_cast<ElementId>(gi))) && order_w.empty()) {
        order_w = where + ": g" + index_text(g_swapped) + " is not below g" + index_text(g);
      }
    }
  }
  r.expect("msl2.ideals", ideal_w.empty(), ideal_w);
  if (swap_w.empty() && order_w.empty()) {
    r.pass("msl2.swap", std::to_string(pairs) + " pairs");
  } else {
    r.fail("msl2.swap", swap_w.empty() ? order_w : swap_w);
  }
  return r;
}

Report verify_msl1(const FormTableau& t, int j, int m_max) {
  require_j(t, j);
  Report r;
  const auto hd = h_poset(t.n, t.d);
  const auto vgens = veronese_generators(t);
  const auto mgens = module_generators(t, j);
  const auto zero = ExactScalar::zero(t.field), one = ExactScalar::one(t.field);

  for (int m = 0; m <= m_max; ++m) {
    const std::string tag = "msl1.m" + std::to_string(m);
    std::vector<std::string> names;
    std::vector<MultiPoly> elems;
    for (const auto& g : mgens) {
      const auto ideal = ideal_of(hd, g.index);
      if (m == 0) {
        names.push_back("g" + index_text(g.index));
        elems.push_back(g.poly);
        continue;
      }
      for (const auto& mu : multichains(hd.poset, static_cast<std::size_t>(m))) {
        if (ideal.count(mu.ids.front())) continue;
        MultiPoly p = g.poly;
        std::string name;
        for (ElementId v : mu.ids) {
          p = p * vgens[v].poly;
          name += "f" + index_text(hd.tuples[v]) + " ";
        }
        names.push_back(name + "g" + index_text(g.index));
        elems.push_back(std::move(p));
      }
    }

    const int degree = m * t.d + j;
    const auto basis = monomial_basis(t.n, degree);
    std::vector<std::vector<ExactScalar>> rows;
    for (const auto& p : elems) {
      std::vector<ExactScalar> row;
      row.reserve(basis.size());
      for (const auto& e : basis) row.push_back(p.coefficient(e));
      rows.push_back(std::move(row));
    }
    const std::size_t dim = binomial(static_cast<std::size_t>(degree + t.n - 1), static_cast<std::size_t>(t.n - 1));
    r.expect(tag + ".count", elems.size() == dim,
             std::to_string(elems.size()) + " standard elements, ambient dimension " + std::to_string(dim));
    const std::size_t counted = count_standard_elements(t.n, t.d, j, m);
    r.expect(tag + ".combinatorial", counted == elems.size(),
             "counted " + std::to_string(counted) + ", enumerated " + std::to_string(elems.size()));

    const auto ech = row_echelon(rows, zero, one);
    if (ech.rank() == elems.size()) {
      r.pass(tag + ".rank", "rank " + std::to_string(ech.rank()));
    } else {
      std::string w = std::string(to_string(ErrorCode::RankDeficient)) + ": rank " + std::to_string(ech.rank()) +
                      " of " + std::to_string(elems.size()) + "; dependent subset {";
      const auto& rel = ech.relations.front();
      bool first = true;
      for (std::size_t k = 0; k < rel.size(); ++k) {
        if (rel[k].is_zero()) continue;
        w += (first ? "" : ", ") + names[k];
        first = false;
      }
      r.fail(tag + ".rank", w + "}");
    }
  }
  return r;
}

Report verify_lift_identity(const FormTableau& t, int j) {
  require_j(t, j);
  Report r;
  std::string w;
  for (const auto& g : module_generators(t, j)) {
    MultiPoly p = g.poly;
    for (int k = j + 1; k <= t.d; ++k) p = p * t.poly(1, k);
    const auto idx = lifted(g.index, t.d);
    if (!(p == form_product(t, idx)) && w.empty()) w = "g" + index_text(g.index) + " vs f" + index_text(idx);
    if (!in_h_poset(HVector{idx}, t.n) && w.empty()) w = "f" + index_text(idx) + " is outside H_n(d)";
  }
  r.expect("lift_identity", w.empty(), w);
  return r;
}

std::size_t count_standard_elements(int n, int d, int j, int m) {
  const auto hj = h_poset(n, j);
  if (m == 0) return hj.size();
  const auto hd = h_poset(n, d);
  const std::size_t size = hd.size();
  // from[y] = number of k-multichains whose least member is y.
  std::vector<std::size_t> from(size, 1);
  for (int k = 2; k <= m; ++k) {
    std::vector<std::size_t> next(size, 0);
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t z = 0; z < size; ++z) {
        if (hd.poset.leq(static_cast<ElementId>(y), static_cast<ElementId>(z))) next[y] += from[z];
      }
    }
    from = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& g : hj.tuples) {
    const auto floor = lifted(g, d);
    for (std::size_t y = 0; y < size; ++y) {
      if (componentwise_geq(hd.tuples[y], floor)) total += from[y];
    }
  }
  return total;
}

std::vector<std::string> msl_conventions() {
  return {"H_n(d): coordinate sum <= n+d-1",
          "module generators g_{i_1...i_j}: index sum <= n+j-1, indexed by H_n(j)",
          "coefficient matrices use graded lexicographic order on exponents"};
}

Report msl_suite(int n, int d, int j, std::uint64_t seed, const FieldSpec& field, int m_max) {
  require_dims(n, d);
  if (j < 1 || j > d - 1) {
    throw Error(ErrorCode::InvalidArgument, "j must satisfy 1 <= j <= d-1",
                "j=" + std::to_string(j) + " d=" + std::to_string(d));
  }
  Report r;
  for (const auto& c : msl_conventions()) r.note_convention(c);
  r.note_convention("field " + field.to_string() + ", seed " + std::to_string(seed));
  const auto t = random_tableau(n, d, seed, field);
  {
    CheckTimer timer(r);
    r.expect("tableau.genericity", genericity_check(t), "a selection of forms is dependent");
  }
  {
    CheckTimer timer(r);
    r.merge(verify_msl2(t, j));
  }
  {
    CheckTimer timer(r);
    r.merge(verify_msl1(t, j, m_max));
  }
  {
    CheckTimer timer(r);
    r.merge(verify_lift_identity(t, j));
  }
  return r;
}

}  // namespace aslkit
