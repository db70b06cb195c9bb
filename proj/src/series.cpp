#include "comat/series.hpp"

#include <algorithm>

namespace comat {

namespace {
int clamp_wm(long long w) {
  return static_cast<int>(std::min<long long>(w, PowerSeries::exact_watermark));
}
}  // namespace

PowerSeries PowerSeries::monomial(Field f, const Scalar& c, int exp) {
  PowerSeries s(f, exact_watermark);
  s.set_coeff(exp, c);
  return s;
}

PowerSeries PowerSeries::from_coeffs(Field f, const std::vector<Scalar>& coeffs, int watermark) {
  PowerSeries s(f, watermark);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (static_cast<int>(i) < watermark) s.set_coeff(static_cast<int>(i), coeffs[i]);
  return s;
}

Scalar PowerSeries::coeff(int k) const {
  if (k >= watermark_) throw algebra_error("PowerSeries: coefficient beyond watermark");
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar::zero(field_);
  return coeffs_[k];
}

void PowerSeries::set_coeff(int k, const Scalar& v) {
  if (k >= watermark_) throw algebra_error("PowerSeries: writing beyond watermark");
  if (k >= static_cast<int>(coeffs_.size())) coeffs_.resize(k + 1, Scalar::zero(field_));
  coeffs_[k] = v;
  trim();
}

int PowerSeries::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  return watermark_;
}

PowerSeries PowerSeries::truncated(int watermark) const {
  PowerSeries s(field_, std::min(watermark, watermark_));
  for (int i = 0; i < static_cast<int>(coeffs_.size()) && i < s.watermark_; ++i)
    if (!coeffs_[i].is_zero()) s.set_coeff(i, coeffs_[i]);
  return s;
}

PowerSeries PowerSeries::shifted(int k) const {
  PowerSeries s(field_, clamp_wm(static_cast<long long>(watermark_) + k));
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (!coeffs_[i].is_zero() && i + k >= 0 && i + k < s.watermark_) s.set_coeff(i + k, coeffs_[i]);
  return s;
}

PowerSeries PowerSeries::scaled(const Scalar& c) const {
  PowerSeries s(field_, watermark_);
  if (c.is_zero()) return s;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i)
    if (!coeffs_[i].is_zero()) s.set_coeff(i, coeffs_[i] * c);
  return s;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  PowerSeries s(field_, std::min(watermark_, o.watermark_));
  int top = std::min<int>(s.watermark_, static_cast<int>(std::max(coeffs_.size(), o.coeffs_.size())));
  for (int i = 0; i < top; ++i) {
    Scalar v = (i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Scalar::zero(field_)) +
               (i < static_cast<int>(o.coeffs_.size()) ? o.coeffs_[i] : Scalar::zero(field_));
    if (!v.is_zero()) s.set_coeff(i, v);
  }
  return s;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  return *this + o.scaled(Scalar::of(field_, -1));
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  long long w1 = watermark_, w2 = o.watermark_;
  long long v1 = valuation(), v2 = o.valuation();
  int wm = clamp_wm(std::min(w1 + v2, w2 + v1));
  PowerSeries s(field_, wm);
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(o.coeffs_.size()); ++j) {
      if (o.coeffs_[j].is_zero() || i + j >= wm) continue;
      Scalar cur = (i + j < static_cast<int>(s.coeffs_.size())) ? s.coeffs_[i + j] : Scalar::zero(field_);
      s.set_coeff(i + j, cur + coeffs_[i] * o.coeffs_[j]);
    }
  }
  return s;
}

void PowerSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string PowerSeries::str() const {
  std::string s;
  for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coeffs_[i].str();
    if (i > 0) s += "*z^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  if (watermark_ < exact_watermark) s += " + O(z^" + std::to_string(watermark_) + ")";
  return s;
}

PowerSeries invert_unit(const PowerSeries& s, int precision) {
  if (s.watermark() < 1 || s.coeff(0).is_zero())
    throw algebra_error("invert_unit: series has positive or uncertified valuation");
  int wm = std::min(s.watermark(), precision);
  PowerSeries out(s.field(), wm);
  Scalar inv0 = s.coeff(0).inverse();
  out.set_coeff(0, inv0);
  for (int k = 1; k < wm; ++k) {
    Scalar acc = Scalar::zero(s.field());
    for (int i = 1; i <= k; ++i) acc += s.coeff(i) * out.coeff(k - i);
    out.set_coeff(k, -(inv0 * acc));
  }
  return out;
}

SeriesMatrix series_identity(Field f, int n) {
  SeriesMatrix m(n, std::vector<PowerSeries>(n, PowerSeries::zero(f)));
  for (int i = 0; i < n; ++i) m[i][i] = PowerSeries::one(f);
  return m;
}

SeriesMatrix series_mul(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.empty() || b.empty()) return {};
  int n = static_cast<int>(a.size()), k = static_cast<int>(b.size()), m = static_cast<int>(b[0].size());
  Field f = a[0][0].field();
  SeriesMatrix out(n, std::vector<PowerSeries>(m, PowerSeries::zero(f)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int t = 0; t < k; ++t) out[i][j] = out[i][j] + a[i][t] * b[t][j];
  return out;
}

SeriesMatrix series_inverse(const SeriesMatrix& a, int precision) {
  int n = static_cast<int>(a.size());
  if (n == 0) return {};
  Field f = a[0][0].field();
  SeriesMatrix work = a, inv = series_identity(f, n);
  for (auto& row : work)
    for (auto& e : row) e = e.truncated(precision);
  for (int k = 0; k < n; ++k) {
    int pr = -1;
    for (int i = k; i < n; ++i)
      if (work[i][k].known_nonzero() && work[i][k].valuation() == 0) { pr = i; break; }
    if (pr < 0) throw algebra_error("series_inverse: matrix is not unimodular");
    std::swap(work[pr], work[k]);
    std::swap(inv[pr], inv[k]);
    PowerSeries piv_inv = invert_unit(work[k][k], precision);
    for (int j = 0; j < n; ++j) {
      work[k][j] = work[k][j] * piv_inv;
      inv[k][j] = inv[k][j] * piv_inv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || !work[i][k].known_nonzero()) continue;
      PowerSeries q = work[i][k];
      for (int j = 0; j < n; ++j) {
        work[i][j] = work[i][j] - q * work[k][j];
        inv[i][j] = inv[i][j] - q * inv[k][j];
      }
    }
  }
  return inv;
}

SNFResult snf_dvr(const SeriesMatrix& a, int precision) {
  int rows = static_cast<int>(a.size());
  int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  Field f = rows && cols ? a[0][0].field() : field_q();
  if (rows && cols) f = a[0][0].field();
  SeriesMatrix work = a;
  for (auto& row : work)
    for (auto& e : row) e = e.truncated(precision);
  SNFResult res;
  res.u = series_identity(f, rows);
  res.v = series_identity(f, cols);
  int steps = std::min(rows, cols);
  for (int k = 0; k < steps; ++k) {
    // minimal certified valuation, ties broken by lowest (row, col)
    int pr = -1, pc = -1, pv = 0;
    bool all_zero = true;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        const PowerSeries& e = work[i][j];
        if (e.known_nonzero()) {
          all_zero = false;
          if (pr < 0 || e.valuation() < pv) { pr = i; pc = j; pv = e.valuation(); }
        } else if (!e.certified_zero(precision)) {
          all_zero = false;
        }
      }
    if (pr < 0) {
      if (all_zero) break;  // remaining entries certified zero
      throw algebra_error("insufficient precision: an entry's valuation is not certified below " +
                          std::to_string(precision));
    }
    std::swap(work[pr], work[k]);
    std::swap(res.u[pr], res.u[k]);
    if (pc != k) {
      for (int i = 0; i < rows; ++i) std::swap(work[i][pc], work[i][k]);
      for (int i = 0; i < cols; ++i) std::swap(res.v[i][pc], res.v[i][k]);
    }
    PowerSeries unit = work[k][k].shifted(-pv);
    PowerSeries unit_inv = invert_unit(unit, precision);
    for (int j = 0; j < cols; ++j) work[k][j] = unit_inv * work[k][j];
    for (int j = 0; j < rows; ++j) res.u[k][j] = unit_inv * res.u[k][j];
    for (int i = k + 1; i < rows; ++i) {
      if (!work[i][k].known_nonzero()) continue;
      PowerSeries q = work[i][k].shifted(-pv);
      for (int j = 0; j < cols; ++j) work[i][j] = work[i][j] - q * work[k][j];
      for (int j = 0; j < rows; ++j) res.u[i][j] = res.u[i][j] - q * res.u[k][j];
    }
    for (int j = k + 1; j < cols; ++j) {
      if (!work[k][j].known_nonzero()) continue;
      PowerSeries q = work[k][j].shifted(-pv);
      for (int i = 0; i < rows; ++i) work[i][j] = work[i][j] - q * work[i][k];
      for (int i = 0; i < cols; ++i) res.v[i][j] = res.v[i][j] - q * res.v[i][k];
    }
  }
  for (int k = 0; k < steps; ++k) {
    const PowerSeries& d = work[k][k];
    res.valuations.push_back(d.known_nonzero() ? d.valuation() : val_infinity);
  }
  for (size_t i = 0; i + 1 < res.valuations.size(); ++i) {
    int a_ = res.valuations[i], b_ = res.valuations[i + 1];
    if (a_ == val_infinity && b_ != val_infinity)
      throw algebra_error("snf_dvr: valuations not sorted");
    if (a_ != val_infinity && b_ != val_infinity && a_ > b_)
      throw algebra_error("snf_dvr: valuations not sorted");
  }
  // certify U A V = diag to the common watermark
  {
    SeriesMatrix uav = series_mul(res.u, series_mul(a, res.v));
    int wm = precision;
    for (const auto& row : uav)
      for (const auto& e : row) wm = std::min(wm, e.watermark());
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        PowerSeries expect = PowerSeries::zero(f);
        if (i == j && i < steps && res.valuations[i] != val_infinity)
          expect = PowerSeries::monomial(f, Scalar::one(f), res.valuations[i]);
        if (!(uav[i][j].truncated(wm) == expect.truncated(wm)))
          throw algebra_error("snf_dvr: certification of U A V failed");
      }
    res.watermark = wm;
  }
  // unimodularity: constant-term determinant nonzero
  auto const_rank = [&](const SeriesMatrix& m) {
    int n = static_cast<int>(m.size());
    Matrix c0(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m[i][j].watermark() > 0) c0.set(i, j, m[i][j].coeff(0));
    return rank(c0);
  };
  if (const_rank(res.u) != rows || const_rank(res.v) != cols)
    throw algebra_error("snf_dvr: transforms are not unimodular");
  return res;
}

int CompleteCycleAlgebra::step(int v, int len) const {
  const int k = cycle_of[v];
  const auto& cyc = spec.cycles[k];
  const int L = cycle_len[k];
  int pos = (pos_in_cycle[v] + len) % L;
  return spec.quiver.arrows[cyc[pos]].src;
}

CompleteCycleAlgebra make_cycle_algebra(const MonomialSpec& s) {
  SpecReport rep = validate_spec(s);
  if (!rep.valid) throw algebra_error("make_cycle_algebra: invalid monomial spec");
  if (!s.extra.empty()) throw algebra_error("make_cycle_algebra: spec must consist of disjoint cycles only");
  CompleteCycleAlgebra alg;
  alg.spec = s;
  const int nv = static_cast<int>(s.quiver.vertices.size());
  alg.cycle_of.assign(nv, -1);
  alg.pos_in_cycle.assign(nv, -1);
  for (size_t k = 0; k < s.cycles.size(); ++k) {
    alg.cycle_len.push_back(static_cast<int>(s.cycles[k].size()));
    for (size_t i = 0; i < s.cycles[k].size(); ++i) {
      int v = s.quiver.arrows[s.cycles[k][i]].src;
      alg.cycle_of[v] = static_cast<int>(k);
      alg.pos_in_cycle[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < nv; ++v)
    if (alg.cycle_of[v] < 0)
      throw algebra_error("make_cycle_algebra: vertex " + s.quiver.vertices[v] + " lies on no cycle");
  return alg;
}

CompleteCycleAlgebra power_series_algebra(Field f) {
  MonomialSpec s;
  s.field = f;
  s.quiver.vertices = {"pt"};
  s.quiver.arrows = {{"z", 0, 0}};
  s.cycles = {{0}};
  return make_cycle_algebra(s);
}

PathPoly path_poly_term(const Scalar& c, int start_vertex, int len) {
  PathPoly p;
  if (!c.is_zero()) p.terms[{start_vertex, len}] = c;
  return p;
}

PathPoly pp_add(const PathPoly& a, const PathPoly& b) {
  PathPoly out = a;
  for (const auto& [k, v] : b.terms) {
    auto it = out.terms.find(k);
    Scalar s = (it == out.terms.end() ? v : it->second + v);
    if (s.is_zero())
      out.terms.erase(k);
    else
      out.terms[k] = s;
  }
  return out;
}

PathPoly pp_scale(const PathPoly& a, const Scalar& c) {
  PathPoly out;
  if (c.is_zero()) return out;
  for (const auto& [k, v] : a.terms) out.terms[k] = v * c;
  return out;
}

PathPoly pp_mul(const CompleteCycleAlgebra& alg, const PathPoly& a, const PathPoly& b) {
  PathPoly out;
  for (const auto& [ka, va] : a.terms)
    for (const auto& [kb, vb] : b.terms) {
      if (alg.step(ka.first, ka.second) != kb.first) continue;  // not composable
      auto key = std::make_pair(ka.first, ka.second + kb.second);
      auto it = out.terms.find(key);
      Scalar s = (it == out.terms.end() ? va * vb : it->second + va * vb);
      if (s.is_zero())
        out.terms.erase(key);
      else
        out.terms[key] = s;
    }
  return out;
}

PathPoly pp_z(const CompleteCycleAlgebra& alg) {
  PathPoly out;
  for (int v = 0; v < alg.vertices(); ++v)
    out.terms[{v, alg.vertex_cycle_len(v)}] = Scalar::one(alg.field());
  return out;
}

std::string pp_str(const CompleteCycleAlgebra& alg, const PathPoly& p) {
  std::string s;
  for (const auto& [k, v] : p.terms) {
    if (!s.empty()) s += " + ";
    s += v.str() + "*(" + alg.spec.quiver.vertices[k.first] + ",len " + std::to_string(k.second) + ")";
  }
  return s.empty() ? "0" : s;
}

void validate_presentation(const FgPresentation& p) {
  const int g = static_cast<int>(p.gen_vertex.size());
  for (int v : p.gen_vertex)
    if (v < 0 || v >= p.algebra.vertices()) throw algebra_error("presentation: generator vertex out of range");
  for (const auto& row : p.relations) {
    if (static_cast<int>(row.size()) != g)
      throw algebra_error("presentation: relation row width mismatch");
    for (int j = 0; j < g; ++j)
      for (const auto& [k, v] : row[j].terms)
        if (p.algebra.step(k.first, k.second) != p.gen_vertex[j])
          throw algebra_error("presentation: entry path does not end at the generator's vertex");
  }
}

RestrictedPresentation restrict_scalars(const FgPresentation& p) {
  validate_presentation(p);
  const CompleteCycleAlgebra& alg = p.algebra;
  Field f = alg.field();
  RestrictedPresentation out;
  out.field = f;
  std::map<std::pair<int, int>, int> index;  // (gen, base length) -> restricted index
  for (size_t j = 0; j < p.gen_vertex.size(); ++j) {
    int L = alg.vertex_cycle_len(p.gen_vertex[j]);
    for (int l = 0; l < L; ++l) {
      index[{static_cast<int>(j), l}] = out.gens;
      out.gen_key.push_back({static_cast<int>(j), l});
      out.gen_labels.push_back("g" + std::to_string(j) + "|len" + std::to_string(l));
      ++out.gens;
    }
  }
  auto to_series_row = [&](const std::vector<PathPoly>& row) {
    std::vector<PowerSeries> sr(out.gens, PowerSeries::zero(f));
    bool nonzero = false;
    for (size_t j = 0; j < row.size(); ++j) {
      int L = alg.vertex_cycle_len(p.gen_vertex[j]);
      for (const auto& [k, v] : row[j].terms) {
        int l0 = k.second % L, zp = k.second / L;
        int idx = index[{static_cast<int>(j), l0}];
        PowerSeries add = PowerSeries::monomial(f, v, zp);
        sr[idx] = sr[idx] + add;
        nonzero = true;
      }
    }
    return std::make_pair(sr, nonzero);
  };
  // expand every relation row over its path orbit: t . row for all base paths t
  for (const auto& row : p.relations) {
    for (int u = 0; u < alg.vertices(); ++u) {
      int L = alg.vertex_cycle_len(u);
      for (int m = 0; m < L; ++m) {
        PathPoly t = path_poly_term(Scalar::one(f), u, m);
        std::vector<PathPoly> trow;
        for (const auto& e : row) trow.push_back(pp_mul(alg, t, e));
        auto [sr, nonzero] = to_series_row(trow);
        if (nonzero) out.rows.push_back(sr);
      }
    }
  }
  return out;
}

std::vector<PowerSeries> restricted_coordinates(const FgPresentation& p,
                                                const RestrictedPresentation& r,
                                                const std::vector<PathPoly>& element) {
  if (element.size() != p.gen_vertex.size())
    throw algebra_error("restricted_coordinates: component count mismatch");
  std::vector<PowerSeries> out(r.gens, PowerSeries::zero(r.field));
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < r.gens; ++i) index[r.gen_key[i]] = i;
  for (size_t j = 0; j < element.size(); ++j) {
    int L = p.algebra.vertex_cycle_len(p.gen_vertex[j]);
    for (const auto& [k, v] : element[j].terms) {
      if (p.algebra.step(k.first, k.second) != p.gen_vertex[j])
        throw algebra_error("restricted_coordinates: path does not end at the generator's vertex");
      int idx = index[{static_cast<int>(j), k.second % L}];
      out[idx] = out[idx] + PowerSeries::monomial(r.field, v, k.second / L);
    }
  }
  return out;
}

RatPartResult rat_part_fg(const FgPresentation& p, int precision, int slack) {
  RatPartResult res;
  res.restricted = restrict_scalars(p);
  Field f = res.restricted.field;
  const int g = res.restricted.gens;
  const int r = static_cast<int>(res.restricted.rows.size());
  // presentation matrix with relation rows as columns: X = coker(A)
  SeriesMatrix a(g, std::vector<PowerSeries>(r, PowerSeries::zero(f)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < g; ++j) a[j][i] = res.restricted.rows[i][j];
  res.snf = snf_dvr(a, precision);
  res.watermark = res.snf.watermark;
  int diag = static_cast<int>(res.snf.valuations.size());
  std::vector<int> torsion_idx;
  res.free_rank = g - diag;  // coordinates with no relation column at all
  for (int i = 0; i < diag; ++i) {
    int d = res.snf.valuations[i];
    if (d == val_infinity)
      ++res.free_rank;
    else if (d >= 1)
      torsion_idx.push_back(i);
  }
  for (int i : torsion_idx) res.torsion_valuations.push_back(res.snf.valuations[i]);
  std::sort(res.torsion_valuations.begin(), res.torsion_valuations.end());

  SeriesMatrix uinv = series_inverse(res.snf.u, precision);
  const int t = static_cast<int>(torsion_idx.size());
  res.inclusion.assign(g, std::vector<PowerSeries>(t, PowerSeries::zero(f)));
  res.projection.assign(t, std::vector<PowerSeries>(g, PowerSeries::zero(f)));
  for (int c = 0; c < t; ++c)
    for (int i = 0; i < g; ++i) res.inclusion[i][c] = uinv[i][torsion_idx[c]];
  for (int c = 0; c < t; ++c)
    for (int j = 0; j < g; ++j) res.projection[c][j] = res.snf.u[torsion_idx[c]][j];
  res.torsion_generators = res.inclusion;

  // residual: projection . inclusion = identity on the torsion block
  res.residual_certified_zero = true;
  int wm = res.watermark;
  if (t > 0) {
    SeriesMatrix pi = series_mul(res.projection, res.inclusion);
    for (const auto& row : pi)
      for (const auto& e : row) wm = std::min(wm, e.watermark());
    for (int i = 0; i < t && res.residual_certified_zero; ++i)
      for (int j = 0; j < t; ++j) {
        PowerSeries expect = i == j ? PowerSeries::one(f) : PowerSeries::zero(f);
        if (!(pi[i][j].truncated(wm) == expect.truncated(wm))) res.residual_certified_zero = false;
      }
  }
  res.watermark = wm;
  int maxval = res.torsion_valuations.empty() ? 0 : res.torsion_valuations.back();
  if (wm - maxval < slack) {
    res.status = RatStatus::insufficient_precision;
    res.report = "certificate margin " + std::to_string(wm - maxval) + " below slack " +
                 std::to_string(slack);
    return res;
  }
  res.report = "torsion factors " + std::to_string(t) + ", free rank " +
               std::to_string(res.free_rank) + ", certified to z^" + std::to_string(wm);
  return res;
}

TruncatedModule truncate_module(const RestrictedPresentation& r, int level) {
  TruncatedModule t;
  t.field = r.field;
  t.gens = r.gens;
  t.level = level;
  int maxdeg = 0;
  for (const auto& row : r.rows)
    for (const auto& e : row)
      if (e.known_nonzero())
        for (int k = std::min(e.watermark(), level) - 1; k >= 0; --k)
          if (!e.coeff(k).is_zero()) { maxdeg = std::max(maxdeg, k); break; }
  t.guard = std::min(maxdeg + 1, level);
  Field f = r.field;
  const int dim = r.gens * level;
  Matrix rel(f, dim, 0);
  std::vector<Matrix> cols;
  for (const auto& row : r.rows) {
    for (int shift = 0; shift < level; ++shift) {
      Matrix v(f, dim, 1);
      bool nz = false;
      for (int g = 0; g < r.gens; ++g) {
        const PowerSeries& e = row[g];
        for (int k = 0; k + shift < level && k < std::min(e.watermark(), level); ++k) {
          if (e.coeff(k).is_zero()) continue;
          v.set(g * level + k + shift, 0, e.coeff(k));
          nz = true;
        }
      }
      if (nz) cols.push_back(v);
    }
  }
  // top-degree fog: coordinates at degree >= level - guard
  for (int g = 0; g < r.gens; ++g)
    for (int k = level - t.guard; k < level; ++k) {
      Matrix v(f, dim, 1);
      v.set(g * level + k, 0, Scalar::one(f));
      cols.push_back(v);
    }
  for (const Matrix& c : cols) rel = rel.cols() == 0 ? c : rel.hcat(c);
  t.relations = column_space(rel);
  t.shift = Matrix(f, dim, dim);
  for (int g = 0; g < r.gens; ++g)
    for (int k = 0; k + 1 < level; ++k) t.shift.set(g * level + k + 1, g * level + k, Scalar::one(f));
  return t;
}

Matrix truncated_vector(const TruncatedModule& t, const std::vector<PowerSeries>& coords) {
  if (static_cast<int>(coords.size()) != t.gens)
    throw algebra_error("truncated_vector: coordinate count mismatch");
  Matrix v(t.field, t.gens * t.level, 1);
  for (int g = 0; g < t.gens; ++g)
    for (int k = 0; k < t.level && k < coords[g].watermark(); ++k)
      if (!coords[g].coeff(k).is_zero()) v.set(g * t.level + k, 0, coords[g].coeff(k));
  return v;
}

}  // namespace comat
