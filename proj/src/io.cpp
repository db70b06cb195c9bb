#include "comat/io.hpp"

#include <algorithm>

namespace comat {
namespace io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& need(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw io_error("missing field '" + key + "'", path);
  return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_string()) throw io_error("field '" + key + "' must be a string", path);
  return v.get<std::string>();
}

int need_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = need(j, key, path);
  if (!v.is_number_integer()) throw io_error("field '" + key + "' must be an integer", path);
  return v.get<int>();
}

BigInt bigint_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw io_error("not an integer literal", path);
    }
  }
  throw io_error("expected an integer or integer string", path);
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(v));
  return json(v.str());
}

int vertex_of(const Quiver& q, const std::string& name, const std::string& path) {
  int v = q.vertex_index(name);
  if (v < 0) throw io_error("unknown vertex '" + name + "'", path);
  return v;
}

int basis_of(const FiniteCoalgebra& c, const std::string& name, const std::string& path) {
  for (int i = 0; i < c.dim(); ++i)
    if (c.names[i] == name) return i;
  throw io_error("unknown basis element '" + name + "'", path);
}

}  // namespace

json field_to_json(const Field& f) {
  json j;
  if (f.is_rational()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.p;
  }
  return j;
}

Field field_from_json(const json& j, const std::string& path) {
  std::string kind = need_string(j, "kind", path);
  if (kind == "Q") return field_q();
  if (kind == "Fp") return field_fp(need_int(j, "p", path));
  throw io_error("field kind must be 'Q' or 'Fp'", child(path, "kind"));
}

json scalar_to_json(const Scalar& s) {
  json j;
  if (s.field().is_rational()) {
    j["num"] = bigint_to_json(s.num());
    j["den"] = bigint_to_json(s.den());
  } else {
    j["mod"] = s.field().p;
    j["val"] = bigint_to_json(s.num());
  }
  return j;
}

Scalar scalar_from_json(const json& j, Field f, const std::string& path) {
  if (!j.is_object()) throw io_error("scalar must be an object", path);
  if (f.is_rational()) {
    if (!j.contains("num") || !j.contains("den"))
      throw io_error("rational scalar needs 'num' and 'den'", path);
    return Scalar(f, bigint_from_json(j.at("num"), child(path, "num")),
                  bigint_from_json(j.at("den"), child(path, "den")));
  }
  if (!j.contains("mod") || !j.contains("val"))
    throw io_error("F_p scalar needs 'mod' and 'val'", path);
  if (bigint_from_json(j.at("mod"), child(path, "mod")) != f.p)
    throw io_error("scalar modulus disagrees with the document field", child(path, "mod"));
  return Scalar(f, bigint_from_json(j.at("val"), child(path, "val")), 1);
}

json coalgebra_to_json(const FiniteCoalgebra& c) {
  json j;
  j["type"] = "coalgebra";
  j["schema"] = 1;
  j["field"] = field_to_json(c.field);
  j["basis"] = c.names;
  json counit = json::object();
  for (int i = 0; i < c.dim(); ++i)
    if (!c.counit.get(0, i).is_zero()) counit[c.names[i]] = scalar_to_json(c.counit.get(0, i));
  j["counit"] = counit;
  json delta = json::object();
  const int n = c.dim();
  for (int k = 0; k < n; ++k) {
    json terms = json::array();
    for (const auto& [ij, v] : c.delta.entries()) {
      if (ij.second != k) continue;
      json t;
      t["left"] = c.names[ij.first / n];
      t["right"] = c.names[ij.first % n];
      t["coeff"] = scalar_to_json(v);
      terms.push_back(t);
    }
    if (!terms.empty()) delta[c.names[k]] = terms;
  }
  j["delta"] = delta;
  if (c.grading) {
    json g = json::object();
    for (int i = 0; i < n; ++i) g[c.names[i]] = (*c.grading)[i];
    j["grading"] = g;
  }
  return j;
}

FiniteCoalgebra coalgebra_from_json(const json& j, const std::string& path) {
  FiniteCoalgebra c;
  c.field = field_from_json(need(j, "field", path), child(path, "field"));
  const json& basis = need(j, "basis", path);
  if (!basis.is_array() || basis.empty()) throw io_error("'basis' must be a nonempty array", child(path, "basis"));
  for (const auto& b : basis) c.names.push_back(b.get<std::string>());
  const int n = c.dim();
  {
    std::vector<std::string> sorted = c.names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw io_error("duplicate basis names", child(path, "basis"));
  }
  c.counit = Matrix(c.field, 1, n);
  const json& counit = need(j, "counit", path);
  for (auto it = counit.begin(); it != counit.end(); ++it)
    c.counit.set(0, basis_of(c, it.key(), child(path, "counit")),
                 scalar_from_json(it.value(), c.field, child(child(path, "counit"), it.key())));
  c.delta = Matrix(c.field, n * n, n);
  const json& delta = need(j, "delta", path);
  for (auto it = delta.begin(); it != delta.end(); ++it) {
    int k = basis_of(c, it.key(), child(path, "delta"));
    if (!it.value().is_array()) throw io_error("delta terms must be an array", child(child(path, "delta"), it.key()));
    size_t idx = 0;
    for (const auto& t : it.value()) {
      std::string tpath = at(child(child(path, "delta"), it.key()), idx++);
      int a = basis_of(c, need_string(t, "left", tpath), tpath);
      int b = basis_of(c, need_string(t, "right", tpath), tpath);
      c.delta.add_to(a * n + b, k, scalar_from_json(need(t, "coeff", tpath), c.field, child(tpath, "coeff")));
    }
  }
  if (j.contains("grading")) {
    std::vector<int> g(n, 0);
    const json& gj = j.at("grading");
    for (auto it = gj.begin(); it != gj.end(); ++it)
      g[basis_of(c, it.key(), child(path, "grading"))] = it.value().get<int>();
    c.grading = g;
  }
  return c;
}

json spec_to_json(const MonomialSpec& s) {
  json j;
  j["type"] = "quiver-spec";
  j["schema"] = 1;
  j["field"] = field_to_json(s.field);
  j["vertices"] = s.quiver.vertices;
  json arrows = json::array();
  for (const auto& a : s.quiver.arrows) {
    json aj;
    aj["label"] = a.label;
    aj["src"] = s.quiver.vertices[a.src];
    aj["tgt"] = s.quiver.vertices[a.tgt];
    arrows.push_back(aj);
  }
  j["arrows"] = arrows;
  json cycles = json::array();
  for (const auto& cyc : s.cycles) {
    json cj = json::array();
    for (int a : cyc) cj.push_back(s.quiver.arrows[a].label);
    cycles.push_back(cj);
  }
  j["cycles"] = cycles;
  json extra = json::array();
  for (const auto& p : s.extra) {
    json pj;
    pj["from"] = s.quiver.vertices[p.start];
    json arrs = json::array();
    for (int a : p.arrows) arrs.push_back(s.quiver.arrows[a].label);
    pj["arrows"] = arrs;
    extra.push_back(pj);
  }
  j["extra"] = extra;
  return j;
}

MonomialSpec spec_from_json(const json& j, const std::string& path) {
  MonomialSpec s;
  s.field = field_from_json(need(j, "field", path), child(path, "field"));
  const json& verts = need(j, "vertices", path);
  for (const auto& v : verts) s.quiver.vertices.push_back(v.get<std::string>());
  const json& arrows = need(j, "arrows", path);
  size_t idx = 0;
  for (const auto& a : arrows) {
    std::string apath = at(child(path, "arrows"), idx++);
    Arrow ar;
    ar.label = need_string(a, "label", apath);
    ar.src = vertex_of(s.quiver, need_string(a, "src", apath), apath);
    ar.tgt = vertex_of(s.quiver, need_string(a, "tgt", apath), apath);
    s.quiver.arrows.push_back(ar);
  }
  auto arrow_of = [&](const std::string& label, const std::string& p) {
    int a = s.quiver.arrow_index(label);
    if (a < 0) throw io_error("unknown arrow '" + label + "'", p);
    return a;
  };
  if (j.contains("cycles")) {
    idx = 0;
    for (const auto& cyc : j.at("cycles")) {
      std::string cpath = at(child(path, "cycles"), idx++);
      std::vector<int> c;
      for (const auto& l : cyc) c.push_back(arrow_of(l.get<std::string>(), cpath));
      s.cycles.push_back(c);
    }
  }
  if (j.contains("extra")) {
    idx = 0;
    for (const auto& pj : j.at("extra")) {
      std::string ppath = at(child(path, "extra"), idx++);
      Path p;
      p.start = vertex_of(s.quiver, need_string(pj, "from", ppath), ppath);
      for (const auto& l : need(pj, "arrows", ppath)) p.arrows.push_back(arrow_of(l.get<std::string>(), ppath));
      if (!path_composable(s.quiver, p)) throw io_error("path arrows do not compose", ppath);
      s.extra.push_back(p);
    }
  }
  return s;
}

namespace {

json bicomodule_to_json(const Bicomodule& b) {
  json j;
  j["dim"] = b.dim;
  const int nd = b.left_coalgebra.dim(), ne = b.right_coalgebra.dim();
  json left = json::object();
  for (int col = 0; col < b.dim; ++col) {
    json terms = json::array();
    for (const auto& [ij, v] : b.left_coaction.entries()) {
      if (ij.second != col) continue;
      json t;
      t["c"] = b.left_coalgebra.names[ij.first / b.dim];
      t["m"] = ij.first % b.dim;
      t["coeff"] = scalar_to_json(v);
      terms.push_back(t);
    }
    if (!terms.empty()) left[std::to_string(col)] = terms;
  }
  j["left"] = left;
  json right = json::object();
  for (int col = 0; col < b.dim; ++col) {
    json terms = json::array();
    for (const auto& [ij, v] : b.right_coaction.entries()) {
      if (ij.second != col) continue;
      json t;
      t["m"] = ij.first / ne;
      t["c"] = b.right_coalgebra.names[ij.first % ne];
      t["coeff"] = scalar_to_json(v);
      terms.push_back(t);
    }
    if (!terms.empty()) right[std::to_string(col)] = terms;
  }
  j["right"] = right;
  return j;
}

Bicomodule bicomodule_from_json(const json& j, const FiniteCoalgebra& d, const FiniteCoalgebra& e,
                                const std::string& path) {
  Bicomodule b;
  b.left_coalgebra = d;
  b.right_coalgebra = e;
  b.dim = need_int(j, "dim", path);
  if (b.dim < 0) throw io_error("'dim' must be nonnegative", child(path, "dim"));
  b.left_coaction = Matrix(d.field, d.dim() * b.dim, b.dim);
  b.right_coaction = Matrix(d.field, b.dim * e.dim(), b.dim);
  auto col_of = [&](const std::string& key, const std::string& p) {
    int col = -1;
    try {
      col = std::stoi(key);
    } catch (const std::exception&) {
      throw io_error("coaction keys must be basis indices", p);
    }
    if (col < 0 || col >= b.dim) throw io_error("basis index out of range", p);
    return col;
  };
  if (j.contains("left"))
    for (auto it = j.at("left").begin(); it != j.at("left").end(); ++it) {
      std::string p = child(child(path, "left"), it.key());
      int col = col_of(it.key(), p);
      size_t idx = 0;
      for (const auto& t : it.value()) {
        std::string tp = at(p, idx++);
        int c = basis_of(d, need_string(t, "c", tp), tp);
        int m = need_int(t, "m", tp);
        if (m < 0 || m >= b.dim) throw io_error("'m' out of range", tp);
        b.left_coaction.add_to(c * b.dim + m, col,
                               scalar_from_json(need(t, "coeff", tp), d.field, child(tp, "coeff")));
      }
    }
  if (j.contains("right"))
    for (auto it = j.at("right").begin(); it != j.at("right").end(); ++it) {
      std::string p = child(child(path, "right"), it.key());
      int col = col_of(it.key(), p);
      size_t idx = 0;
      for (const auto& t : it.value()) {
        std::string tp = at(p, idx++);
        int m = need_int(t, "m", tp);
        if (m < 0 || m >= b.dim) throw io_error("'m' out of range", tp);
        int c = basis_of(e, need_string(t, "c", tp), tp);
        b.right_coaction.add_to(m * e.dim() + c, col,
                                scalar_from_json(need(t, "coeff", tp), d.field, child(tp, "coeff")));
      }
    }
  return b;
}

json context_to_json(const MoritaTakeuchiContext& ctx) {
  json j;
  j["type"] = "context";
  j["schema"] = 1;
  j["D"] = coalgebra_to_json(ctx.d);
  j["E"] = coalgebra_to_json(ctx.e);
  j["X"] = bicomodule_to_json(ctx.x);
  j["Y"] = bicomodule_to_json(ctx.y);
  json phi = json::object();
  for (int k = 0; k < ctx.d.dim(); ++k) {
    json terms = json::array();
    for (const auto& [ij, v] : ctx.phi.entries()) {
      if (ij.second != k) continue;
      json t;
      t["x"] = ij.first / std::max(1, ctx.y.dim);
      t["y"] = ij.first % std::max(1, ctx.y.dim);
      t["coeff"] = scalar_to_json(v);
      terms.push_back(t);
    }
    if (!terms.empty()) phi[ctx.d.names[k]] = terms;
  }
  j["phi"] = phi;
  json psi = json::object();
  for (int k = 0; k < ctx.e.dim(); ++k) {
    json terms = json::array();
    for (const auto& [ij, v] : ctx.psi.entries()) {
      if (ij.second != k) continue;
      json t;
      t["y"] = ij.first / std::max(1, ctx.x.dim);
      t["x"] = ij.first % std::max(1, ctx.x.dim);
      t["coeff"] = scalar_to_json(v);
      terms.push_back(t);
    }
    if (!terms.empty()) psi[ctx.e.names[k]] = terms;
  }
  j["psi"] = psi;
  return j;
}

MoritaTakeuchiContext context_from_json(const json& j, const std::string& path) {
  MoritaTakeuchiContext ctx;
  ctx.d = coalgebra_from_json(need(j, "D", path), child(path, "D"));
  ctx.e = coalgebra_from_json(need(j, "E", path), child(path, "E"));
  ctx.x = bicomodule_from_json(need(j, "X", path), ctx.d, ctx.e, child(path, "X"));
  ctx.y = bicomodule_from_json(need(j, "Y", path), ctx.e, ctx.d, child(path, "Y"));
  ctx.phi = Matrix(ctx.d.field, ctx.x.dim * ctx.y.dim, ctx.d.dim());
  ctx.psi = Matrix(ctx.d.field, ctx.y.dim * ctx.x.dim, ctx.e.dim());
  if (j.contains("phi"))
    for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it) {
      std::string p = child(child(path, "phi"), it.key());
      int k = basis_of(ctx.d, it.key(), p);
      size_t idx = 0;
      for (const auto& t : it.value()) {
        std::string tp = at(p, idx++);
        int x = need_int(t, "x", tp), y = need_int(t, "y", tp);
        if (x < 0 || x >= ctx.x.dim || y < 0 || y >= ctx.y.dim) throw io_error("phi index out of range", tp);
        ctx.phi.add_to(x * ctx.y.dim + y, k,
                       scalar_from_json(need(t, "coeff", tp), ctx.d.field, child(tp, "coeff")));
      }
    }
  if (j.contains("psi"))
    for (auto it = j.at("psi").begin(); it != j.at("psi").end(); ++it) {
      std::string p = child(child(path, "psi"), it.key());
      int k = basis_of(ctx.e, it.key(), p);
      size_t idx = 0;
      for (const auto& t : it.value()) {
        std::string tp = at(p, idx++);
        int x = need_int(t, "x", tp), y = need_int(t, "y", tp);
        if (x < 0 || x >= ctx.x.dim || y < 0 || y >= ctx.y.dim) throw io_error("psi index out of range", tp);
        ctx.psi.add_to(y * ctx.x.dim + x, k,
                       scalar_from_json(need(t, "coeff", tp), ctx.d.field, child(tp, "coeff")));
      }
    }
  return ctx;
}

json path_terms_to_json(const PathPoly& pp, const CompleteCycleAlgebra& alg) {
  json terms = json::array();
  for (const auto& [k, v] : pp.terms) {
    json t;
    t["from"] = alg.spec.quiver.vertices[k.first];
    t["len"] = k.second;
    t["coeff"] = scalar_to_json(v);
    terms.push_back(t);
  }
  return terms;
}

PathPoly path_terms_from_json(const json& j, const CompleteCycleAlgebra& alg, const std::string& path) {
  PathPoly pp;
  if (!j.is_array()) throw io_error("path polynomial must be an array of terms", path);
  size_t idx = 0;
  for (const auto& t : j) {
    std::string tp = at(path, idx++);
    int v = vertex_of(alg.spec.quiver, need_string(t, "from", tp), tp);
    int len = need_int(t, "len", tp);
    if (len < 0) throw io_error("'len' must be nonnegative", tp);
    pp = pp_add(pp, path_poly_term(scalar_from_json(need(t, "coeff", tp), alg.field(), child(tp, "coeff")),
                                   v, len));
  }
  return pp;
}

}  // namespace

json presentation_to_json(const FgPresentation& p) {
  json j;
  j["type"] = "module-presentation";
  j["schema"] = 1;
  j["field"] = field_to_json(p.algebra.field());
  json alg;
  if (p.algebra.spec.quiver.vertices.size() == 1 && p.algebra.spec.quiver.vertices[0] == "pt") {
    alg["kind"] = "power-series";
  } else {
    alg["kind"] = "cycles";
    alg["spec"] = spec_to_json(p.algebra.spec);
  }
  j["algebra"] = alg;
  json gens = json::array();
  for (int v : p.gen_vertex) {
    json g;
    g["vertex"] = p.algebra.spec.quiver.vertices[v];
    gens.push_back(g);
  }
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& row : p.relations) {
    json r = json::array();
    for (const auto& e : row) r.push_back(path_terms_to_json(e, p.algebra));
    rels.push_back(r);
  }
  j["relations"] = rels;
  return j;
}

FgPresentation presentation_from_json(const json& j, const std::string& path) {
  FgPresentation p;
  Field f = field_from_json(need(j, "field", path), child(path, "field"));
  const json& alg = need(j, "algebra", path);
  std::string kind = need_string(alg, "kind", child(path, "algebra"));
  if (kind == "power-series") {
    p.algebra = power_series_algebra(f);
  } else if (kind == "cycles") {
    MonomialSpec s = spec_from_json(need(alg, "spec", child(path, "algebra")),
                                    child(child(path, "algebra"), "spec"));
    if (!(s.field == f)) throw io_error("algebra field disagrees with the document field", child(path, "algebra"));
    p.algebra = make_cycle_algebra(s);
  } else {
    throw io_error("algebra kind must be 'power-series' or 'cycles'", child(path, "algebra"));
  }
  size_t idx = 0;
  for (const auto& g : need(j, "generators", path)) {
    std::string gp = at(child(path, "generators"), idx++);
    p.gen_vertex.push_back(vertex_of(p.algebra.spec.quiver, need_string(g, "vertex", gp), gp));
  }
  idx = 0;
  for (const auto& row : need(j, "relations", path)) {
    std::string rp = at(child(path, "relations"), idx++);
    if (!row.is_array() || row.size() != p.gen_vertex.size())
      throw io_error("relation row must list one entry per generator", rp);
    std::vector<PathPoly> r;
    size_t cidx = 0;
    for (const auto& e : row) r.push_back(path_terms_from_json(e, p.algebra, at(rp, cidx++)));
    p.relations.push_back(r);
  }
  validate_presentation(p);
  return p;
}

namespace {

json triangular_to_json(const TriangularData& t) {
  json j;
  j["type"] = "triangular";
  j["schema"] = 1;
  j["D"] = coalgebra_to_json(t.d);
  j["E"] = coalgebra_to_json(t.e);
  j["M"] = bicomodule_to_json(t.m);
  return j;
}

TriangularData triangular_from_json(const json& j, const std::string& path) {
  TriangularData t;
  t.d = coalgebra_from_json(need(j, "D", path), child(path, "D"));
  t.e = coalgebra_from_json(need(j, "E", path), child(path, "E"));
  t.m = bicomodule_from_json(need(j, "M", path), t.d, t.e, child(path, "M"));
  return t;
}

json xelement_to_json(const XElement& x, const CompleteCycleAlgebra& alg) {
  json j = json::array();
  for (const auto& comp : x) j.push_back(path_terms_to_json(comp, alg));
  return j;
}

XElement xelement_from_json(const json& j, const FgPresentation& pres, const std::string& path) {
  if (!j.is_array() || j.size() != pres.gen_vertex.size())
    throw io_error("module element must list one path polynomial per generator", path);
  XElement x;
  size_t idx = 0;
  for (const auto& comp : j) x.push_back(path_terms_from_json(comp, pres.algebra, at(path, idx++)));
  return x;
}

json tri_module_to_json(const TriangularModule& h) {
  json j;
  j["type"] = "triangular-module";
  j["schema"] = 1;
  if (!h.a_serial_cyclic || !h.x)
    throw io_error("only serial-cyclic triangular modules are serialized", "$");
  j["X"] = presentation_to_json(*h.x);
  j["E"] = coalgebra_to_json(h.e);
  j["Y"] = json::object();
  j["Y"]["dim"] = h.y.dim;
  json act = json::object();
  const int nb = h.y.algebra.dim();
  for (int k = 0; k < nb; ++k) {
    json mat = json::array();
    for (int r = 0; r < h.y.dim; ++r) {
      json row = json::array();
      for (int c = 0; c < h.y.dim; ++c) row.push_back(scalar_to_json(h.y.action.get(r, k * h.y.dim + c)));
      mat.push_back(row);
    }
    act[h.e.names[k]] = mat;
  }
  j["Y"]["action"] = act;
  json p;
  if (h.p.regular) {
    p["kind"] = "regular";
    json xi = json::array();
    for (const auto& x : h.p.xi) xi.push_back(xelement_to_json(x, h.x->algebra));
    p["xi"] = xi;
  } else if (h.p.m_dim > 0) {
    p["kind"] = "finite";
    json imgs = json::array();
    for (const auto& row : h.p.images) {
      json r = json::array();
      for (const auto& x : row) r.push_back(xelement_to_json(x, h.x->algebra));
      imgs.push_back(r);
    }
    p["images"] = imgs;
  } else {
    p["kind"] = "none";
  }
  j["P"] = p;
  return j;
}

TriangularModule tri_module_from_json(const json& j, const std::string& path) {
  TriangularModule h;
  h.a_serial_cyclic = true;
  h.x = presentation_from_json(need(j, "X", path), child(path, "X"));
  const json& e = need(j, "E", path);
  FiniteCoalgebra ec = coalgebra_from_json(e, child(path, "E"));
  h.e = ec;
  FiniteAlgebra b = dual_algebra(ec);
  const json& yj = need(j, "Y", path);
  int dy = need_int(yj, "dim", child(path, "Y"));
  Matrix action(ec.field, dy, b.dim() * dy);
  const json& act = need(yj, "action", child(path, "Y"));
  for (auto it = act.begin(); it != act.end(); ++it) {
    std::string p = child(child(child(path, "Y"), "action"), it.key());
    int k = -1;
    for (int i = 0; i < b.dim(); ++i)
      if (b.names[i] == it.key() || ec.names[i] == it.key()) k = i;
    if (k < 0) throw io_error("unknown dual basis element '" + it.key() + "'", p);
    const json& mat = it.value();
    if (!mat.is_array() || static_cast<int>(mat.size()) != dy) throw io_error("action matrix must be dim x dim", p);
    for (int r = 0; r < dy; ++r)
      for (int c = 0; c < dy; ++c)
        action.set(r, k * dy + c, scalar_from_json(mat.at(r).at(c), ec.field, at(at(p, r), c)));
  }
  h.y = FiniteModule{b, Side::left, dy, action};
  const json& p = need(j, "P", path);
  std::string kind = need_string(p, "kind", child(path, "P"));
  if (kind == "regular") {
    h.p.regular = true;
    size_t idx = 0;
    for (const auto& x : need(p, "xi", child(path, "P")))
      h.p.xi.push_back(xelement_from_json(x, *h.x, at(child(child(path, "P"), "xi"), idx++)));
    if (static_cast<int>(h.p.xi.size()) != dy)
      throw io_error("'xi' must have one element per Y basis vector", child(path, "P"));
  } else if (kind == "finite") {
    const json& imgs = need(p, "images", child(path, "P"));
    h.p.m_dim = static_cast<int>(imgs.size());
    size_t kidx = 0;
    for (const auto& row : imgs) {
      std::string rp = at(child(child(path, "P"), "images"), kidx++);
      if (!row.is_array() || static_cast<int>(row.size()) != dy)
        throw io_error("each image row must have one element per Y basis vector", rp);
      std::vector<XElement> r;
      size_t idx = 0;
      for (const auto& x : row) r.push_back(xelement_from_json(x, *h.x, at(rp, idx++)));
      h.p.images.push_back(r);
    }
  } else if (kind != "none") {
    throw io_error("P kind must be 'none', 'finite' or 'regular'", child(path, "P"));
  }
  return h;
}

json artinian_to_json(const ArtinianQuery& q) {
  json j;
  j["type"] = "artinian-query";
  j["schema"] = 1;
  auto desc = [](const CoalgebraDesc& d) {
    json out;
    if (d.finite) {
      out["kind"] = "coalgebra";
      out["coalgebra"] = coalgebra_to_json(*d.finite);
    } else if (d.spec) {
      out["kind"] = "quiver-spec";
      out["spec"] = spec_to_json(*d.spec);
    }
    return out;
  };
  j["D"] = desc(q.d);
  j["E"] = desc(q.e);
  json m;
  if (q.m.regular_left) {
    m["kind"] = "regular-left";
  } else if (q.m.finite) {
    m["kind"] = "bicomodule";
    m["D"] = coalgebra_to_json(q.m.finite->left_coalgebra);
    m["E"] = coalgebra_to_json(q.m.finite->right_coalgebra);
    m["value"] = bicomodule_to_json(*q.m.finite);
  }
  j["M"] = m;
  return j;
}

ArtinianQuery artinian_from_json(const json& j, const std::string& path) {
  ArtinianQuery q;
  auto desc = [&](const json& dj, const std::string& p) {
    CoalgebraDesc d;
    std::string kind = need_string(dj, "kind", p);
    if (kind == "coalgebra")
      d.finite = coalgebra_from_json(need(dj, "coalgebra", p), child(p, "coalgebra"));
    else if (kind == "quiver-spec")
      d.spec = spec_from_json(need(dj, "spec", p), child(p, "spec"));
    else
      throw io_error("corner kind must be 'coalgebra' or 'quiver-spec'", p);
    return d;
  };
  q.d = desc(need(j, "D", path), child(path, "D"));
  q.e = desc(need(j, "E", path), child(path, "E"));
  const json& mj = need(j, "M", path);
  std::string kind = need_string(mj, "kind", child(path, "M"));
  if (kind == "regular-left") {
    q.m.regular_left = true;
  } else if (kind == "bicomodule") {
    FiniteCoalgebra d = coalgebra_from_json(need(mj, "D", child(path, "M")), child(child(path, "M"), "D"));
    FiniteCoalgebra e = coalgebra_from_json(need(mj, "E", child(path, "M")), child(child(path, "M"), "E"));
    q.m.finite = bicomodule_from_json(need(mj, "value", child(path, "M")), d, e, child(child(path, "M"), "value"));
  } else {
    throw io_error("M kind must be 'regular-left' or 'bicomodule'", child(path, "M"));
  }
  return q;
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw io_error(std::string("malformed JSON: ") + e.what(), "$");
  }
  if (!j.is_object()) throw io_error("document must be a JSON object", "$");
  Document doc;
  doc.type = need_string(j, "type", "$");
  if (!j.contains("schema") || !j.at("schema").is_number_integer() || j.at("schema").get<int>() != 1)
    throw io_error("unsupported or missing 'schema' (expected 1)", "$");
  if (doc.type == "coalgebra") {
    doc.coalgebra = coalgebra_from_json(j, "$");
  } else if (doc.type == "quiver-spec") {
    doc.spec = spec_from_json(j, "$");
  } else if (doc.type == "context") {
    doc.context = context_from_json(j, "$");
  } else if (doc.type == "triangular") {
    doc.triangular = triangular_from_json(j, "$");
  } else if (doc.type == "module-presentation") {
    doc.presentation = presentation_from_json(j, "$");
  } else if (doc.type == "triangular-module") {
    doc.tri_module = tri_module_from_json(j, "$");
  } else if (doc.type == "artinian-query") {
    doc.artinian = artinian_from_json(j, "$");
  } else if (doc.type == "functional") {
    doc.functional_field = field_from_json(need(j, "field", "$"), "$.field");
    std::vector<std::pair<std::string, Scalar>> vals;
    for (auto it = need(j, "values", "$").begin(); it != need(j, "values", "$").end(); ++it)
      vals.push_back({it.key(), scalar_from_json(it.value(), *doc.functional_field, child("$.values", it.key()))});
    doc.functional = vals;
  } else if (doc.type == "split") {
    std::vector<std::string> x, y;
    for (const auto& v : need(j, "X", "$")) x.push_back(v.get<std::string>());
    for (const auto& v : need(j, "Y", "$")) y.push_back(v.get<std::string>());
    doc.split = {x, y};
  } else {
    throw io_error("unknown document type '" + doc.type + "'", "$.type");
  }
  return doc;
}

json print_document(const Document& doc) {
  if (doc.coalgebra) return coalgebra_to_json(*doc.coalgebra);
  if (doc.spec) return spec_to_json(*doc.spec);
  if (doc.context) return context_to_json(*doc.context);
  if (doc.triangular) return triangular_to_json(*doc.triangular);
  if (doc.presentation) return presentation_to_json(*doc.presentation);
  if (doc.tri_module) return tri_module_to_json(*doc.tri_module);
  if (doc.artinian) return artinian_to_json(*doc.artinian);
  if (doc.functional) {
    json j;
    j["type"] = "functional";
    j["schema"] = 1;
    j["field"] = field_to_json(*doc.functional_field);
    json vals = json::object();
    for (const auto& [k, v] : *doc.functional) vals[k] = scalar_to_json(v);
    j["values"] = vals;
    return j;
  }
  if (doc.split) {
    json j;
    j["type"] = "split";
    j["schema"] = 1;
    j["X"] = doc.split->first;
    j["Y"] = doc.split->second;
    return j;
  }
  throw io_error("empty document", "$");
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace io
}  // namespace comat
