#include "comat/quiver.hpp"

#include <algorithm>
#include <set>

namespace comat {

int Quiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string& label) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

int path_source(const Quiver& q, const Path& p) { return p.start; }

int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.start : q.arrows[p.arrows.back()].tgt;
}

bool path_composable(const Quiver& q, const Path& p) {
  int at = p.start;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
    if (q.arrows[a].src != at) return false;
    at = q.arrows[a].tgt;
  }
  return true;
}

Path subpath(const Quiver& q, const Path& p, int from, int len) {
  Path out;
  out.start = from == 0 ? p.start : q.arrows[p.arrows[from - 1]].tgt;
  out.arrows.assign(p.arrows.begin() + from, p.arrows.begin() + from + len);
  return out;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.trivial()) return q.vertices[p.start];
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "*" : "") + q.arrows[p.arrows[i]].label;
  return s;
}

SpecReport validate_spec(const MonomialSpec& s) {
  SpecReport rep;
  auto flag = [&](const std::string& rule, const std::string& witness) {
    rep.valid = false;
    rep.violations.push_back({rule, witness});
  };
  const Quiver& q = s.quiver;
  {
    std::set<std::string> names(q.vertices.begin(), q.vertices.end());
    if (names.size() != q.vertices.size()) flag("unique-vertex-names", "");
    std::set<std::string> labels;
    for (const Arrow& a : q.arrows) {
      if (!labels.insert(a.label).second) flag("unique-arrow-labels", a.label);
      if (a.src < 0 || a.src >= static_cast<int>(q.vertices.size()) || a.tgt < 0 ||
          a.tgt >= static_cast<int>(q.vertices.size()))
        flag("arrow-endpoints-exist", a.label);
    }
  }
  std::vector<std::set<int>> cycle_vertices;
  for (size_t k = 0; k < s.cycles.size(); ++k) {
    const auto& cyc = s.cycles[k];
    std::string cname = "cycle#" + std::to_string(k);
    if (cyc.empty()) { flag("cycle-nonempty", cname); continue; }
    std::set<int> verts;
    bool ok = true;
    for (size_t i = 0; i < cyc.size(); ++i) {
      const Arrow& a = q.arrows[cyc[i]];
      const Arrow& b = q.arrows[cyc[(i + 1) % cyc.size()]];
      if (a.tgt != b.src) { flag("cycle-composable-closed", cname); ok = false; break; }
      if (!verts.insert(a.src).second) { flag("cycle-simple", cname); ok = false; break; }
    }
    if (!ok) continue;
    for (size_t j = 0; j < cycle_vertices.size(); ++j)
      for (int v : verts)
        if (cycle_vertices[j].count(v))
          flag("cycles-vertex-disjoint", q.vertices[v]);
    cycle_vertices.push_back(verts);
  }
  std::set<Path> extra_set;
  for (const Path& p : s.extra) {
    if (!path_composable(q, p)) { flag("extra-composable", path_name(q, p)); continue; }
    if (p.trivial()) flag("extra-nontrivial", path_name(q, p));
    if (path_on_cycle(s, p)) flag("extra-not-cycle-subpath", path_name(q, p));
    if (!extra_set.insert(p).second) flag("extra-distinct", path_name(q, p));
  }
  // subpath closure of the basis
  for (const Path& p : s.extra) {
    if (!path_composable(q, p)) continue;
    for (int from = 0; from < p.length(); ++from)
      for (int len = 1; from + len <= p.length(); ++len) {
        Path sp = subpath(q, p, from, len);
        if (sp == p) continue;
        if (!path_on_cycle(s, sp) && !extra_set.count(sp))
          flag("basis-subpath-closed", path_name(q, sp));
      }
  }
  return rep;
}

int cycle_at_vertex(const MonomialSpec& s, int vertex) {
  for (size_t k = 0; k < s.cycles.size(); ++k)
    for (int a : s.cycles[k])
      if (s.quiver.arrows[a].src == vertex) return static_cast<int>(k);
  return -1;
}

bool path_on_cycle(const MonomialSpec& s, const Path& p) {
  if (p.trivial()) return cycle_at_vertex(s, p.start) >= 0;
  int k = cycle_at_vertex(s, p.start);
  if (k < 0) return false;
  const auto& cyc = s.cycles[k];
  const int L = static_cast<int>(cyc.size());
  int pos = -1;
  for (int i = 0; i < L; ++i)
    if (s.quiver.arrows[cyc[i]].src == p.start) pos = i;
  for (int i = 0; i < p.length(); ++i) {
    if (p.arrows[i] != cyc[(pos + i) % L]) return false;
  }
  return true;
}

std::vector<Path> basis_paths(const MonomialSpec& s, int maxlen) {
  std::vector<Path> out;
  for (int v = 0; v < static_cast<int>(s.quiver.vertices.size()); ++v)
    out.push_back(Path{v, {}});
  for (const auto& cyc : s.cycles) {
    const int L = static_cast<int>(cyc.size());
    for (int o = 0; o < L; ++o)
      for (int len = 1; len <= maxlen; ++len) {
        Path p;
        p.start = s.quiver.arrows[cyc[o]].src;
        for (int i = 0; i < len; ++i) p.arrows.push_back(cyc[(o + i) % L]);
        out.push_back(p);
      }
  }
  for (const Path& p : s.extra)
    if (p.length() <= maxlen) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.start != b.start) return a.start < b.start;
    return a.arrows < b.arrows;
  });
  return out;
}

FiniteCoalgebra instantiate(const MonomialSpec& s, int degree) {
  std::vector<Path> basis = basis_paths(s, degree);
  const int n = static_cast<int>(basis.size());
  std::map<Path, int> index;
  for (int i = 0; i < n; ++i) index[basis[i]] = i;
  FiniteCoalgebra c;
  c.field = s.field;
  c.delta = Matrix(s.field, n * n, n);
  c.counit = Matrix(s.field, 1, n);
  std::vector<int> grading(n);
  for (int k = 0; k < n; ++k) {
    const Path& p = basis[k];
    c.names.push_back(path_name(s.quiver, p));
    grading[k] = p.length();
    if (p.trivial()) c.counit.set(0, k, Scalar::one(s.field));
    for (int cut = 0; cut <= p.length(); ++cut) {
      Path pre = subpath(s.quiver, p, 0, cut);
      Path suf = subpath(s.quiver, p, cut, p.length() - cut);
      auto i = index.find(pre), j = index.find(suf);
      if (i == index.end() || j == index.end())
        throw algebra_error("instantiate: basis is not subpath-closed at " + path_name(s.quiver, p));
      c.delta.add_to(i->second * n + j->second, k, Scalar::one(s.field));
    }
  }
  c.grading = grading;
  return c;
}

namespace {

void summarize_cycles(ExtQuiver& e) {
  const int n = static_cast<int>(e.vertices.size());
  std::vector<int> out_mult(n, 0), in_mult(n, 0);
  for (const auto& [st, m] : e.arrows) {
    out_mult[st.first] += m;
    in_mult[st.second] += m;
  }
  e.successor.assign(n, -1);
  for (const auto& [st, m] : e.arrows)
    if (m == 1 && out_mult[st.first] == 1) e.successor[st.first] = st.second;
  e.disjoint_cycle_union = n > 0;
  for (int v = 0; v < n; ++v)
    if (out_mult[v] != 1 || in_mult[v] != 1) e.disjoint_cycle_union = false;
  if (e.disjoint_cycle_union) {
    std::vector<bool> seen(n, false);
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      int len = 0, at = v;
      while (!seen[at]) {
        seen[at] = true;
        ++len;
        at = e.successor[at];
        if (at < 0) { e.disjoint_cycle_union = false; break; }
      }
      if (!e.disjoint_cycle_union) break;
      e.cycle_lengths.push_back(len);
    }
    std::sort(e.cycle_lengths.begin(), e.cycle_lengths.end());
  }
  if (!e.disjoint_cycle_union) e.cycle_lengths.clear();
}

}  // namespace

ExtQuiver ext_quiver(const FiniteCoalgebra& c) {
  Field f = c.field;
  const int n = c.dim();
  Matrix c0 = coradical(c);
  // find the grouplikes: each simple summand of C_0 must be one-dimensional
  Comodule reg = regular_comodule(c, Side::left);
  std::vector<Matrix> spaces = decompose_semisimple(reg, c0);
  std::vector<Matrix> grouplikes;
  std::vector<std::string> labels;
  for (const Matrix& sp : spaces) {
    if (sp.cols() != 1)
      throw algebra_error("ext_quiver: coalgebra is not pointed (simple of dimension " +
                          std::to_string(sp.cols()) + ")");
    Matrix v = sp.col(0);
    // normalize so Delta g = g (x) g
    Matrix dv = c.delta * v;
    Matrix vv = v.tensor(v);
    Scalar lambda = Scalar::zero(f);
    for (const auto& [ij, val] : vv.entries()) {
      lambda = dv.get(ij.first, 0) / val;
      break;
    }
    if (lambda.is_zero() || !(c.delta * v.scaled(lambda) == v.scaled(lambda).tensor(v.scaled(lambda))))
      throw algebra_error("ext_quiver: coradical constituent is not grouplike");
    Matrix g = v.scaled(lambda);
    grouplikes.push_back(g);
    int hits = 0, idx = -1;
    for (int i = 0; i < n; ++i)
      if (!g.get(i, 0).is_zero()) { ++hits; idx = i; }
    labels.push_back(hits == 1 ? c.names[idx] : "g" + std::to_string(labels.size()));
  }
  const int k = static_cast<int>(grouplikes.size());
  // C_1 from the Loewy series of the regular comodule
  std::vector<Matrix> lw = loewy(reg);
  Matrix c1 = lw.size() >= 2 ? lw[1] : lw[0];
  Matrix c0c0 = c0.tensor(c0);
  ExtQuiver e;
  e.vertices = labels;
  int total = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Matrix gi_id = grouplikes[i].tensor(Matrix::identity(f, n));
      Matrix id_gj = Matrix::identity(f, n).tensor(grouplikes[j]);
      Matrix t = c.delta - gi_id - id_gj;
      Matrix v = span_preimage(t * c1, c0c0);  // in C_1 coordinates
      int mult = v.cols() - span_intersect(c1 * v, c0).cols();
      if (mult > 0) e.arrows[{i, j}] = mult;
      total += mult;
    }
  if (total != c1.cols() - c0.cols())
    throw algebra_error("ext_quiver: skew-primitive blocks do not fill C_1/C_0");
  summarize_cycles(e);
  return e;
}

ExtQuiver ext_quiver_spec(const MonomialSpec& s) {
  ExtQuiver e;
  e.vertices = s.quiver.vertices;
  for (const Path& p : basis_paths(s, 1))
    if (p.length() == 1) {
      const Arrow& a = s.quiver.arrows[p.arrows[0]];
      e.arrows[{a.src, a.tgt}]++;
    }
  summarize_cycles(e);
  return e;
}

std::vector<int> infinite_vertices(const MonomialSpec& s) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(s.quiver.vertices.size()); ++v)
    if (cycle_at_vertex(s, v) >= 0) out.push_back(v);
  return out;
}

SerialReport is_serial(const MonomialSpec& s, Side side) {
  SerialReport rep;
  int maxlen = 1;
  for (const Path& p : s.extra) maxlen = std::max(maxlen, p.length());
  std::vector<Path> basis = basis_paths(s, maxlen);
  const int nv = static_cast<int>(s.quiver.vertices.size());
  for (int v = 0; v < nv && rep.serial; ++v) {
    for (int len = 1; len <= maxlen && rep.serial; ++len) {
      std::vector<Path> here;
      for (const Path& p : basis) {
        if (p.length() != len) continue;
        int anchor = side == Side::left ? path_target(s.quiver, p) : path_source(s.quiver, p);
        if (anchor == v) here.push_back(p);
      }
      if (here.size() > 1) {
        rep.serial = false;
        rep.witness = SerialWitness{v, here[0], here[1]};
        rep.certificate = "two basis paths of length " + std::to_string(len) +
                          (side == Side::left ? " end at " : " start at ") + s.quiver.vertices[v] +
                          ": " + path_name(s.quiver, here[0]) + ", " + path_name(s.quiver, here[1]);
      }
    }
  }
  if (rep.serial)
    rep.certificate = std::string("at most one basis path of each length ") +
                      (side == Side::left ? "ends" : "starts") +
                      " at every vertex; beyond the longest extra path only cycle paths remain";
  return rep;
}

MonomialSpec opposite(const MonomialSpec& s) {
  MonomialSpec out;
  out.field = s.field;
  out.quiver.vertices = s.quiver.vertices;
  for (const Arrow& a : s.quiver.arrows) out.quiver.arrows.push_back({a.label, a.tgt, a.src});
  for (const auto& cyc : s.cycles) {
    std::vector<int> rev(cyc.rbegin(), cyc.rend());
    out.cycles.push_back(rev);
  }
  for (const Path& p : s.extra) {
    Path r;
    r.start = path_target(s.quiver, p);
    r.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    out.extra.push_back(r);
  }
  return out;
}

std::string to_dot(const Quiver& q) {
  std::string s = "digraph quiver {\n";
  for (const auto& v : q.vertices) s += "  \"" + v + "\";\n";
  for (const auto& a : q.arrows)
    s += "  \"" + q.vertices[a.src] + "\" -> \"" + q.vertices[a.tgt] + "\" [label=\"" + a.label + "\"];\n";
  s += "}\n";
  return s;
}

std::string to_dot(const ExtQuiver& e) {
  std::string s = "digraph ext_quiver {\n";
  for (const auto& v : e.vertices) s += "  \"" + v + "\";\n";
  for (const auto& [st, m] : e.arrows)
    s += "  \"" + e.vertices[st.first] + "\" -> \"" + e.vertices[st.second] + "\" [label=\"" +
         std::to_string(m) + "\"];\n";
  s += "}\n";
  return s;
}

}  // namespace comat
