#include "comat/run.hpp"

#include <chrono>
#include <future>

namespace comat {
namespace run {

using io::json;

namespace {

json path_json(const Quiver& q, const Path& p) { return json(path_name(q, p)); }

json verify_one(const io::Document& doc, const Options&) {
  json out;
  if (doc.coalgebra) {
    CoalgebraReport rep = verify_coalgebra(*doc.coalgebra);
    out["kind"] = "coalgebra";
    out["coassociative"] = rep.coassociative;
    out["counital"] = rep.counital;
    out["ok"] = rep.ok();
    if (rep.witness) out["witness"] = *rep.witness;
  } else if (doc.context) {
    ContextReport rep = check_context(*doc.context);
    out["kind"] = "context";
    out["ok"] = rep.ok;
    out["failures"] = rep.failures;
    if (!rep.failing_element.empty()) out["failing_element"] = rep.failing_element;
    FiniteCoalgebra assembled = assemble_generalized_comatrix(*doc.context);
    CoalgebraReport arep = verify_coalgebra(assembled);
    out["assembled_coassociative"] = arep.coassociative;
    out["assembled_counital"] = arep.counital;
  } else if (doc.triangular) {
    BicomoduleReport rep = verify_bicomodule(doc.triangular->m);
    out["kind"] = "triangular";
    out["bicomodule_ok"] = rep.ok();
    if (!rep.ok()) out["witness"] = rep.witness;
    if (rep.ok()) {
      FiniteCoalgebra c = triangular_comatrix(*doc.triangular);
      out["assembled_ok"] = verify_coalgebra(c).ok();
      out["dim"] = c.dim();
    }
  } else if (doc.spec) {
    SpecReport rep = validate_spec(*doc.spec);
    out["kind"] = "quiver-spec";
    out["ok"] = rep.valid;
    json v = json::array();
    for (const auto& viol : rep.violations) {
      json vj;
      vj["rule"] = viol.rule;
      vj["witness"] = viol.witness;
      v.push_back(vj);
    }
    out["violations"] = v;
  } else if (doc.presentation) {
    validate_presentation(*doc.presentation);
    out["kind"] = "module-presentation";
    out["ok"] = true;
  } else if (doc.tri_module) {
    verify_triangular_module(*doc.tri_module, 12);
    out["kind"] = "triangular-module";
    out["ok"] = true;
  } else {
    throw io::io_error("verify: unsupported document type '" + doc.type + "'", "$");
  }
  return out;
}

json dual_one(const io::Document& doc, const Options&) {
  if (!doc.coalgebra) throw io::io_error("dual: expected a coalgebra document", "$");
  FiniteAlgebra a = dual_algebra(*doc.coalgebra);
  AlgebraReport rep = verify_algebra(a);
  json out;
  out["names"] = a.names;
  out["associative"] = rep.associative;
  out["unital"] = rep.unital;
  json unit = json::object();
  for (int i = 0; i < a.dim(); ++i)
    if (!a.unit.get(i, 0).is_zero()) unit[a.names[i]] = io::scalar_to_json(a.unit.get(i, 0));
  out["unit"] = unit;
  json products = json::array();
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      json terms = json::array();
      for (const auto& [rk, v] : a.mul.entries()) {
        if (rk.second != i * n + j) continue;
        json t;
        t["on"] = a.names[rk.first];
        t["coeff"] = io::scalar_to_json(v);
        terms.push_back(t);
      }
      if (!terms.empty()) {
        json p;
        p["left"] = a.names[i];
        p["right"] = a.names[j];
        p["terms"] = terms;
        products.push_back(p);
      }
    }
  out["products"] = products;
  return out;
}

json ext_quiver_json(const ExtQuiver& e) {
  json out;
  out["vertices"] = e.vertices;
  json arrows = json::array();
  for (const auto& [st, m] : e.arrows) {
    json a;
    a["src"] = e.vertices[st.first];
    a["tgt"] = e.vertices[st.second];
    a["mult"] = m;
    arrows.push_back(a);
  }
  out["arrows"] = arrows;
  json succ = json::object();
  for (size_t v = 0; v < e.successor.size(); ++v)
    if (e.successor[v] >= 0) succ[e.vertices[v]] = e.vertices[e.successor[v]];
  out["successor"] = succ;
  out["disjoint_cycle_union"] = e.disjoint_cycle_union;
  out["cycle_lengths"] = e.cycle_lengths;
  return out;
}

json ext_one(const io::Document& doc, const Options& opts) {
  json out;
  ExtQuiver e;
  if (doc.spec) {
    e = ext_quiver_spec(*doc.spec);
    out = ext_quiver_json(e);
    if (opts.degree >= 1) {
      ExtQuiver ei = ext_quiver(instantiate(*doc.spec, opts.degree));
      out["instantiation_degree"] = opts.degree;
      out["instantiation_agrees"] = ei.arrows == e.arrows && ei.vertices.size() == e.vertices.size();
    }
  } else if (doc.coalgebra) {
    e = ext_quiver(*doc.coalgebra);
    out = ext_quiver_json(e);
  } else {
    throw io::io_error("ext-quiver: expected a quiver-spec or coalgebra document", "$");
  }
  if (opts.dot) out["dot"] = to_dot(e);
  return out;
}

json serial_side(const MonomialSpec& s, Side side) {
  SerialReport rep = is_serial(s, side);
  json out;
  out["serial"] = rep.serial;
  out["certificate"] = rep.certificate;
  if (rep.witness) {
    json w;
    w["vertex"] = s.quiver.vertices[rep.witness->vertex];
    w["first"] = path_json(s.quiver, rep.witness->first);
    w["second"] = path_json(s.quiver, rep.witness->second);
    out["witness"] = w;
  }
  return out;
}

void check_side(const std::string& side) {
  if (side != "left" && side != "right" && side != "both")
    throw io::io_error("--side must be left, right or both", "$");
}

json serial_one(const io::Document& doc, const Options& opts) {
  if (!doc.spec) throw io::io_error("serial: expected a quiver-spec document", "$");
  check_side(opts.side);
  json out;
  if (opts.side == "left" || opts.side == "both") out["left"] = serial_side(*doc.spec, Side::left);
  if (opts.side == "right" || opts.side == "both") out["right"] = serial_side(*doc.spec, Side::right);
  return out;
}

json splitting_side(const MonomialSpec& s, Side side, const Options& opts) {
  SplitDecision dec = side == Side::left ? decide_left_splitting(s) : decide_right_splitting(s);
  json out;
  out["verdict"] = verdict_name(dec.verdict);
  json ab;
  ab["a"] = dec.ab.a;
  ab["b"] = dec.ab.b;
  json witnesses = json::array();
  for (const Path& p : dec.ab.b_witnesses) witnesses.push_back(path_json(dec.decided_spec.quiver, p));
  ab["b_witnesses"] = witnesses;
  out["conditions"] = ab;
  out["checks"] = dec.checks;
  if (dec.certificate) {
    json cert;
    cert["d_vertices"] = dec.certificate->d_spec.quiver.vertices;
    cert["d_cycles"] = static_cast<int>(dec.certificate->d_spec.cycles.size());
    json mp = json::array(), ep = json::array();
    for (const Path& p : dec.certificate->m_paths) mp.push_back(path_json(dec.decided_spec.quiver, p));
    for (const Path& p : dec.certificate->e_paths) ep.push_back(path_json(dec.decided_spec.quiver, p));
    cert["m_paths"] = mp;
    cert["e_paths"] = ep;
    out["certificate"] = cert;
    if (opts.degree >= 1)
      out["certificate_verified_at_degree"] =
          json::array({opts.degree, verify_split_certificate(dec, opts.degree)});
  }
  if (dec.violation) {
    json v;
    v["kind"] = dec.violation->kind;
    v["detail"] = dec.violation->detail;
    if (dec.violation->vertex >= 0) v["vertex"] = dec.decided_spec.quiver.vertices[dec.violation->vertex];
    if (dec.violation->witness_path) v["witness_path"] = path_json(s.quiver, *dec.violation->witness_path);
    if (dec.violation->has_growing_family) {
      v["family_dimension_formula"] = "N+1";
      json dims = json::array();
      for (int n = 0; n <= 5; ++n) dims.push_back(violation_family_dim(*dec.violation, n));
      v["family_dimensions"] = dims;
    }
    out["violation"] = v;
  }
  return out;
}

json splitting_one(const io::Document& doc, const Options& opts) {
  if (!doc.spec) throw io::io_error("splitting: expected a quiver-spec document", "$");
  check_side(opts.side);
  json out;
  if (opts.side == "left" || opts.side == "both")
    out["left"] = splitting_side(*doc.spec, Side::left, opts);
  if (opts.side == "right" || opts.side == "both")
    out["right"] = splitting_side(*doc.spec, Side::right, opts);
  return out;
}

json rat_part_json(const RatPartResult& rat) {
  json out;
  out["status"] = rat.status == RatStatus::ok ? "ok" : "insufficient-precision";
  out["torsion_valuations"] = rat.torsion_valuations;
  out["free_rank"] = rat.free_rank;
  out["watermark"] = rat.watermark;
  out["residual_certified_zero"] = rat.residual_certified_zero;
  json snf = json::array();
  for (int v : rat.snf.valuations) snf.push_back(v == val_infinity ? json("inf") : json(v));
  out["snf_valuations"] = snf;
  out["report"] = rat.report;
  return out;
}

json rat_one(const io::Document& doc, const Options& opts, int* status_code) {
  json out;
  if (doc.presentation) {
    RatPartResult rat = rat_part_fg(*doc.presentation, opts.precision, opts.slack);
    out = rat_part_json(rat);
    if (rat.status != RatStatus::ok) *status_code = std::max(*status_code, 2);
    return out;
  }
  if (doc.tri_module) {
    const TriangularModule& h = *doc.tri_module;
    int bound = opts.bound > 0 ? opts.bound : default_rat_bound(h);
    RatTriangularResult rt = rat_triangular(h, opts.precision, bound, opts.slack);
    out["bound"] = bound;
    if (rt.x_all) {
      out["x"] = json::object({{"all", true}});
    } else if (rt.x_torsion) {
      out["x"] = rat_part_json(*rt.x_torsion);
    }
    out["y_rat_dim"] = rt.y_rat.cols();
    json basis = json::array();
    for (int c = 0; c < rt.y_rat.cols(); ++c) {
      json col = json::array();
      for (int r = 0; r < rt.y_rat.rows(); ++r) col.push_back(io::scalar_to_json(rt.y_rat.get(r, c)));
      basis.push_back(col);
    }
    out["y_rat_basis"] = basis;
    out["status"] = rt.status == RatStatus::ok ? "ok" : "insufficient-precision";
    if (rt.status != RatStatus::ok) *status_code = std::max(*status_code, 2);
    if (opts.oracle) {
      std::string detail;
      bool agree = rat_routes_agree(h, opts.precision, bound, &detail);
      out["oracle_agrees"] = agree;
      out["oracle_detail"] = detail;
    }
    return out;
  }
  throw io::io_error("rat: expected a module-presentation or triangular-module document", "$");
}

json decompose_one(const io::Document& doc, const Options& opts) {
  if (!doc.coalgebra) throw io::io_error("decompose: expected a coalgebra document", "$");
  if (opts.aux_text.empty())
    throw io::io_error("decompose: needs --idempotent <file> or --triangular <file>", "$");
  const FiniteCoalgebra& c = *doc.coalgebra;
  io::Document aux = io::parse_document(opts.aux_text);
  json out;
  if (aux.functional) {
    Matrix e(c.field, 1, c.dim());
    for (const auto& [name, v] : *aux.functional) {
      int i = -1;
      for (int k = 0; k < c.dim(); ++k)
        if (c.names[k] == name) i = k;
      if (i < 0) throw io::io_error("functional names unknown basis element '" + name + "'", "$.values");
      e.set(0, i, v);
    }
    IdempotentDecomposition dec = idempotent_decompose(c, e);
    out["kind"] = "idempotent";
    out["block_dims"] = json::array({dec.block_ee.cols(), dec.block_fe.cols(), dec.block_ef.cols(),
                                     dec.block_ff.cols()});
    out["context_ok"] = check_context(dec.context).ok;
    out["assembled_dim"] = dec.assembled.dim();
    out["isomorphism_verified"] = true;  // idempotent_decompose throws otherwise
    return out;
  }
  if (aux.split) {
    auto pick = [&](const std::vector<std::string>& names) {
      Matrix b(c.field, c.dim(), static_cast<int>(names.size()));
      for (size_t j = 0; j < names.size(); ++j) {
        int i = -1;
        for (int k = 0; k < c.dim(); ++k)
          if (c.names[k] == names[j]) i = k;
        if (i < 0) throw io::io_error("split names unknown basis element '" + names[j] + "'", "$");
        b.set(i, static_cast<int>(j), Scalar::one(c.field));
      }
      return b;
    };
    TriangularDecomposeResult res =
        triangular_decompose(c, pick(aux.split->first), pick(aux.split->second));
    out["kind"] = "triangular";
    out["ok"] = res.ok;
    if (res.ok) {
      out["d_dim"] = res.data.d.dim();
      out["m_dim"] = res.data.m.dim;
      out["e_dim"] = res.data.e.dim();
    } else {
      out["hom_witness_count"] = static_cast<int>(res.hom_witness.size());
    }
    return out;
  }
  throw io::io_error("decompose: auxiliary document must be a functional or a split", "$");
}

json artinian_one(const io::Document& doc, const Options&) {
  if (!doc.artinian) throw io::io_error("artinian: expected an artinian-query document", "$");
  ArtinianResult res = is_left_artinian_triangular(*doc.artinian);
  json out;
  out["left"] = verdict_name(res.left);
  out["right"] = verdict_name(res.right);
  out["reasons"] = res.reasons;
  return out;
}

}  // namespace

io::json run_example(const std::string& label, int n) {
  using namespace examples;
  io::Document doc;
  if (label == "divided-power") {
    doc.coalgebra = divided_power(n);
  } else if (label == "divided-power-spec") {
    doc.spec = divided_power_spec();
  } else if (label == "example-4-2") {
    Example42 e = example_4_2(n);
    doc.triangular = e.data;
  } else if (label == "example-4-2-coalgebra") {
    doc.coalgebra = example_4_2(n).coalgebra;
  } else if (label == "example-4-2-spec") {
    doc.spec = example_4_2(n).spec;
  } else if (label == "example-sec2") {
    doc.coalgebra = example_sec2(n);
  } else if (label == "artinian-asymmetry") {
    doc.artinian = artinian_asymmetry();
  } else if (label == "artinian-symmetric") {
    doc.artinian = artinian_symmetric_variant();
  } else if (label == "cyclic-monomial") {
    doc.spec = cyclic_monomial(n);
  } else if (label == "example-4-6") {
    doc.spec = example_4_6_instance();
  } else {
    throw io::io_error("unknown example label '" + label + "'", "$");
  }
  return io::print_document(doc);
}

Result run_command(const std::string& command, const Inputs& inputs, const Options& opts) {
  Result res;
  res.report["schema"] = 1;
  res.report["command"] = command;

  if (command == "example") {
    res.report = run_example(opts.aux_text, opts.n);  // aux_text carries the label
    return res;
  }

  auto handle = [&](const std::pair<std::string, std::string>& input) -> std::pair<json, int> {
    json out;
    int code = 0;
    out["input"] = input.first;
    auto started = std::chrono::steady_clock::now();
    try {
      io::Document doc = io::parse_document(input.second);
      if (command == "verify")
        out.update(verify_one(doc, opts));
      else if (command == "dual")
        out.update(dual_one(doc, opts));
      else if (command == "ext-quiver")
        out.update(ext_one(doc, opts));
      else if (command == "serial")
        out.update(serial_one(doc, opts));
      else if (command == "splitting")
        out.update(splitting_one(doc, opts));
      else if (command == "rat")
        out.update(rat_one(doc, opts, &code));
      else if (command == "decompose")
        out.update(decompose_one(doc, opts));
      else if (command == "artinian")
        out.update(artinian_one(doc, opts));
      else
        throw io::io_error("unknown command '" + command + "'", "$");
    } catch (const io::io_error& e) {
      out["error"] = e.what();
      out["error_path"] = e.path;
      code = 1;
    } catch (const algebra_error& e) {
      out["error"] = e.what();
      code = 1;
    }
    if (opts.timing) {
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      out["timing_us"] = us;
    }
    return {out, code};
  };

  std::vector<std::pair<json, int>> results(inputs.size());
  if (opts.jobs > 1 && inputs.size() > 1) {
    std::vector<std::future<std::pair<json, int>>> futs;
    for (const auto& in : inputs)
      futs.push_back(std::async(std::launch::async, handle, in));
    for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < inputs.size(); ++i) results[i] = handle(inputs[i]);
  }
  json arr = json::array();
  for (auto& [j, code] : results) {
    arr.push_back(j);
    if (code == 1)
      res.exit_code = 1;
    else if (code == 2 && res.exit_code == 0)
      res.exit_code = 2;
  }
  res.report["results"] = arr;
  return res;
}

}  // namespace run
}  // namespace comat
