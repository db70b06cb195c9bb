#include "comat/run.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const comat::io::json& report, const std::string& out_path) {
  std::string text = comat::io::dump_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with comatrix coalgebras, monomial specs and Rat-splitting"};
  app.require_subcommand(1);

  comat::run::Options opts;
  std::vector<std::string> files;
  std::string out_path, idempotent_file, split_file, label;

  auto add_common = [&](CLI::App* cmd, bool wants_files = true) {
    if (wants_files) cmd->add_option("files", files, "input JSON documents")->required();
    cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    cmd->add_option("--precision", opts.precision, "series watermark (default 16)");
    cmd->add_option("--bound", opts.bound, "rank-stabilization bound override");
    cmd->add_option("--slack", opts.slack, "certificate margin (default 4)");
    cmd->add_option("--jobs", opts.jobs, "process independent input files in parallel");
    cmd->add_flag("--timing", opts.timing, "include per-input timing in the report");
    return cmd;
  };

  auto* verify = add_common(app.add_subcommand("verify", "check coalgebra/comodule/context axioms"));
  auto* dual = add_common(app.add_subcommand("dual", "convolution algebra of a coalgebra"));
  auto* ext = add_common(app.add_subcommand("ext-quiver", "Ext-quiver of a monomial spec or pointed coalgebra"));
  ext->add_option("--degree", opts.degree, "also cross-check against an instantiation at this degree");
  ext->add_flag("--dot", opts.dot, "include DOT output");
  auto* serial = add_common(app.add_subcommand("serial", "serial-ness of a monomial spec"));
  serial->add_option("--side", opts.side, "left | right | both (default both)");
  auto* splitting = add_common(app.add_subcommand("splitting", "decide the finite Rat-splitting property"));
  splitting->add_option("--side", opts.side, "left | right | both (default both)");
  splitting->add_option("--degree", opts.degree, "verify a yes-certificate by reassembly at this degree");
  auto* rat = add_common(app.add_subcommand("rat", "rational/torsion part of a finitely generated module"));
  rat->add_flag("--oracle", opts.oracle, "cross-check against the brute-force annihilation oracle");
  auto* decompose = add_common(app.add_subcommand("decompose", "idempotent or triangular decomposition"));
  decompose->add_option("--idempotent", idempotent_file, "functional document (convolution idempotent)");
  decompose->add_option("--triangular", split_file, "split document with X and Y basis names");
  auto* artinian = add_common(app.add_subcommand("artinian", "triangular Artinian criterion"));
  auto* example = app.add_subcommand("example", "emit a named example as a JSON document");
  example->add_option("label", label, "example label")->required();
  example->add_option("--n", opts.n, "size parameter (default 3)");
  example->add_option("--out", out_path, "write the document to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    std::string command;
    for (auto* cmd : {verify, dual, ext, serial, splitting, rat, decompose, artinian})
      if (cmd->parsed()) command = cmd->get_name();
    if (example->parsed()) {
      opts.aux_text = label;
      auto res = comat::run::run_command("example", {}, opts);
      emit(res.report, out_path);
      return res.exit_code;
    }
    if (decompose->parsed()) {
      if (idempotent_file.empty() == split_file.empty()) {
        std::cerr << "decompose: exactly one of --idempotent / --triangular is required\n";
        return 1;
      }
      opts.aux_text = read_file(idempotent_file.empty() ? split_file : idempotent_file);
    }
    comat::run::Inputs inputs;
    for (const auto& f : files) inputs.push_back({f, read_file(f)});
    auto res = comat::run::run_command(command, inputs, opts);
    emit(res.report, out_path);
    return res.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
