#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "confex/classify.hpp"
#include "confex/constructions.hpp"
#include "confex/containment.hpp"
#include "confex/decomposition.hpp"
#include "confex/extraction.hpp"
#include "confex/matrix.hpp"
#include "confex/patterns.hpp"
#include "confex/ramsey.hpp"
#include "confex/search.hpp"

using nlohmann::json;
using namespace confex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotContained = 3;
constexpr int kExitIncomplete = 4;

Mode parse_mode_flag(const std::string& s) {
  if (s == "config") return Mode::CONFIGURATION;
  return mode_from_string(s);
}

json pattern_json(const PatternSpec& spec) {
  json out;
  out["kind"] = to_string(spec.kind);
  out["t"] = spec.t;
  if (spec.kind == PatternKind::LITERAL) {
    out["amat"] = to_amat_string(*spec.literal);
  } else {
    out["ell"] = spec.ell;
    out["a"] = spec.a;
    out["b"] = spec.b;
  }
  return out;
}

json witness_json(const PatternSpec& spec, const ConfigWitness& w) {
  json out;
  out["pattern"] = pattern_json(spec);
  out["mode"] = to_string(w.mode);
  out["rows"] = w.row_map;
  out["cols"] = w.col_map;
  return out;
}

void write_report(const std::string& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot open " + path);
  out << report.dump(2) << "\n";
}

void emit_matrix(const AlphMatrix& M, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << to_amat_string(M);
  } else {
    std::ofstream out(out_path);
    if (!out) throw ArgumentError("cannot open " + out_path);
    write_amat(out, M);
  }
}

ForbiddenFamily family_from_flags(const std::vector<std::string>& exprs,
                                  unsigned r) {
  ForbiddenFamily fam;
  fam.alphabet = r;
  for (const std::string& expr : exprs)
    for (PatternSpec& spec : parse_pattern_list(expr))
      fam.members.push_back(std::move(spec));
  return fam;
}

json tree_json(const DecompositionTree& node) {
  json out;
  out["rows"] = node.matrix.rows();
  out["cols"] = node.matrix.cols();
  out["bound"] = node.bound;
  out["rowOffset"] = node.row_offset;
  json kids = json::array();
  for (unsigned c = 0; c < node.children.size(); ++c) {
    json kid = tree_json(node.children[c]);
    kid["childIndex"] = node.steps[node.child_step[c]].pivot_row;
    kids.push_back(std::move(kid));
  }
  out["children"] = std::move(kids);
  return out;
}

void print_tree(const DecompositionTree& node, unsigned indent) {
  std::cout << std::string(indent, ' ') << node.matrix.rows() << "x"
            << node.matrix.cols() << " bound=" << node.bound
            << " rowOffset=" << node.row_offset << "\n";
  for (const DecompositionTree& child : node.children)
    print_tree(child, indent + 2);
}

int run_gen(const std::string& pattern, const std::string& out_path) {
  emit_matrix(realize(parse_pattern(pattern)), out_path);
  return kExitOk;
}

int run_check(const std::string& pattern, const std::string& matrix_path,
              const std::string& mode_name, const std::string& json_path) {
  PatternSpec spec = parse_pattern(pattern);
  AlphMatrix A = read_amat_file(matrix_path);
  Mode mode = parse_mode_flag(mode_name);
  std::optional<ConfigWitness> w = contains(realize(spec), A, mode);

  json report;
  report["command"] = "check";
  report["status"] = w ? "ok" : "not_contained";
  report["contained"] = bool(w);
  if (w) report["witness"] = witness_json(spec, *w);
  if (!json_path.empty()) write_report(json_path, report);

  if (w) {
    std::cout << "contained rows=[";
    for (unsigned i = 0; i < w->row_map.size(); ++i)
      std::cout << (i ? " " : "") << w->row_map[i];
    std::cout << "] cols=[";
    for (unsigned j = 0; j < w->col_map.size(); ++j)
      std::cout << (j ? " " : "") << w->col_map[j];
    std::cout << "]\n";
    return kExitOk;
  }
  std::cout << "not contained\n";
  return kExitNotContained;
}

int run_forb(unsigned m, unsigned r, unsigned s,
             const std::vector<std::string>& forbid, bool forbmax,
             std::uint64_t max_nodes, double timeout,
             const std::string& json_path, const std::string& out_path) {
  ForbiddenFamily fam = family_from_flags(forbid, r);
  SearchCaps caps{max_nodes, timeout};
  SearchReport rep = forbmax ? forbmax_exact(m, r, fam, SimplicityBound(s), caps)
                             : forb_exact(m, r, fam, SimplicityBound(s), caps);

  json report;
  report["command"] = "forb";
  report["status"] = rep.complete ? "ok" : "incomplete";
  report["m"] = rep.m;
  report["r"] = rep.r;
  report["s"] = rep.s;
  report["value"] = rep.value;
  report["complete"] = rep.complete;
  report["nodesExplored"] = rep.nodes_explored;
  report["witnessAmat"] = to_amat_string(rep.witness);
  if (!json_path.empty()) write_report(json_path, report);

  std::cout << (rep.complete ? "value " : "lower bound ") << rep.value
            << " (nodes " << rep.nodes_explored << ")\n";
  if (!out_path.empty()) emit_matrix(rep.witness, out_path);
  return rep.complete ? kExitOk : kExitIncomplete;
}

int run_decompose(const std::string& matrix_path, unsigned s, bool tree,
                  const std::string& json_path) {
  AlphMatrix A = read_amat_file(matrix_path);
  json report;
  report["command"] = "decompose";
  report["status"] = "ok";
  if (tree) {
    DecompositionTree t = build_tree(A, SimplicityBound(s));
    report["status"] = t.complete ? "ok" : "incomplete";
    report["tree"] = tree_json(t);
    report["depth"] = t.stats.depth;
    report["nodeCount"] = t.stats.node_count;
    if (!json_path.empty()) write_report(json_path, report);
    std::cout << "depth " << t.stats.depth << " nodes " << t.stats.node_count
              << "\n";
    print_tree(t, 0);
    return t.complete ? kExitOk : kExitIncomplete;
  }
  std::vector<DecompositionStep> steps = chain(A, SimplicityBound(s));
  json step_list = json::array();
  for (const DecompositionStep& step : steps) {
    json j;
    j["pivotRow"] = step.pivot_row;
    j["cCols"] = step.C.cols();
    j["a1Cols"] = step.A1.cols();
    j["gSizes"] = step.g_sizes;
    step_list.push_back(std::move(j));
    std::cout << "pivot " << step.pivot_row << ": |C|=" << step.C.cols()
              << " |A1|=" << step.A1.cols() << "\n";
  }
  report["steps"] = std::move(step_list);
  if (!json_path.empty()) write_report(json_path, report);
  return kExitOk;
}

int run_ramsey(const std::vector<unsigned>& ks, const std::vector<unsigned>& u,
               const std::vector<unsigned>& v, const std::vector<unsigned>& bm,
               const std::string& json_path) {
  json report;
  report["command"] = "ramsey";
  report["status"] = "ok";
  if (!u.empty()) {
    BigCount val = u_value(u[0], u[1]);
    report["u"] = val.str();
    std::cout << val.str() << "\n";
  } else if (!v.empty()) {
    BigCount val = v_value(v[0], v[1], v[2]);
    report["v"] = val.str();
    std::cout << val.str() << "\n";
  } else if (!bm.empty()) {
    BoundReport b = bound_main(bm[0], bm[1]);
    report["general"] = b.general.str();
    report["f0"] = b.f0.str();
    std::cout << "general " << b.general.str() << "\n";
    std::cout << "f0 " << b.f0.str() << "\n";
    if (b.r2_specialized) {
      report["r2"] = b.r2_specialized->str();
      std::cout << "r2 " << b.r2_specialized->str() << "\n";
    }
  } else {
    if (ks.empty()) throw ArgumentError("ramsey: no clique sizes given");
    BigCount val = ramsey_upper(ks);
    report["bound"] = val.str();
    std::cout << val.str() << "\n";
  }
  if (!json_path.empty()) write_report(json_path, report);
  return kExitOk;
}

int run_extract(const std::string& matrix_path, unsigned ell,
                const std::string& mode_name, const std::string& strategy_name,
                const std::string& json_path) {
  AlphMatrix A = read_amat_file(matrix_path);
  std::optional<ExtractionResult> res;
  if (mode_name == "submatrix") {
    res = extract_submatrix(A, ell);
  } else if (mode_name == "config" || mode_name == "configuration") {
    ExtractOptions opts;
    if (strategy_name == "proof")
      opts.strategy = ExtractStrategy::PROOF_FOLLOWING;
    else if (strategy_name != "direct")
      throw ArgumentError("extract: bad strategy " + strategy_name);
    res = extract_configuration(A, ell, opts);
  } else {
    throw ArgumentError("extract: bad mode " + mode_name);
  }

  json report;
  report["command"] = "extract";
  report["status"] = res ? "ok" : "not_contained";
  if (res) {
    PatternSpec spec = PatternSpec::generator(res->kind, res->ell, res->a, res->b);
    report["witness"] = witness_json(spec, res->witness);
    report["strategy"] = res->strategy == ExtractStrategy::PROOF_FOLLOWING
                             ? "proof"
                             : "direct";
    std::cout << pattern_to_string(spec) << "\n";
  } else {
    std::cout << "no pattern of size " << ell << " found\n";
  }
  if (!json_path.empty()) write_report(json_path, report);
  return res ? kExitOk : kExitNotContained;
}

int run_classify(unsigned r, const std::vector<std::string>& forbid,
                 const std::string& json_path) {
  ForbiddenFamily fam = family_from_flags(forbid, r);
  GrowthClass g = classify_family(fam);

  json report;
  report["command"] = "classify";
  report["status"] = "ok";
  report["D"] = g.D;
  if (g.verdict == GrowthClass::Verdict::LINEAR) {
    report["verdict"] = "linear";
    json cert;
    cert["i"] = g.cert_i;
    cert["j"] = g.cert_j;
    cert["kind"] =
        g.cert_kind == StructureKind::IDENTITY ? "identity" : "triangular";
    report["certificate"] = std::move(cert);
    std::cout << "linear: no member fits "
              << (g.cert_kind == StructureKind::IDENTITY ? "I" : "T") << "_"
              << g.D << "(" << unsigned(g.cert_i) << "," << unsigned(g.cert_j)
              << ")\n";
  } else {
    report["verdict"] = "constant";
    json cover = json::array();
    for (const PairCoverage& pc : g.coverage) {
      json j;
      j["i"] = pc.i;
      j["j"] = pc.j;
      j["identityMember"] = pc.identity_member;
      j["triangularMember"] = pc.triangular_member;
      j["triA"] = pc.tri_a;
      j["triB"] = pc.tri_b;
      cover.push_back(std::move(j));
    }
    report["coverage"] = std::move(cover);
    std::cout << "constant (every pair covered at D=" << g.D << ")\n";
  }
  if (!json_path.empty()) write_report(json_path, report);
  return kExitOk;
}

int run_construct(const std::string& kind, unsigned m, unsigned r, unsigned t,
                  unsigned a, unsigned b, unsigned e,
                  const std::string& out_path) {
  AlphMatrix M = AlphMatrix::empty(1, 0);
  if (kind == "pair-family") {
    M = construct_pair_family_lb(m, r, t);
  } else if (kind == "identity-lb") {
    M = construct_identity_lb(m, r, t);
  } else if (kind == "single-pair") {
    M = construct_single_pair_avoider(m, t, static_cast<Symbol>(a),
                                      static_cast<Symbol>(b),
                                      static_cast<Symbol>(e));
  } else {
    throw ArgumentError("construct: bad kind " + kind);
  }
  emit_matrix(M, out_path);
  return kExitOk;
}

int run_collapse(const std::string& matrix_path, const std::string& partition,
                 const std::string& out_path) {
  AlphMatrix A = read_amat_file(matrix_path);
  emit_matrix(collapse_partition(A, parse_partition(partition)), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forbidden-configuration toolkit"};
  app.require_subcommand(1);
  unsigned threads = 0;  // accepted for interface stability; work is serial
  app.add_option("--threads", threads, "worker cap")->envname("CONFEX_THREADS");

  std::string pattern, matrix_path, mode_name = "configuration";
  std::string strategy_name = "direct", json_path, out_path, partition, kind;
  std::vector<std::string> forbid;
  std::vector<unsigned> ks, u_args, v_args, bm_args;
  unsigned m = 0, r = 2, s = 1, t = 2, ell = 2, sym_a = 0, sym_b = 1, sym_e = 0;
  bool forbmax = false, tree = false;
  std::uint64_t max_nodes = 0;
  double timeout = 0.0;

  CLI::App* gen = app.add_subcommand("gen", "print a pattern matrix");
  gen->add_option("--pattern", pattern)->required();
  gen->add_option("--out", out_path);

  CLI::App* check = app.add_subcommand("check", "test pattern containment");
  check->add_option("--forbid", pattern)->required();
  check->add_option("--matrix", matrix_path)->required();
  check->add_option("--mode", mode_name);
  check->add_option("--json", json_path);

  CLI::App* forb = app.add_subcommand("forb", "exact extremal column count");
  forb->add_option("-m", m)->required();
  forb->add_option("-r", r)->required();
  forb->add_option("-s", s);
  forb->add_option("--forbid", forbid)->required();
  forb->add_flag("--forbmax", forbmax);
  forb->add_option("--max-nodes", max_nodes);
  forb->add_option("--timeout", timeout);
  forb->add_option("--json", json_path);
  forb->add_option("--out", out_path);

  CLI::App* dec = app.add_subcommand("decompose", "standard decomposition");
  dec->add_option("matrix", matrix_path)->required();
  dec->add_option("-s", s);
  dec->add_flag("--tree", tree);
  dec->add_option("--json", json_path);

  CLI::App* ram = app.add_subcommand("ramsey", "multicolour Ramsey bounds");
  ram->add_option("ks", ks);
  ram->add_option("--u", u_args)->expected(2);
  ram->add_option("--v", v_args)->expected(3);
  ram->add_option("--bound-main", bm_args)->expected(2);
  ram->add_option("--json", json_path);

  CLI::App* ext = app.add_subcommand("extract", "pull a pattern occurrence");
  ext->add_option("matrix", matrix_path)->required();
  ext->add_option("--ell", ell)->required();
  ext->add_option("--mode", mode_name);
  ext->add_option("--strategy", strategy_name);
  ext->add_option("--json", json_path);

  CLI::App* cls = app.add_subcommand("classify", "growth dichotomy");
  cls->add_option("--r", r)->required();
  cls->add_option("--forbid", forbid)->required();
  cls->add_option("--json", json_path);

  CLI::App* con = app.add_subcommand("construct", "lower-bound matrices");
  con->add_option("--kind", kind)->required();
  con->add_option("--m", m)->required();
  con->add_option("--r", r);
  con->add_option("--t", t)->required();
  con->add_option("--a", sym_a);
  con->add_option("--b", sym_b);
  con->add_option("--e", sym_e);
  con->add_option("--out", out_path);

  CLI::App* col = app.add_subcommand("collapse", "merge symbol blocks");
  col->add_option("matrix", matrix_path)->required();
  col->add_option("--partition", partition)->required();
  col->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return run_gen(pattern, out_path);
    if (*check) return run_check(pattern, matrix_path, mode_name, json_path);
    if (*forb)
      return run_forb(m, r, s, forbid, forbmax, max_nodes, timeout, json_path,
                      out_path);
    if (*dec) return run_decompose(matrix_path, s, tree, json_path);
    if (*ram) return run_ramsey(ks, u_args, v_args, bm_args, json_path);
    if (*ext)
      return run_extract(matrix_path, ell, mode_name, strategy_name, json_path);
    if (*cls) return run_classify(r, forbid, json_path);
    if (*con)
      return run_construct(kind, m, r, t, sym_a, sym_b, sym_e, out_path);
    if (*col) return run_collapse(matrix_path, partition, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
