// Command-line front end: root enumeration, Sigma membership and dimension,
// stratification and local models, geometry reports, Darboux certification
// of quadruple files, the numeric moment-map solver, and conjugacy-class
// encodings.
//
// Exit codes: 0 success, 1 domain error (a named precondition failed),
// 2 parse error (bad flags or malformed input file).

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nquiver/nquiver.hpp"

namespace {

using namespace nquiver;

std::string g_format = "text";

bool kv() { return g_format == "kv"; }

std::string yesno(bool b) { return b ? (kv() ? "1" : "yes") : (kv() ? "0" : "no"); }

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit(const std::string& key, const std::string& value) {
  if (kv()) {
    std::cout << key << "=" << value << "\n";
  } else {
    std::string label = key + ":";
    std::printf("%-24s %s\n", label.c_str(), value.c_str());
  }
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  return in;
}

Quiver load_quiver(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_quiver(in);
}

ConjugacyClass load_class(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_class(in);
}

std::string arrows_text(const Quiver& q) {
  std::string s;
  for (const auto& a : q.arrows()) {
    if (!s.empty()) s += ";";
    s += q.name_of(a.tail) + ">" + q.name_of(a.head);
  }
  return s;
}

void emit_quiver(const std::string& prefix, const Quiver& q) {
  if (kv()) {
    std::string names;
    for (int i = 0; i < q.size(); ++i) {
      if (i) names += ",";
      names += q.name_of(i);
    }
    emit(prefix + ".vertices", names);
    emit(prefix + ".arrows", arrows_text(q));
  } else {
    std::ostringstream os;
    os << "vertices:";
    for (int i = 0; i < q.size(); ++i) os << ' ' << q.name_of(i);
    os << "\n";
    for (const auto& a : q.arrows())
      os << "arrow " << q.name_of(a.tail) << ' ' << q.name_of(a.head) << "\n";
    std::cout << os.str();
  }
}

std::string type_text(const RepType& t) {
  if (t.entries.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < t.entries.size(); ++i) {
    if (i) s += " + ";
    s += std::to_string(t.entries[i].mult) + "*(" + format_int_vector(t.entries[i].beta) + ")";
  }
  return s;
}

std::string decomposition_text(const Decomposition& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += " + ";
    s += "(" + format_int_vector(d[i]) + ")";
  }
  return s;
}

int cmd_roots(const std::string& file, const std::string& bound_text) {
  Quiver q = load_quiver(file);
  IntVec bound = parse_int_vector(bound_text, q.size());
  auto roots = positive_roots_up_to(q, bound);
  if (kv()) {
    emit("count", std::to_string(roots.size()));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      std::string tag = roots[k].cls.kind == RootKind::Real ? "REAL" : "IMAG";
      emit("root." + std::to_string(k), format_int_vector(roots[k].alpha) + ";" + tag + ";" +
                                            std::to_string(tits_q(q, roots[k].alpha)));
    }
  } else {
    for (const auto& r : roots) {
      std::string tag = r.cls.kind == RootKind::Real ? "REAL" : "IMAG";
      std::printf("%-16s %-5s q=%" PRId64 "\n", format_int_vector(r.alpha).c_str(), tag.c_str(),
                  tits_q(q, r.alpha));
    }
  }
  return 0;
}

void emit_sigma_block(const Quiver& q, const Weight& lambda, const IntVec& alpha) {
  SigmaCheck sc = check_sigma(q, lambda, alpha);
  emit("in_R_lambda_plus", yesno(sc.in_r_plus));
  emit("in_Sigma_lambda", yesno(sc.member));
  if (sc.violation) emit("violating_decomposition", decomposition_text(*sc.violation));
  emit("nonempty", yesno(is_nonempty(q, lambda, alpha)));
  auto d = dim_n(q, lambda, alpha);
  emit("dim", d ? std::to_string(*d) : "empty");
}

int cmd_sigma(const std::string& file, const std::string& lt, const std::string& at) {
  Quiver q = load_quiver(file);
  Weight lambda = parse_weight_vector(lt, q.size());
  IntVec alpha = parse_int_vector(at, q.size());
  emit("alpha", format_int_vector(alpha));
  emit("lambda", format_weight(lambda));
  emit_sigma_block(q, lambda, alpha);
  return 0;
}

int cmd_types(const std::string& file, const std::string& lt, const std::string& at) {
  Quiver q = load_quiver(file);
  Weight lambda = parse_weight_vector(lt, q.size());
  IntVec alpha = parse_int_vector(at, q.size());
  auto types = enumerate_rep_types(q, lambda, alpha);
  emit("count", std::to_string(types.size()));
  for (std::size_t k = 0; k < types.size(); ++k)
    emit("type." + std::to_string(k), type_text(types[k]));
  return 0;
}

int cmd_local(const std::string& file, const std::string& lt, const std::string& at, int index) {
  Quiver q = load_quiver(file);
  Weight lambda = parse_weight_vector(lt, q.size());
  IntVec alpha = parse_int_vector(at, q.size());
  auto types = enumerate_rep_types(q, lambda, alpha);
  if (index >= static_cast<int>(types.size()))
    throw std::invalid_argument("local: type index out of range (have " +
                                std::to_string(types.size()) + " types)");
  std::size_t from = index >= 0 ? index : 0;
  std::size_t to = index >= 0 ? index + 1 : types.size();
  emit("count", std::to_string(types.size()));
  for (std::size_t k = from; k < to; ++k) {
    LocalData ld = local_quiver(q, types[k]);
    std::string pre = "local." + std::to_string(k);
    emit(pre + ".type", type_text(types[k]));
    emit(pre + ".kappa", format_int_vector(ld.kappa));
    std::string rows;
    for (std::size_t i = 0; i < ld.doubled_counts.size(); ++i) {
      if (i) rows += "|";
      rows += format_int_vector(ld.doubled_counts[i]);
    }
    emit(pre + ".doubled_counts", rows);
    emit(pre + ".orientation", arrows_text(ld.oriented));
  }
  return 0;
}

int cmd_report(const std::string& file, const std::string& lt, const std::string& at) {
  Quiver q = load_quiver(file);
  Weight lambda = parse_weight_vector(lt, q.size());
  IntVec alpha = parse_int_vector(at, q.size());
  GeometryReport rep = geometry_report(q, lambda, alpha);
  emit("alpha", format_int_vector(alpha));
  emit("lambda", format_weight(lambda));
  emit("nonempty", yesno(rep.nonempty));
  emit("irreducible_or_empty", yesno(rep.irreducible_or_empty));
  emit("dimension", rep.dimension ? std::to_string(*rep.dimension) : "empty");
  emit("in_R_lambda_plus", yesno(rep.in_r_plus));
  emit("in_Sigma_lambda", yesno(rep.in_sigma));
  auto tri = [&](TriState t) {
    switch (t) {
      case TriState::Yes: return std::string(yesno(true));
      case TriState::Undetermined: return std::string("undetermined");
      default: return std::string("n/a");
    }
  };
  emit("normal", tri(rep.normal));
  emit("rational_singularities", tri(rep.rational_singularities));
  switch (rep.smoothness) {
    case Smoothness::SmoothPoint: emit("smoothness", "smooth-point"); break;
    case Smoothness::Smooth: emit("smoothness", "smooth"); break;
    case Smoothness::Singular: emit("smoothness", "singular"); break;
    default: emit("smoothness", "undetermined"); break;
  }
  return 0;
}

int cmd_darboux(const std::string& file) {
  auto in = open_or_throw(file);
  Quadruple quad = parse_quadruple(in);
  SubBimodule s = maximal_isotropic(quad.module, quad.omega);
  DarbouxCertificate cert = darboux(quad.module, quad.omega, s);
  emit("dim", std::to_string(quad.module.dim()));
  emit("lagrangian_dim", std::to_string(quad.module.dim() / 2));
  emit("gram_standard", yesno(cert.gram == standard_symplectic_gram(quad.module.dim() / 2)));
  if (kv()) {
    std::string rows;
    for (int i = 0; i < cert.basis.rows(); ++i) {
      if (i) rows += "|";
      for (int j = 0; j < cert.basis.cols(); ++j)
        rows += (j ? "," : "") + to_string(cert.basis(i, j));
    }
    emit("basis", rows);
  } else {
    std::cout << "basis:\n" << cert.basis;
  }
  ExtractedQuiver ex = quadruple_to_quiver(quad);
  if (!kv()) std::cout << "extracted:\n";
  emit_quiver("quiver", ex.quiver);
  emit("alpha", format_int_vector(ex.alpha));
  emit("lambda", format_weight(ex.lambda));
  return 0;
}

int cmd_solve(const std::string& file, const std::string& lt, const std::string& at,
              std::uint64_t seed, int starts, double tol, int max_iter, double rank_tol) {
  Quiver q = load_quiver(file);
  Weight lambda = parse_weight_vector(lt, q.size());
  IntVec alpha = parse_int_vector(at, q.size());
  DoubledQuiver dq(q);
  SolveOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  opts.rank_tol = rank_tol;
  emit("alpha", format_int_vector(alpha));
  emit("lambda", format_weight(lambda));
  bool member = in_sigma(q, lambda, alpha);
  emit("in_Sigma_lambda", yesno(member));
  if (member)
    emit("predicted_dim",
         std::to_string(dot_int(alpha, alpha) - 1 + 2 * tits_p(q, alpha)));
  MultiStartResult res = solve_multi(dq, alpha, lambda, seed, starts, opts);
  emit("starts_used", std::to_string(res.starts_used));
  emit("converged", yesno(res.best.converged));
  emit("iterations", std::to_string(res.best.iterations));
  emit("residual", fmt_double(res.best.residual));
  if (res.tangent_dim) emit("fiber_tangent_dim", std::to_string(*res.tangent_dim));
  return 0;
}

void emit_setting(const QuiverSetting& qs) {
  emit_quiver("quiver", qs.quiver);
  emit("alpha", format_int_vector(qs.alpha));
  emit("lambda", format_weight(qs.lambda));
  emit("two_p", std::to_string(2 * tits_p(qs.quiver, qs.alpha)));
  emit_sigma_block(qs.quiver, qs.lambda, qs.alpha);
}

int cmd_kp_class(const std::string& file) {
  ConjugacyClass c = load_class(file);
  ChainData cd = chain_data(c);
  emit("n", std::to_string(c.n()));
  emit("t", std::to_string(cd.t));
  std::string xis;
  for (std::size_t i = 0; i < cd.xi.size(); ++i) xis += (i ? "," : "") + to_string(cd.xi[i]);
  emit("xi", xis);
  emit("ranks", format_int_vector(cd.ranks));
  emit("jumps", format_int_vector(cd.jumps));
  emit("class_dim", std::to_string(class_dim(c)));
  emit_setting(class_to_quiver(c));
  return 0;
}

int cmd_kp_star(const std::vector<std::string>& files) {
  std::vector<ConjugacyClass> classes;
  for (const auto& f : files) classes.push_back(load_class(f));
  StarResult star = classes_to_star(classes);
  emit("trace_sum", to_string(star.trace_sum));
  emit("trace_condition", yesno(star.traceless));
  emit_setting(star.setting);
  return 0;
}

int cmd_kp_legs(const std::string& quiver_file, const std::vector<std::string>& class_files) {
  Quiver q = load_quiver(quiver_file);
  std::vector<ConjugacyClass> classes;
  for (const auto& f : class_files) classes.push_back(load_class(f));
  if (static_cast<int>(classes.size()) != q.size())
    throw std::invalid_argument("kp legs: need one class file per vertex, in vertex order");
  IntVec alpha;
  for (const auto& c : classes) alpha.push_back(c.n());
  emit_setting(attach_legs(q, alpha, classes));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of moment-map reductions for quiver representations"};
  app.require_subcommand(1);
  app.add_option("--format", g_format, "Output format")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();

  std::string file, lambda_text, alpha_text, bound_text;
  std::uint64_t seed = 0;
  int starts = 1, max_iter = 200, index = -1;
  double tol = 1e-10, rank_tol = 1e-8;
  std::vector<std::string> class_files;

  auto* roots_cmd = app.add_subcommand("roots", "Positive roots in a box");
  roots_cmd->add_option("quiver", file)->required();
  roots_cmd->add_option("--bound", bound_text)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "Sigma_lambda membership, nonemptiness, dim");
  sigma_cmd->add_option("quiver", file)->required();
  sigma_cmd->add_option("--lambda", lambda_text)->required();
  sigma_cmd->add_option("--alpha", alpha_text)->required();

  auto* types_cmd = app.add_subcommand("types", "Representation types of the reduction");
  types_cmd->add_option("quiver", file)->required();
  types_cmd->add_option("--lambda", lambda_text)->required();
  types_cmd->add_option("--alpha", alpha_text)->required();

  auto* local_cmd = app.add_subcommand("local", "Etale-local quiver data per stratum");
  local_cmd->add_option("quiver", file)->required();
  local_cmd->add_option("--lambda", lambda_text)->required();
  local_cmd->add_option("--alpha", alpha_text)->required();
  local_cmd->add_option("--index", index, "Only this type index");

  auto* report_cmd = app.add_subcommand("report", "Consolidated geometry report");
  report_cmd->add_option("quiver", file)->required();
  report_cmd->add_option("--lambda", lambda_text)->required();
  report_cmd->add_option("--alpha", alpha_text)->required();

  auto* darboux_cmd = app.add_subcommand("darboux", "Certify a quadruple file");
  darboux_cmd->add_option("quadruple", file)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Numeric moment-map solver");
  solve_cmd->add_option("quiver", file)->required();
  solve_cmd->add_option("--lambda", lambda_text)->required();
  solve_cmd->add_option("--alpha", alpha_text)->required();
  solve_cmd->add_option("--seed", seed)->capture_default_str();
  solve_cmd->add_option("--starts", starts)->capture_default_str();
  solve_cmd->add_option("--tol", tol)->capture_default_str();
  solve_cmd->add_option("--max-iter", max_iter)->capture_default_str();
  solve_cmd->add_option("--rank-tol", rank_tol)->capture_default_str();

  auto* kp_cmd = app.add_subcommand("kp", "Conjugacy-class encodings");
  kp_cmd->require_subcommand(1);
  auto* kp_class_cmd = kp_cmd->add_subcommand("class", "Chain encoding of one class");
  kp_class_cmd->add_option("class", file)->required();
  auto* kp_star_cmd = kp_cmd->add_subcommand("star", "Star encoding of a zero-sum tuple");
  kp_star_cmd->add_option("classes", class_files)->required()->expected(-1);
  auto* kp_legs_cmd = kp_cmd->add_subcommand("legs", "Attach class legs to a quiver");
  kp_legs_cmd->add_option("quiver", file)->required();
  kp_legs_cmd->add_option("classes", class_files)->required()->expected(-1);

  if (argc <= 1) {
    std::cout << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return 0;
    }
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*roots_cmd) return cmd_roots(file, bound_text);
    if (*sigma_cmd) return cmd_sigma(file, lambda_text, alpha_text);
    if (*types_cmd) return cmd_types(file, lambda_text, alpha_text);
    if (*local_cmd) return cmd_local(file, lambda_text, alpha_text, index);
    if (*report_cmd) return cmd_report(file, lambda_text, alpha_text);
    if (*darboux_cmd) return cmd_darboux(file);
    if (*solve_cmd)
      return cmd_solve(file, lambda_text, alpha_text, seed, starts, tol, max_iter, rank_tol);
    if (*kp_class_cmd) return cmd_kp_class(file);
    if (*kp_star_cmd) return cmd_kp_star(class_files);
    if (*kp_legs_cmd) {
      std::vector<std::string> rest(class_files);
      return cmd_kp_legs(file, rest);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
