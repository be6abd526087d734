// toricres: blow-ups of toric surfaces along monomial ideals, iterated
// derivation blow-ups of A_n, and matrix factorizations of hypersurfaces.
//
// Exit codes: 0 success, 1 input or usage error, 2 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricres/matfact.hpp"
#include "toricres/resolve.hpp"
#include "toricres/serialize.hpp"

namespace {

using namespace toricres;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string output = "json";
  std::string out_path;
  unsigned threads = 0;
};

std::string read_payload(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("cannot read " + arg.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& arg) {
  try {
    return Json::parse(read_payload(arg));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

unsigned thread_count(const RunConfig& cfg) {
  if (cfg.threads > 0) return cfg.threads;
  if (const char* env = std::getenv("TORICRES_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("TORICRES_THREADS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw UsageError("cannot write " + cfg.out_path);
  out << text;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InternalMismatch:
    case ErrorKind::NonSmoothFan:
    case ErrorKind::Overflow:
      return kInternalError;
    default:
      return kInputError;
  }
}

std::string emit_trace(const RunConfig& cfg, const ResolutionTrace& trace) {
  if (cfg.output == "json") return to_json(trace).dump(2) + "\n";
  const DualGraph graph = dual_graph(trace);
  if (cfg.output == "dot") return graph.to_dot();
  return "depth=" + std::to_string(trace.depth) + "; dual graph: " + graph.to_text() + "\n";
}

int cmd_an_resolve(const RunConfig& cfg, int n, std::size_t max_steps) {
  if (n < 1) throw UsageError("--n must be at least 1");
  ResolveOptions opts;
  opts.max_steps = max_steps;
  opts.threads = thread_count(cfg);
  const ResolutionTrace trace = resolve_an(static_cast<unsigned>(n), opts);
  emit(cfg, emit_trace(cfg, trace));
  return kOk;
}

int cmd_resolve(const RunConfig& cfg, const std::string& semigroup, const std::string& selector,
                const std::string& ideal, std::size_t max_steps, bool no_normalize) {
  const AffineSemigroup s = semigroup_from_json(parse_json(semigroup));
  IdealSelector sel;
  if (selector == "an") {
    sel = IdealSelector::an_derivation();
  } else if (selector == "max") {
    sel = IdealSelector::maximal_monomial();
  } else {
    if (ideal.empty()) throw UsageError("--selector explicit requires --ideal");
    sel = IdealSelector::explicit_ideal(MonomialIdeal(s, lattice_vecs_from_json(parse_json(ideal))));
  }
  ResolveOptions opts;
  opts.max_steps = max_steps;
  opts.normalize = !no_normalize;
  opts.threads = thread_count(cfg);
  const ResolutionTrace trace = resolve_generic(s, sel, opts);
  if (cfg.output != "json" && !trace.terminated) {
    emit(cfg, "terminated=false; depth=" + std::to_string(trace.depth) + "\n");
    return kOk;
  }
  emit(cfg, emit_trace(cfg, trace));
  return kOk;
}

int cmd_blowup(const RunConfig& cfg, const std::string& semigroup, const std::string& ideal_arg) {
  const Json payload = parse_json(ideal_arg);
  std::optional<MonomialIdeal> parsed;
  if (payload.is_object()) {
    parsed.emplace(ideal_from_json(payload));
  } else {
    if (semigroup.empty()) throw UsageError("--semigroup is required unless --ideal carries a base");
    parsed.emplace(semigroup_from_json(parse_json(semigroup)), lattice_vecs_from_json(payload));
  }
  const MonomialIdeal& ideal = *parsed;

  BlowupResult result;
  try {
    result = blowup(ideal);
  } catch (const Error& e) {
    // Past input validation every failure is a mathematical invariant violation.
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
  if (cfg.output == "json") {
    emit(cfg, to_json(ideal, result).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << "vertices:";
  for (auto i : result.vertex_indices) out << ' ' << i + 1;
  out << "\n";
  for (const auto& c : result.charts) {
    out << "chart " << c.vertex + 1 << ": " << c.cls.tag() << " " << to_json(c.semigroup).dump() << "\n";
  }
  if (result.fan) out << "fan rays: " << to_json(result.fan->fan.rays).dump() << "\n";
  emit(cfg, out.str());
  return kOk;
}

std::pair<std::size_t, std::size_t> parse_cols(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--cols expects two indices like 3,4");
  try {
    const int c1 = std::stoi(text.substr(0, comma));
    const int c2 = std::stoi(text.substr(comma + 1));
    if (c1 < 1 || c2 < 1) throw UsageError("--cols indices are 1-based");
    return {static_cast<std::size_t>(c1), static_cast<std::size_t>(c2)};
  } catch (const std::logic_error&) {
    throw UsageError("--cols expects two indices like 3,4");
  }
}

Json matrix_json(const MatP& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join(const std::vector<PolyQ>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += ", ";
    out += p.to_string();
  }
  return out;
}

int cmd_matfact(const RunConfig& cfg, const std::string& f, const std::string& fx, const std::string& fy,
                const std::string& fz, const std::string& cols) {
  const Splitting s(PolyQ::parse(f), PolyQ::parse(fx), PolyQ::parse(fy), PolyQ::parse(fz));
  const auto m = build_bcd(s);
  const bool factorization = check_matrix_factorization(m.c, m.d, s.f());
  const bool complex = check_complex(m, s.f());
  const auto minors = minors_ideal(m.d, parse_cols(cols));
  std::optional<std::vector<PolyQ>> minimal;
  try {
    minimal = minimalize_monomials(minors);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotMonomial) throw;
  }

  if (cfg.output == "json") {
    Json out{{"f", s.f().to_string()},
             {"split", Json::array({s.fx().to_string(), s.fy().to_string(), s.fz().to_string()})},
             {"B", matrix_json(m.b)},
             {"C", matrix_json(m.c)},
             {"D", matrix_json(m.d)},
             {"factorization", factorization},
             {"complex", complex}};
    Json minors_json = Json::array();
    for (const auto& p : minors) minors_json.push_back(p.to_string());
    out["minors"] = minors_json;
    if (minimal) {
      Json mj = Json::array();
      for (const auto& p : *minimal) mj.push_back(p.to_string());
      out["minimal"] = mj;
    } else {
      out["minimal"] = nullptr;
    }
    emit(cfg, out.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "f = " << s.f().to_string() << "\n";
    out << "B =\n" << m.b.to_string() << "C =\n" << m.c.to_string() << "D =\n" << m.d.to_string();
    out << "matrix factorization: " << (factorization ? "pass" : "FAIL") << "\n";
    out << "complex: " << (complex ? "pass" : "FAIL") << "\n";
    out << "minors: {" << join(minors) << "}\n";
    if (minimal) out << "minimal: {" << join(*minimal) << "}\n";
    emit(cfg, out.str());
  }
  if (!factorization) {
    std::cerr << "error: C*D = D*C = f*Id_4 fails\n";
    return kInternalError;
  }
  return kOk;
}

int cmd_classify(const RunConfig& cfg, const std::string& semigroup) {
  const AffineSemigroup s = semigroup_from_json(parse_json(semigroup));
  const ChartClass cls = classify(s);
  const AffineSemigroup minimal = minimal_generators(s);
  if (cfg.output == "json") {
    Json out{{"generators", to_json(s)},
             {"minimal_generators", to_json(minimal)},
             {"cone", to_json(std::vector<LatticeVec>{s.cone().r1(), s.cone().r2()})},
             {"hilbert_basis", to_json(hilbert_basis(s.cone()))},
             {"class", cls.tag()}};
    if (cls.kind == ChartClass::Kind::NonNormal) out["note"] = "isomorphism class of the saturation only";
    emit(cfg, out.dump(2) + "\n");
  } else {
    emit(cfg, cls.tag() + "\n");
  }
  return kOk;
}

int cmd_derivation_ideal(const RunConfig& cfg, int n) {
  if (n < 1) throw UsageError("--n must be at least 1");
  const MonomialIdeal ideal = derivation_ideal_an(static_cast<unsigned>(n));
  if (cfg.output == "json") {
    emit(cfg, to_json(ideal).dump(2) + "\n");
  } else {
    emit(cfg, to_json(ideal.exps()).dump() + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blow-ups and resolutions of toric surface singularities"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool with_dot) {
    sub->add_option("--output", cfg.output, "Output format")
        ->check(with_dot ? CLI::IsMember({"json", "dot", "text"}) : CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
  };

  int n = 0;
  std::size_t max_steps = 64;
  std::string semigroup, ideal, selector = "an", f, fx, fy, fz, cols = "3,4";
  bool no_normalize = false;

  auto* an = app.add_subcommand("an-resolve", "Resolve A_n by iterated derivation blow-ups");
  an->add_option("--n", n, "Singularity index")->required();
  an->add_option("--max-steps", max_steps, "Maximum number of blow-up levels");
  an->add_option("--threads", cfg.threads, "Worker threads (overrides TORICRES_THREADS)");
  add_common(an, true);

  auto* res = app.add_subcommand("resolve", "Iterate blow-ups on an arbitrary semigroup");
  res->add_option("--semigroup", semigroup, "JSON array of [a,b] generators, or @file")->required();
  res->add_option("--selector", selector, "Blow-up center")->check(CLI::IsMember({"an", "max", "explicit"}));
  res->add_option("--ideal", ideal, "Exponents for the explicit selector");
  res->add_option("--max-steps", max_steps, "Maximum number of blow-up levels");
  res->add_flag("--no-normalize", no_normalize, "Keep non-normal charts instead of saturating them");
  res->add_option("--threads", cfg.threads, "Worker threads (overrides TORICRES_THREADS)");
  add_common(res, true);

  auto* bl = app.add_subcommand("blowup", "Blow up a toric surface along a monomial ideal");
  bl->add_option("--semigroup", semigroup, "JSON array of [a,b] generators, or @file");
  bl->add_option("--ideal", ideal, "JSON exponent array, or {\"base\":..,\"exps\":..}, or @file")->required();
  add_common(bl, false);

  auto* mf = app.add_subcommand("matfact", "Matrix factorization and minors ideal of a hypersurface");
  mf->add_option("--f", f, "Hypersurface equation")->required();
  mf->add_option("--fx", fx, "Coefficient of x in the splitting")->required();
  mf->add_option("--fy", fy, "Coefficient of y in the splitting")->required();
  mf->add_option("--fz", fz, "Coefficient of z in the splitting")->required();
  mf->add_option("--cols", cols, "1-based column pair of D for the minors");
  add_common(mf, false);

  auto* cl = app.add_subcommand("classify", "Classify the toric surface of a semigroup");
  cl->add_option("--semigroup", semigroup, "JSON array of [a,b] generators, or @file")->required();
  add_common(cl, false);

  auto* di = app.add_subcommand("derivation-ideal", "Monomial blow-up center of A_n");
  di->add_option("--n", n, "Singularity index")->required();
  add_common(di, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  try {
    if (an->parsed()) return cmd_an_resolve(cfg, n, max_steps);
    if (res->parsed()) return cmd_resolve(cfg, semigroup, selector, ideal, max_steps, no_normalize);
    if (bl->parsed()) return cmd_blowup(cfg, semigroup, ideal);
    if (mf->parsed()) return cmd_matfact(cfg, f, fx, fy, fz, cols);
    if (cl->parsed()) return cmd_classify(cfg, semigroup);
    if (di->parsed()) return cmd_derivation_ideal(cfg, n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kInputError;
}
