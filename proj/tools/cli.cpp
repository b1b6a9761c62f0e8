#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "lehmer/analytic.hpp"
#include "lehmer/auxsearch.hpp"
#include "lehmer/bounds.hpp"
#include "lehmer/corpus.hpp"
#include "lehmer/json.hpp"
#include "lehmer/numtheory.hpp"

namespace lehmer::cli {

namespace {

using nlohmann::json;

constexpr double kSoundnessSlack = 1e-6;

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  bool bits = false;
  bool log10 = false;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// Presentation-only unit conversion; JSON output always stays in nats.
std::string shown(double nats, const Globals& g) {
  if (g.bits) return fmt(nats / std::numbers::ln2) + " bits";
  if (g.log10) return fmt(nats / std::numbers::ln10) + " log10";
  return fmt(nats) + " nats";
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw std::invalid_argument(std::string(what) + " must be an integer, got '" + text + "'");
  }
  return out;
}

IntPoly require_poly(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw std::invalid_argument(std::string("missing ") + flag);
  return parse_poly(*text);
}

std::optional<IntPoly> maybe_poly(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_poly(*text);
}

Integer require_integer(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw std::invalid_argument(std::string("missing ") + flag);
  return parse_integer(*text, flag);
}

template <class T>
T require_value(const std::optional<T>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

std::string fmt_or_dash(double v) { return std::isnan(v) ? "-" : fmt(v); }

json bracket_json(const Bracket& b) { return {{"lo", b.lo}, {"hi", b.hi}}; }

std::string bracket_text(const Bracket& b, const Globals& g) {
  return "[" + shown(b.lo, g) + ", " + shown(b.hi, g) + "]";
}

void print_report(const BoundReport& r, const Globals& g, std::ostream& out) {
  out << "theorem: " << theorem_name(r.theorem) << " (lower bound for "
      << (r.target == Target::height ? "h(alpha)" : "mu(g)") << ")\n";
  if (r.value) {
    out << "value: " << shown(*r.value, g) << (r.vacuous() ? "  [vacuous]" : "") << "\n";
    out << "per degree: " << shown(*r.per_degree, g) << "\n";
  } else {
    out << "value: none (hypothesis failed)\n";
  }
  for (const auto& h : r.hypotheses) {
    out << "  [" << (h.passed ? "pass" : "FAIL") << "] " << h.name << ": " << h.evidence << "\n";
  }
}

int report_exit(const BoundReport& r) {
  if (!r.value) return hypothesis_failure;
  return r.vacuous() ? vacuous : ok;
}

// ---------------------------------------------------------------------------

struct MeasureArgs {
  std::string poly;
};

int cmd_measure(const MeasureArgs& a, const Globals& g, std::ostream& out) {
  const IntPoly f = parse_poly(a.poly);
  if (f.is_zero()) throw std::invalid_argument("the zero polynomial has no Mahler measure");
  const Bracket mu = mahler_measure(f);
  const Bracket oracle = mahler_oracle(f);
  const bool consistent = mu.overlaps(oracle);

  std::size_t outside = 0, on_circle = 0, inside = 0;
  double max_residual = 0.0;
  std::size_t count = 0;
  if (f.deg() > 0) {
    for (const auto& z : roots(f)) {
      const double m = std::abs(z);
      if (std::fabs(m - 1.0) <= 1e-9) {
        ++on_circle;
      } else if (m > 1.0) {
        ++outside;
      } else {
        ++inside;
      }
      max_residual = std::max(max_residual, root_residual(f, z));
      ++count;
    }
  }

  if (g.json) {
    out << json{{"poly", format_poly(f)},
                {"mu", bracket_json(mu)},
                {"graeffe", bracket_json(oracle)},
                {"consistent", consistent},
                {"roots",
                 {{"count", count},
                  {"outside", outside},
                  {"on_circle", on_circle},
                  {"inside", inside},
                  {"max_residual", max_residual}}}}
               .dump(2)
        << "\n";
    return ok;
  }
  out << "polynomial: " << format_poly(f) << "\n";
  // A tight bracket at zero means a product of cyclotomics (times x^k).
  const double point = mu.lo == 0.0 && mu.width() < 1e-9 ? 0.0 : mu.mid();
  out << "mu: " << shown(point, g) << "  bracket " << bracket_text(mu, g) << "\n";
  out << "graeffe: " << bracket_text(oracle, g) << (consistent ? "  agrees" : "  DISAGREES") << "\n";
  out << "roots: " << count << " (outside " << outside << ", on circle " << on_circle << ", inside " << inside
      << "), max residual " << fmt(max_residual) << "\n";
  return ok;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  std::optional<std::string> theorem;
  std::optional<std::string> f, g, t, m, p;
  std::optional<std::size_t> n;
  std::size_t r = 1;
};

int cmd_bound(const BoundArgs& a, const Globals& gl, std::ostream& out) {
  if (!a.theorem) {
    Instance in;
    in.f = require_poly(a.f, "--f");
    in.g = maybe_poly(a.g);
    in.t = maybe_poly(a.t);
    in.m = require_integer(a.m, "--m");
    in.n = require_value(a.n, "--n");
    in.r = a.r;
    const BestBound best = best_bound(in);
    if (gl.json) {
      json j;
      j["status"] = best.status == BestBound::Status::bound     ? "bound"
                    : best.status == BestBound::Status::vacuous ? "vacuous"
                                                                : "no bound applies";
      j["best"] = best.best ? json(*best.best) : json(nullptr);
      j["evaluated"] = best.evaluated;
      out << j.dump(2) << "\n";
    } else if (best.best) {
      print_report(*best.best, gl, out);
      out << "best of " << best.evaluated.size() << " evaluated reports\n";
    } else {
      out << "no bound applies (" << best.evaluated.size() << " reports, all with failed hypotheses)\n";
    }
    switch (best.status) {
      case BestBound::Status::bound:
        return ok;
      case BestBound::Status::vacuous:
        return vacuous;
      case BestBound::Status::none:
        return hypothesis_failure;
    }
    return hypothesis_failure;
  }

  const Theorem th = theorem_from_name(*a.theorem);
  auto f = [&] { return require_poly(a.f, "--f"); };
  auto g = [&] { return a.g ? parse_poly(*a.g) : require_poly(a.f, "--f"); };
  auto t = [&] { return require_poly(a.t, "--T"); };
  auto m = [&] { return require_integer(a.m, "--m"); };
  auto p = [&] { return require_integer(a.p, "--p"); };
  auto n = [&] { return require_value(a.n, "--n"); };
  BoundReport r;
  switch (th) {
    case Theorem::dubmoss_gen:
      r = bound_dubmoss_gen(n(), m(), t());
      break;
    case Theorem::dubmoss:
      r = bound_dubmoss(f(), g(), t(), m());
      break;
    case Theorem::padic:
      r = bound_padic(p(), t());
      break;
    case Theorem::cyclos:
      r = bound_cyclos(f(), g(), t(), m(), n(), a.r);
      break;
    case Theorem::cyclos2:
      r = bound_cyclos2(f(), g(), t(), p(), n(), a.r);
      break;
    case Theorem::universal:
      r = bound_universal(f(), g(), m(), n(), a.r);
      break;
    case Theorem::threshold:
      r = bound_threshold(f(), g(), m(), n(), a.r);
      break;
    case Theorem::lowsup:
      r = bound_lowsup(f(), g(), t(), m());
      break;
  }
  if (gl.json) {
    out << json(r).dump(2) << "\n";
  } else {
    print_report(r, gl, out);
  }
  return report_exit(r);
}

// ---------------------------------------------------------------------------

struct OmegaArgs {
  std::string t;
  std::string m;
};

int cmd_omega(const OmegaArgs& a, const Globals& g, std::ostream& out) {
  const IntPoly t = parse_poly(a.t);
  const Integer m = parse_integer(a.m, "--m");
  const double w = omega(t, m);
  if (g.json) {
    out << json{{"T", format_poly(t)}, {"m", m.get_str()}, {"omega", w}}.dump(2) << "\n";
  } else {
    out << "omega_" << m.get_str() << "(" << format_poly(t) << ") = " << shown(w, g) << "\n";
  }
  return ok;
}

struct SupNormArgs {
  std::string t;
  double width = 1e-9;
};

int cmd_supnorm(const SupNormArgs& a, const Globals& g, std::ostream& out) {
  const IntPoly t = parse_poly(a.t);
  if (!(a.width > 0)) throw std::invalid_argument("--width must be positive");
  SupNormOptions opt;
  opt.target_width = a.width;
  const Bracket b = sup_norm(t, opt);
  if (g.json) {
    out << json{{"T", format_poly(t)}, {"nu", bracket_json(b)}, {"width", b.width()}}.dump(2) << "\n";
  } else {
    out << "nu(" << format_poly(t) << ") in " << bracket_text(b, g) << ", width " << fmt(b.width()) << "\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string mode;
  std::optional<std::string> m, p;
  std::size_t n = 1;
  std::size_t r = 1;
  std::size_t budget = 1;
  std::uint64_t d_max = 12;
  std::size_t beam = 0;
  std::size_t max_mult = 8;
};

int cmd_search(const SearchArgs& a, const Globals& g, std::ostream& out) {
  SearchConfig cfg;
  std::optional<std::pair<std::string, double>> reference;
  if (a.mode == "padic") {
    const Integer p = require_integer(a.p, "--p");
    cfg.mode = PadicMode{p};
    if (p == 2) {
      reference = {"log(sqrt 2)", std::log(std::sqrt(2.0))};
    } else if (p > 2) {
      reference = {"log(p/2)/(p-1)", std::log(p.get_d() / 2) / (p.get_d() - 1)};
    }
  } else if (a.mode == "dubmoss_gen") {
    cfg.mode = DubMossGenMode{a.n, require_integer(a.m, "--m")};
  } else if (a.mode == "cyclos") {
    cfg.mode = CyclosMode{require_integer(a.m, "--m"), a.n, a.r};
  } else {
    throw std::invalid_argument("unknown search mode '" + a.mode + "' (padic, dubmoss_gen, cyclos)");
  }
  if (a.mode != "padic" && require_integer(a.m, "--m") == 2) reference = {"(log 5)/4", std::log(5.0) / 4};
  cfg.degree_budget = a.budget;
  cfg.d_max = a.d_max;
  cfg.beam_width = a.beam == 0 ? std::numeric_limits<std::size_t>::max() : a.beam;
  cfg.max_multiplicity = a.max_mult;

  const SearchResult res = search_aux(cfg);
  if (g.json) {
    json j = to_json(cfg, res);
    if (reference) j["reference"] = {{"name", reference->first}, {"value", reference->second}};
    out << j.dump(2) << "\n";
    return ok;
  }
  out << "best T: " << format_poly(res.best_t) << "\n";
  out << "objective: " << shown(res.objective, g) << "\n";
  out << "evaluated: " << res.evaluated << " candidates\n";
  out << "improvements:\n";
  for (const auto& [t, v] : res.trace) out << "  " << shown(v, g) << "  " << format_poly(t) << "\n";
  if (reference) {
    out << "reference " << reference->first << " = " << shown(reference->second, g) << " ("
        << (res.objective >= reference->second - 1e-12 ? "reached" : "not reached") << ")\n";
  }
  return ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string corpus;
};

struct Row {
  std::size_t line;
  Instance in;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::ifstream file(a.corpus);
  if (!file) throw std::invalid_argument("cannot open corpus '" + a.corpus + "'");
  std::vector<Row> rows;
  bool malformed = false;
  std::string text;
  for (std::size_t line = 1; std::getline(file, text); ++line) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      rows.push_back({line, instance_from_json(json::parse(text))});
    } catch (const std::exception& e) {
      err << "line " << line << ": " << e.what() << "\n";
      malformed = true;
    }
  }
  if (malformed) return input_error;

  json table = json::array();
  std::size_t failed = 0;
  if (!g.json) {
    out << std::left << std::setw(6) << "line" << std::setw(7) << "deg g" << std::setw(5) << "m" << std::setw(6)
        << "n" << std::setw(4) << "r" << std::setw(11) << "theorem" << std::setw(16) << "bound" << std::setw(16)
        << "mu(g).hi" << std::setw(10) << "ratio"
        << "check\n";
  }
  for (const auto& row : rows) {
    const IntPoly& gp = row.in.factor();
    const Bracket mu = mahler_measure(gp);
    const BestBound best = best_bound(row.in);
    bool pass = true;
    for (const auto& r : best.evaluated) {
      if (r.value && *r.value > mu.hi + kSoundnessSlack) pass = false;
    }
    if (!pass) ++failed;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double value = best.best && best.best->value ? *best.best->value : nan;
    const double ratio = value > 0 && mu.hi > 0 ? value / mu.hi : nan;
    const std::string theorem = best.best ? std::string(theorem_name(best.best->theorem)) : "-";
    const std::string status = best.status == BestBound::Status::bound     ? "bound"
                               : best.status == BestBound::Status::vacuous ? "vacuous"
                                                                           : "none";
    if (g.json) {
      table.push_back({{"line", row.line},
                       {"status", status},
                       {"theorem", best.best ? json(theorem) : json(nullptr)},
                       {"bound", std::isnan(value) ? json(nullptr) : json(value)},
                       {"mu", bracket_json(mu)},
                       {"ratio", std::isnan(ratio) ? json(nullptr) : json(ratio)},
                       {"pass", pass}});
    } else {
      out << std::left << std::setw(6) << row.line << std::setw(7) << (gp.is_zero() ? 0 : gp.deg()) << std::setw(5)
          << row.in.m.get_str() << std::setw(6) << row.in.n << std::setw(4) << row.in.r << std::setw(11) << theorem
          << std::setw(16) << fmt_or_dash(value) << std::setw(16) << fmt(mu.hi) << std::setw(10)
          << fmt_or_dash(ratio).substr(0, 8) << (pass ? "pass" : "FAIL") << "\n";
    }
  }
  if (g.json) {
    out << json{{"rows", table}, {"total", rows.size()}, {"failed", failed}}.dump(2) << "\n";
  } else {
    out << rows.size() - failed << "/" << rows.size() << " instances pass\n";
  }
  return failed == 0 ? ok : check_failed;
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family = "near-cyclotomic";
  std::string m;
  std::size_t half_degree = 1;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::uint64_t d_max = 30;
  std::optional<std::string> out_path;
};

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
  if (a.family != "near-cyclotomic") throw std::invalid_argument("unknown family '" + a.family + "'");
  GenOptions opt;
  opt.m = parse_integer(a.m, "--m");
  opt.half_degree = a.half_degree;
  opt.count = a.count;
  opt.seed = a.seed.value_or(g.seed);
  opt.d_max = a.d_max;
  const auto instances = generate_near_cyclotomic(opt);
  std::ofstream file;
  if (a.out_path) {
    file.open(*a.out_path);
    if (!file) throw std::invalid_argument("cannot write '" + *a.out_path + "'");
  }
  std::ostream& sink = a.out_path ? static_cast<std::ostream&>(file) : out;
  for (const auto& inst : instances) sink << to_json(inst).dump() << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mahler measure and height lower bounds", "lehmer"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Machine-readable output");
  app.add_option("--seed", globals.seed, "Seed for randomized commands");
  auto* bits = app.add_flag("--bits", globals.bits, "Show values in bits");
  app.add_flag("--log10", globals.log10, "Show values in log10 units")->excludes(bits);

  MeasureArgs measure;
  auto* sub_measure = app.add_subcommand("measure", "Mahler measure of a polynomial");
  sub_measure->add_option("--poly", measure.poly, "Polynomial")->required();

  BoundArgs bound;
  auto* sub_bound = app.add_subcommand("bound", "Evaluate one theorem, or the best bound for an instance");
  sub_bound->add_option("--theorem", bound.theorem,
                        "dubmoss_gen, dubmoss, padic, cyclos, cyclos2, universal, threshold or lowsup");
  sub_bound->add_option("--f", bound.f, "Polynomial f");
  sub_bound->add_option("--g", bound.g, "Factor g of f (default f)");
  sub_bound->add_option("--T", bound.t, "Auxiliary polynomial T");
  sub_bound->add_option("--m", bound.m, "Modulus m");
  sub_bound->add_option("--p", bound.p, "Prime p");
  sub_bound->add_option("--n", bound.n, "n");
  sub_bound->add_option("--r", bound.r, "r (default 1)");

  OmegaArgs om;
  auto* sub_omega = app.add_subcommand("omega", "log gcd of m^k T^(k)(1)/k!");
  sub_omega->add_option("--T", om.t, "Polynomial T")->required();
  sub_omega->add_option("--m", om.m, "Positive integer m")->required();

  SupNormArgs sn;
  auto* sub_sup = app.add_subcommand("supnorm", "Certified log sup of |T| on the unit circle");
  sub_sup->add_option("--T", sn.t, "Polynomial T")->required();
  sub_sup->add_option("--width", sn.width, "Target bracket width in nats");

  SearchArgs search;
  auto* sub_search = app.add_subcommand("search", "Search products of cyclotomic polynomials for a good T");
  sub_search->add_option("--mode", search.mode, "padic, dubmoss_gen or cyclos")->required();
  sub_search->add_option("--p", search.p, "Prime for padic mode");
  sub_search->add_option("--m", search.m, "Modulus for dubmoss_gen and cyclos modes");
  sub_search->add_option("--n", search.n, "n (default 1)");
  sub_search->add_option("--r", search.r, "r for cyclos mode (default 1)");
  sub_search->add_option("--budget", search.budget, "Largest degree of T")->required();
  sub_search->add_option("--d-max", search.d_max, "Largest cyclotomic index (default 12)");
  sub_search->add_option("--beam", search.beam, "Beam width, 0 for exhaustive (default 0)");
  sub_search->add_option("--max-mult", search.max_mult, "Largest exponent of one factor (default 8)");

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "Check every bound against the Mahler measure over a corpus");
  sub_verify->add_option("--corpus", verify.corpus, "JSON-lines corpus")->required();

  GenArgs gen;
  auto* sub_gen = app.add_subcommand("gen", "Generate a JSON-lines corpus");
  sub_gen->add_option("--family", gen.family, "Instance family (near-cyclotomic)");
  sub_gen->add_option("--m", gen.m, "Shift M, |M| >= 2")->required();
  sub_gen->add_option("--N", gen.half_degree, "Half the degree of g")->required();
  sub_gen->add_option("--count", gen.count, "Number of instances");
  sub_gen->add_option("--seed", gen.seed, "Seed (overrides the global --seed)");
  sub_gen->add_option("--d-max", gen.d_max, "Largest cyclotomic index drawn (default 30)");
  sub_gen->add_option("--out", gen.out_path, "Output file (default stdout)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv{"lehmer"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : input_error;
  }

  try {
    if (*sub_measure) return cmd_measure(measure, globals, out);
    if (*sub_bound) return cmd_bound(bound, globals, out);
    if (*sub_omega) return cmd_omega(om, globals, out);
    if (*sub_sup) return cmd_supnorm(sn, globals, out);
    if (*sub_search) return cmd_search(search, globals, out);
    if (*sub_verify) return cmd_verify(verify, globals, out, err);
    if (*sub_gen) return cmd_gen(gen, globals, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return check_failed;
  }
  return input_error;
}

}  // namespace lehmer::cli
