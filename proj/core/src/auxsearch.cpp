#include "lehmer/auxsearch.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>

#include "lehmer/bounds.hpp"
#include "lehmer/cyclotomic.hpp"
#include "lehmer/json.hpp"
#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

struct Factor {
  std::uint64_t d;
  std::size_t degree;
};

struct State {
  std::vector<std::size_t> picks;  // indices into the factor table, nondecreasing
  IntPoly poly;
  std::size_t degree = 0;
  double objective = 0.0;
};

// Objectives that agree to rounding error count as ties, so the degree and
// coefficient tie-breaks are not decided by the last bit of a logarithm.
constexpr double kTieTolerance = 1e-12;

bool improves(double a, double b) { return a > b + kTieTolerance * std::max({1.0, std::fabs(a), std::fabs(b)}); }

bool better(const State& a, const State& b) {
  if (improves(a.objective, b.objective)) return true;
  if (improves(b.objective, a.objective)) return false;
  if (a.degree != b.degree) return a.degree < b.degree;
  return IntPoly::lex_less(a.poly, b.poly);
}

std::vector<Factor> factor_table(const SearchConfig& cfg) {
  std::vector<Factor> out;
  for (std::uint64_t d = 1; d <= cfg.d_max; ++d) {
    const std::size_t deg = totient(d);
    if (deg <= cfg.degree_budget) out.push_back({d, deg});
  }
  return out;
}

std::size_t count_of(const std::vector<std::size_t>& picks, std::size_t k) {
  return static_cast<std::size_t>(std::count(picks.begin(), picks.end(), k));
}

// Children of s, each adding one factor with index >= the last one, so every
// multiset is reached exactly once.
std::vector<State> extend(const State& s, const std::vector<Factor>& table, const SearchConfig& cfg) {
  std::vector<State> out;
  const std::size_t first = s.picks.empty() ? 0 : s.picks.back();
  for (std::size_t k = first; k < table.size(); ++k) {
    if (s.degree + table[k].degree > cfg.degree_budget) continue;
    if (count_of(s.picks, k) >= cfg.max_multiplicity) continue;
    State child;
    child.picks = s.picks;
    child.picks.push_back(k);
    child.poly = s.picks.empty() ? cyclotomic(table[k].d) : s.poly * cyclotomic(table[k].d);
    child.degree = s.degree + table[k].degree;
    out.push_back(std::move(child));
  }
  return out;
}

void validate(const SearchConfig& cfg) {
  if (cfg.beam_width == 0) throw std::invalid_argument("beam width must be >= 1");
  if (cfg.max_multiplicity == 0) throw std::invalid_argument("max multiplicity must be >= 1");
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, PadicMode>) {
          if (!is_prime(m.p)) throw std::invalid_argument("padic mode needs a prime p");
        } else {
          if (m.m < 2) throw std::invalid_argument("search mode needs m >= 2");
          if (m.n == 0) throw std::invalid_argument("search mode needs n >= 1");
          if constexpr (std::is_same_v<M, CyclosMode>) {
            if (m.r == 0) throw std::invalid_argument("cyclos mode needs r >= 1");
          }
        }
      },
      cfg.mode);
}

}  // namespace

double search_objective(const SearchMode& mode, const IntPoly& t) {
  return std::visit(
      [&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DubMossGenMode>) {
          return bound_dubmoss_gen(m.n, m.m, t).value.value();
        } else if constexpr (std::is_same_v<M, PadicMode>) {
          return bound_padic(m.p, t).value.value();
        } else {
          return cyclos_rate(t, m.m, m.n, m.r).value;
        }
      },
      mode);
}

std::vector<IntPoly> enumerate_candidates(const SearchConfig& cfg) {
  const auto table = factor_table(cfg);
  std::vector<State> all;
  std::vector<State> frontier{State{}};
  while (!frontier.empty()) {
    std::vector<State> next;
    for (const auto& s : frontier) {
      for (auto& c : extend(s, table, cfg)) next.push_back(std::move(c));
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(), [&](const State& a, const State& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.picks.begin(), a.picks.end(), b.picks.begin(), b.picks.end(),
                                        [&](std::size_t x, std::size_t y) { return table[x].d < table[y].d; });
  });
  std::vector<IntPoly> out;
  out.reserve(all.size());
  for (auto& s : all) out.push_back(std::move(s.poly));
  return out;
}

SearchResult search_aux(const SearchConfig& cfg) {
  validate(cfg);
  const auto table = factor_table(cfg);
  if (table.empty()) throw std::invalid_argument("empty candidate set");

  SearchResult result;
  std::optional<State> best;
  std::vector<State> beam{State{}};
  while (!beam.empty()) {
    std::vector<State> level;
    for (const auto& s : beam) {
      for (auto& c : extend(s, table, cfg)) level.push_back(std::move(c));
    }
    for (auto& c : level) {
      c.objective = search_objective(cfg.mode, c.poly);
      ++result.evaluated;
      if (!best || improves(c.objective, best->objective)) result.trace.emplace_back(c.poly, c.objective);
      if (!best || better(c, *best)) best = c;
    }
    std::stable_sort(level.begin(), level.end(), better);
    if (level.size() > cfg.beam_width) level.resize(cfg.beam_width);
    beam = std::move(level);
  }
  result.best_t = best->poly;
  result.objective = best->objective;
  return result;
}

nlohmann::json mode_to_json(const SearchMode& mode) {
  return std::visit(
      [](const auto& m) -> nlohmann::json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, DubMossGenMode>) {
          return {{"name", "dubmoss_gen"}, {"n", m.n}, {"m", m.m.get_str()}};
        } else if constexpr (std::is_same_v<M, PadicMode>) {
          return {{"name", "padic"}, {"p", m.p.get_str()}};
        } else {
          return {{"name", "cyclos"}, {"m", m.m.get_str()}, {"n", m.n}, {"r", m.r}};
        }
      },
      mode);
}

nlohmann::json to_json(const SearchConfig& cfg, const SearchResult& result) {
  nlohmann::json j;
  j["mode"] = mode_to_json(cfg.mode);
  j["budget"] = cfg.degree_budget;
  j["d_max"] = cfg.d_max;
  j["beam_width"] = cfg.beam_width == std::numeric_limits<std::size_t>::max() ? nlohmann::json(nullptr)
                                                                                : nlohmann::json(cfg.beam_width);
  j["max_multiplicity"] = cfg.max_multiplicity;
  j["best_T"] = coeffs_to_json(result.best_t);
  j["objective"] = result.objective;
  j["evaluated"] = result.evaluated;
  auto& trace = j["trace"] = nlohmann::json::array();
  for (const auto& [t, v] : result.trace) trace.push_back({{"T", coeffs_to_json(t)}, {"objective", v}});
  return j;
}

}  // namespace lehmer
