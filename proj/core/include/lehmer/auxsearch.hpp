#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lehmer/poly.hpp"

namespace lehmer {

struct DubMossGenMode {
  std::size_t n = 1;
  Integer m = 2;
};

struct PadicMode {
  Integer p = 2;
};

struct CyclosMode {
  Integer m = 2;
  std::size_t n = 1;
  std::size_t r = 1;
};

using SearchMode = std::variant<DubMossGenMode, PadicMode, CyclosMode>;

struct SearchConfig {
  SearchMode mode = PadicMode{};
  std::size_t degree_budget = 1;
  std::uint64_t d_max = 12;
  std::size_t beam_width = std::numeric_limits<std::size_t>::max();
  std::size_t max_multiplicity = 8;
};

struct SearchResult {
  IntPoly best_t;
  double objective = 0.0;
  std::vector<std::pair<IntPoly, double>> trace;  // strict improvements, in order found
  std::size_t evaluated = 0;
};

/// Score of T under the mode, straight from the bounds module.
double search_objective(const SearchMode& mode, const IntPoly& t);

/// Products of Phi_d^{e_d} with d <= d_max, e_d <= max_multiplicity and total
/// degree in [1, degree_budget], ordered by degree and then by the sorted list
/// of indices d.
std::vector<IntPoly> enumerate_candidates(const SearchConfig& cfg);

/// Beam search over the candidate products, extending one cyclotomic factor
/// per level. Objectives within a relative 1e-12 tie; ties prefer smaller
/// degree, then the lexicographically smaller coefficient vector. With an
/// unbounded beam the search is exhaustive.
/// Throws std::invalid_argument on a bad config or an empty candidate set.
SearchResult search_aux(const SearchConfig& cfg);

nlohmann::json mode_to_json(const SearchMode& mode);
nlohmann::json to_json(const SearchConfig& cfg, const SearchResult& result);

}  // namespace lehmer
