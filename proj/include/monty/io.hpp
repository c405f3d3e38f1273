#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "monty/bayes.hpp"
#include "monty/dominance.hpp"
#include "monty/minimax.hpp"
#include "monty/montecarlo.hpp"

namespace monty {

// A parsed problem description. Prior and kernel default to uniform when
// the input omits them.
struct GameSpec {
  GameSize n;
  Prior prior;
  RevealKernel kernel;
};

// Accepts {"n": int, "prior": ["1/2", ...], "kernel": [["0", ...], ...]}
// with rationals as "num/den", integer, or decimal strings. Every failure
// names the offending field.
GameSpec parse_game_spec(const std::string& text);
GameSpec load_game_spec(const std::filesystem::path& path);

// Inverse of Strategy::label(): "x=<door>;map=<binary word>".
Strategy parse_strategy_label(GameSize n, std::string_view label);

// Fixed decimal rendering for report output, ten significant digits.
std::string format_double(double value);

// {"certificates": [{dominated, dominator, strict, witness}, ...], "n": n}
// with witness either a door label or "self".
nlohmann::json certificate_report(const PayoffTable& table,
                                  std::span<const DominanceCertificate> certs,
                                  std::span<const Strictness> strictness);

// {"n", "optimal": {"value", "x"}, "table": [{strategy, value}, ...],
//  "verified"}. The table row order is the canonical enumeration; it is
// empty when brute force was skipped.
nlohmann::json bayes_report(const GameSpec& spec, const BayesOptimum& optimum,
                            bool table_included, bool verified);

// {"n", "value", "row_security", "col_security", "is_saddle",
//  "fp": {"lower", "upper", "iters", "converged"}}, rationals as strings.
nlohmann::json saddle_report(GameSize n, const SaddleCheck& saddle,
                             const FictitiousPlayResult& fp);

// Header of quoted state labels, then one row of 0/1 entries per strategy,
// first cell the strategy label.
std::string payoff_table_csv(const PayoffTable& table);

struct SimulationRow {
  GameSize n;
  std::string strategy_label;
  SimulationResult result;
};

// Columns: n,strategy_label,trials,seed,wins,estimate,exact_value,std_err,
// z_score. Exact values stay rational strings; decimals use format_double.
std::string simulation_csv(std::span<const SimulationRow> rows);

// Serialized form used for every JSON artifact: two-space indent, sorted
// keys, trailing newline. Reparsing and re-rendering is byte-stable.
std::string json_text(const nlohmann::json& j);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace monty
