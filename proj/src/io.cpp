#include "monty/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace monty {

namespace {

using nlohmann::json;

Rational parse_rational_field(const json& node, const std::string& field) {
  if (!node.is_string())
    throw ValidationError(field + ": expected a rational string like \"1/2\"");
  try {
    return Rational::parse(node.get<std::string>());
  } catch (const std::exception& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_array(const json& node,
                                           const std::string& field) {
  if (!node.is_array())
    throw ValidationError(field + ": expected an array of rational strings");
  std::vector<Rational> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i)
    out.push_back(
        parse_rational_field(node[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

int parse_int_field(std::string_view text, std::string_view what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw ValidationError(std::string(what) + ": expected an integer, got '" +
                          std::string(text) + "'");
  return value;
}

}  // namespace

GameSpec parse_game_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("spec: expected a JSON object");
  if (!doc.contains("n")) throw ValidationError("n: missing");
  if (!doc["n"].is_number_integer())
    throw ValidationError("n: expected an integer");
  GameSize n(doc["n"].get<int>());

  Prior prior = Prior::uniform(n);
  if (doc.contains("prior")) {
    try {
      prior = Prior(n, parse_rational_array(doc["prior"], "prior"));
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(std::string("prior: ") + e.what());
    }
  }

  RevealKernel kernel = RevealKernel::uniform(n);
  if (doc.contains("kernel")) {
    const json& rows = doc["kernel"];
    if (!rows.is_array())
      throw ValidationError("kernel: expected an array of rows");
    std::vector<std::vector<Rational>> parsed;
    parsed.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      parsed.push_back(parse_rational_array(
          rows[r], "kernel[" + std::to_string(r) + "]"));
    try {
      kernel = RevealKernel(n, std::move(parsed));
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw ValidationError(std::string("kernel: ") + e.what());
    }
  }

  for (const char* key : {"prior", "kernel", "n"}) doc.erase(key);
  if (!doc.empty())
    throw ValidationError(doc.begin().key() + ": unknown field");

  return GameSpec{n, std::move(prior), std::move(kernel)};
}

GameSpec load_game_spec(const std::filesystem::path& path) {
  return parse_game_spec(read_text_file(path));
}

Strategy parse_strategy_label(GameSize n, std::string_view label) {
  constexpr std::string_view kPick = "x=";
  constexpr std::string_view kMap = ";map=";
  auto sep = label.find(kMap);
  if (!label.starts_with(kPick) || sep == std::string_view::npos)
    throw ValidationError("strategy label must look like \"x=0;map=11\", "
                          "got '" + std::string(label) + "'");
  Door x = parse_int_field(label.substr(kPick.size(), sep - kPick.size()),
                           "strategy door");
  std::string_view map = label.substr(sep + kMap.size());
  if (map.size() != static_cast<std::size_t>(n.doors() - 1))
    throw ValidationError("strategy map needs " +
                          std::to_string(n.doors() - 1) + " bits, got '" +
                          std::string(map) + "'");
  std::uint64_t word = 0;
  for (char c : map) {
    if (c != '0' && c != '1')
      throw ValidationError("strategy map must be binary, got '" +
                            std::string(map) + "'");
    word = (word << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return Strategy::from_word(n, x, word);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

nlohmann::json certificate_report(const PayoffTable& table,
                                  std::span<const DominanceCertificate> certs,
                                  std::span<const Strictness> strictness) {
  json list = json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    const DominanceCertificate& cert = certs[i];
    json entry;
    entry["dominated"] = {{"x", cert.dominated.chosen_door()},
                          {"map", cert.dominated.map_string()}};
    entry["dominator"] = {{"x", cert.dominator.chosen_door()},
                          {"map", cert.dominator.map_string()}};
    if (cert.is_self())
      entry["witness"] = "self";
    else
      entry["witness"] = *cert.witness_door;
    entry["strict"] =
        i < strictness.size() && strictness[i] == Strictness::kStrictSomewhere;
    list.push_back(std::move(entry));
  }
  return json{{"n", table.size().doors()}, {"certificates", std::move(list)}};
}

nlohmann::json bayes_report(const GameSpec& spec, const BayesOptimum& optimum,
                            bool table_included, bool verified) {
  json table = json::array();
  if (table_included) {
    for (const Strategy& s : enumerate_strategies(spec.n))
      table.push_back(
          {{"strategy", s.label()},
           {"value", win_probability(s, spec.prior, spec.kernel).str()}});
  }
  return json{{"n", spec.n.doors()},
              {"optimal", {{"x", optimum.strategy.chosen_door()},
                           {"value", optimum.value.str()}}},
              {"table", std::move(table)},
              {"verified", verified}};
}

nlohmann::json saddle_report(GameSize n, const SaddleCheck& saddle,
                             const FictitiousPlayResult& fp) {
  return json{{"n", n.doors()},
              {"value", saddle.value().str()},
              {"row_security", saddle.row_security.str()},
              {"col_security", saddle.col_security.str()},
              {"is_saddle", saddle.is_saddle},
              {"fp", {{"lower", fp.lower.str()},
                      {"upper", fp.upper.str()},
                      {"iters", fp.iterations},
                      {"converged", fp.converged}}}};
}

std::string payoff_table_csv(const PayoffTable& table) {
  std::ostringstream out;
  out << "strategy";
  // State labels carry a comma, so the header cells are quoted.
  for (const AdversaryState& state : table.cols())
    out << ",\"" << state.label() << '"';
  out << '\n';
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    out << table.rows()[r].label();
    for (std::size_t c = 0; c < table.col_count(); ++c)
      out << ',' << table.entry(r, c);
    out << '\n';
  }
  return out.str();
}

std::string simulation_csv(std::span<const SimulationRow> rows) {
  std::ostringstream out;
  out << "n,strategy_label,trials,seed,wins,estimate,exact_value,std_err,"
         "z_score\n";
  for (const SimulationRow& row : rows) {
    const SimulationResult& r = row.result;
    double exact = r.exact_value.to_double();
    double z = r.standard_error > 0
                   ? (r.estimate - exact) / r.standard_error
                   : 0.0;
    out << row.n.doors() << ',' << row.strategy_label << ',' << r.trials
        << ',' << r.seed << ',' << r.wins << ',' << format_double(r.estimate)
        << ',' << r.exact_value.str() << ','
        << format_double(r.standard_error) << ',' << format_double(z) << '\n';
  }
  return out.str();
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open " + path.string() +
                                  " for writing");
  out << content;
  if (!out.flush())
    throw ValidationError("write to " + path.string() + " failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace monty
