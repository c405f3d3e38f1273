#include "monty/dominance.hpp"

namespace monty {

DominanceCertificate construct_dominator(const Strategy& strategy) {
  GameSize n = strategy.size();
  if (strategy.is_always_switching())
    return {strategy, strategy, std::nullopt};
  // Smallest door the strategy would Match on. Ties on "smallest" keep
  // certificates reproducible; any Match door works.
  for (Door y = 0; y < n.doors(); ++y) {
    if (y == strategy.chosen_door()) continue;
    if (strategy.action_at(y) == Action::kMatch)
      return {strategy, Strategy::always_switching(n, y), y};
  }
  throw TheoremViolationError("strategy " + strategy.label() +
                              " has no Match door yet claims not to be "
                              "always-switching");
}

bool weakly_dominates(const Strategy& s1, const Strategy& s2,
                      const PayoffTable& table) {
  return table.row_covers(table.row_of(s1), table.row_of(s2));
}

std::vector<DominanceCertificate> verify_dominance_theorem(
    const PayoffTable& table) {
  std::vector<DominanceCertificate> certificates;
  certificates.reserve(table.row_count());
  for (const Strategy& s : table.rows()) {
    DominanceCertificate cert = construct_dominator(s);
    std::size_t dominator_row = table.row_of(cert.dominator);
    std::size_t dominated_row = table.row_of(cert.dominated);
    if (!table.row_covers(dominator_row, dominated_row)) {
      // Identify the offending state for the error message.
      for (std::size_t j = 0; j < table.col_count(); ++j) {
        if (table.entry(dominator_row, j) < table.entry(dominated_row, j))
          throw TheoremViolationError(
              "dominance failed: " + cert.dominator.label() +
              " scores below " + cert.dominated.label() + " at state " +
              table.cols()[j].label());
      }
    }
    certificates.push_back(std::move(cert));
  }
  return certificates;
}

std::vector<DominanceCertificate> verify_dominance_theorem(GameSize n,
                                                           int cap) {
  return verify_dominance_theorem(PayoffTable::build(n, cap));
}

std::vector<Strictness> strictness_report(
    const std::vector<DominanceCertificate>& certificates,
    const PayoffTable& table) {
  std::vector<Strictness> report;
  report.reserve(certificates.size());
  for (const DominanceCertificate& cert : certificates) {
    if (cert.is_self()) {
      report.push_back(Strictness::kNotApplicable);
      continue;
    }
    std::size_t dominator_row = table.row_of(cert.dominator);
    std::size_t dominated_row = table.row_of(cert.dominated);
    bool strict = false;
    for (std::size_t j = 0; j < table.col_count() && !strict; ++j)
      strict = table.entry(dominator_row, j) > table.entry(dominated_row, j);
    report.push_back(strict ? Strictness::kStrictSomewhere
                            : Strictness::kEqualEverywhere);
  }
  return report;
}

}  // namespace monty
