#ifndef SPMECH_REPRO_HPP
#define SPMECH_REPRO_HPP

#include <string>
#include <vector>

#include "spmech/report.hpp"

// Reproduction cookbook: one id per result the toolkit re-derives at desk
// scale. Each id drives the matching harnesses and aggregates their
// reports; the run passes when every expectation in the recipe holds.

namespace spmech::repro {

struct ReproResult {
    std::string id;
    std::vector<AuditReport> reports;
    bool pass = true;
};

const std::vector<std::string>& all_ids();
bool known_id(const std::string& id);

// Runs one recipe at the given environment size (3 or 4 for assignment
// recipes, voter count for the voting ones). Recipes that need a specific
// size clamp to it and say so in a report note.
ReproResult run(const std::string& id, int n, int workers = 0);

} // namespace spmech::repro

#endif
