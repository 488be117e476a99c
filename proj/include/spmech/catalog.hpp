#ifndef SPMECH_CATALOG_HPP
#define SPMECH_CATALOG_HPP

#include <string>
#include <vector>

#include "spmech/model.hpp"
#include "spmech/rules.hpp"

// The rule catalog driven by the audit harnesses, together with the named
// witness profiles used by the characterisation suites. Every expectation
// listed here is checked by the test suites, none is assumed.

namespace spmech::catalog {

struct ExpectedProperties {
    bool strategy_proof = false;
    bool group_strategy_proof = false;
    bool efficient = false;
    bool nonbossy = false;
    bool nonautarkic = false;
    bool reallocation_proof = false;
    bool hierarchical = false;   // owner-only trading cycles
    bool ttc = false;
    bool bipolar_sd = false;
};

struct CatalogEntry {
    RuleSpec spec;
    ExpectedProperties expect;
};

// The six standard rules at n agents (n = 3 or 4): serial dictatorship,
// bipolar serial dictatorship, TTC, the broker trading-cycles rule, the
// imposed (constant) rule and the bossy demonstration rule.
std::vector<CatalogEntry> standard_catalog(int n);

// Owner-only rules instantiating the four structural ways a hierarchical
// exchange rule can fail to be a bipolar serial dictatorship; all at n = 4.
std::vector<CatalogEntry> structural_case_rules();

// Serial dictatorship broken on purpose: the second dictator is served
// with her reported order inverted. Fails strategy-proofness; negative
// control for the audit harnesses.
Assignment broken_sd_inverted(const std::vector<AgentId>& order, const PreferenceProfile& profile);

// ---- named witness profiles -------------------------------------------------

// All agents share the order object m-1 > m-2 > ... > 0.
PreferenceProfile identical_preferences_profile(int n);

// Opposing profile under which every report of agent i joins a trading
// cycle and buys any object: the other agents point cyclically along
// agent order, own endowment last.
OpposingProfile ttc_grand_cycle_opposing(const std::vector<ObjectId>& endowment, AgentId i);

// Opposing profile giving agent i full bilateral power over agent j under
// TTC: everyone tops i's endowment and ranks the rest along a base order
// that ends at j's endowment, own endowment last.
OpposingProfile ttc_rotational_opposing(const std::vector<ObjectId>& endowment, AgentId i, AgentId j);

// The non-transitive power pattern of the broker rule: agent 0 (broker of
// object 0) tops object 1, agent 1 tops object 2, agent 2 tops object 0;
// any further agents top their own endowment.
PreferenceProfile broker_example_profile(int n);

} // namespace spmech::catalog

#endif
