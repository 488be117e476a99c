#ifndef SPMECH_STRINGS_HPP
#define SPMECH_STRINGS_HPP

#include <string>

#include "spmech/model.hpp"

// Preference string grammar: an order over m <= 26 objects is a string of
// distinct lowercase letters ("acb" means a > c > b); a profile is a
// comma-separated list of such orders ("abc,bca,cab"); an assignment lists
// each agent's object by agent index ("bca": agent 0 gets b).

namespace spmech {

std::string object_letter(ObjectId x);

StrictOrder order_from_string(const std::string& text, int m = -1);
std::string order_to_string(const StrictOrder& order);

PreferenceProfile profile_from_string(const std::string& text);
std::string profile_to_string(const PreferenceProfile& profile);

// n-1 comma-separated orders for the agents other than `excluded`, in
// ascending agent order.
OpposingProfile opposing_from_string(const std::string& text, AgentId excluded);
std::string opposing_to_string(const OpposingProfile& opp);

Assignment assignment_from_string(const std::string& text);
std::string assignment_to_string(const Assignment& assignment);

} // namespace spmech

#endif
