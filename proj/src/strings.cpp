#include "spmech/strings.hpp"

#include <sstream>

namespace spmech {

std::string object_letter(ObjectId x) { return std::string(1, static_cast<char>('a' + x)); }

StrictOrder order_from_string(const std::string& text, int m) {
    const int len = static_cast<int>(text.size());
    if (m < 0) m = len;
    if (len != m) throw InputError("order '" + text + "' must rank all " + std::to_string(m) + " objects");
    std::vector<int> ranking;
    ranking.reserve(len);
    for (char c : text) {
        if (c < 'a' || c >= 'a' + m)
            throw InputError("order '" + text + "' contains an invalid object letter '" + std::string(1, c) + "'");
        ranking.push_back(c - 'a');
    }
    try {
        return StrictOrder::from_ranking(ranking);
    } catch (const DomainError&) {
        throw InputError("order '" + text + "' repeats an object");
    }
}

std::string order_to_string(const StrictOrder& order) {
    std::string out;
    for (int r = 0; r < order.m; ++r) out += static_cast<char>('a' + order.at_rank(r));
    return out;
}

PreferenceProfile profile_from_string(const std::string& text) {
    PreferenceProfile profile;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) profile.orders.push_back(order_from_string(token));
    if (profile.orders.empty()) throw InputError("empty preference profile");
    for (const auto& o : profile.orders)
        if (o.m != profile.orders[0].m) throw InputError("profile mixes orders of different lengths");
    return profile;
}

std::string profile_to_string(const PreferenceProfile& profile) {
    std::string out;
    for (int i = 0; i < profile.agent_count(); ++i) {
        if (i) out += ",";
        out += order_to_string(profile.of(i));
    }
    return out;
}

OpposingProfile opposing_from_string(const std::string& text, AgentId excluded) {
    PreferenceProfile listed = profile_from_string(text);
    const int n = listed.agent_count() + 1;
    if (excluded < 0 || excluded >= n) throw InputError("excluded agent out of range");
    OpposingProfile opp;
    opp.excluded = excluded;
    opp.orders.resize(n);
    int next = 0;
    for (AgentId j = 0; j < n; ++j) {
        if (j == excluded) {
            opp.orders[j] = listed.of(0); // placeholder, replaced by reports
            continue;
        }
        opp.orders[j] = listed.of(next++);
    }
    return opp;
}

std::string opposing_to_string(const OpposingProfile& opp) {
    std::string out;
    bool first = true;
    for (int j = 0; j < opp.agent_count(); ++j) {
        if (j == opp.excluded) continue;
        if (!first) out += ",";
        first = false;
        out += order_to_string(opp.orders[j]);
    }
    return out;
}

Assignment assignment_from_string(const std::string& text) {
    std::vector<int> objects;
    objects.reserve(text.size());
    for (char c : text) {
        if (c < 'a' || c > 'z') throw InputError("assignment '" + text + "' contains an invalid letter");
        objects.push_back(c - 'a');
    }
    try {
        return Assignment::from_vector(objects);
    } catch (const DomainError&) {
        throw InputError("assignment '" + text + "' repeats an object");
    }
}

std::string assignment_to_string(const Assignment& assignment) {
    std::string out;
    for (int i = 0; i < assignment.n; ++i) out += static_cast<char>('a' + assignment.of(i));
    return out;
}

} // namespace spmech
