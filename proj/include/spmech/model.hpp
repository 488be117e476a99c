#ifndef SPMECH_MODEL_HPP
#define SPMECH_MODEL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "spmech/errors.hpp"

namespace spmech {

// Agents and objects are dense 0-based indices. Letters (a=0, b=1, ...)
// appear only in CLI I/O.
using AgentId = int;
using ObjectId = int;

constexpr int kMaxObjects = 8; // factorial guard: 8! = 40320 orders

int64_t factorial(int m);

// Total strict ranking of m objects. ranking[0] is the most preferred
// object; rank_of is the inverse permutation.
struct StrictOrder {
    int m = 0;
    std::array<uint8_t, kMaxObjects> ranking{};
    std::array<uint8_t, kMaxObjects> rank_of{};

    static StrictOrder from_ranking(const std::vector<int>& ranking);

    ObjectId top() const { return ranking[0]; }
    ObjectId at_rank(int r) const { return ranking[r]; }
    // 0-based position of x; 0 = most preferred.
    int rank(ObjectId x) const { return rank_of[x]; }
    bool prefers(ObjectId x, ObjectId y) const { return rank_of[x] < rank_of[y]; }
    // Most preferred object among the set given as a bitmask.
    ObjectId top_among(uint32_t object_mask) const;

    bool operator==(const StrictOrder& o) const;
    bool operator<(const StrictOrder& o) const; // lexicographic by ranking
};

// All m! strict orders over m objects in lexicographic order of their
// ranking sequence. The table is built once per m and cached.
const std::vector<StrictOrder>& all_orders(int m);

// Index of an order within all_orders(m) (lexicographic / Lehmer rank).
int order_index(const StrictOrder& order);

// One strict order per agent.
struct PreferenceProfile {
    std::vector<StrictOrder> orders;

    int agent_count() const { return static_cast<int>(orders.size()); }
    int object_count() const { return orders.empty() ? 0 : orders[0].m; }
    const StrictOrder& of(AgentId i) const { return orders[i]; }
};

// One strict order per agent except `excluded`.
struct OpposingProfile {
    AgentId excluded = 0;
    std::vector<StrictOrder> orders; // indexed by original agent id, entry for `excluded` unused

    static OpposingProfile drop(const PreferenceProfile& profile, AgentId i);
    PreferenceProfile with(const StrictOrder& order_i) const;
    int agent_count() const { return static_cast<int>(orders.size()); }
};

// Injective assignment of objects to agents; a bijection when m == n.
struct Assignment {
    int n = 0;
    std::array<uint8_t, kMaxObjects> assigned{};

    static Assignment from_vector(const std::vector<int>& objects);

    ObjectId of(AgentId i) const { return assigned[i]; }
    void set(AgentId i, ObjectId x) { assigned[i] = static_cast<uint8_t>(x); }
    bool operator==(const Assignment& o) const;
    bool operator!=(const Assignment& o) const { return !(*this == o); }

    // 4 bits per agent; canonical dense encoding for sweep tables.
    uint32_t pack() const;
    static Assignment unpack(uint32_t v, int n);
};

// Partial injective matching of agents to objects, canonically encoded as
// the pair list sorted by agent. Usable as a lookup key.
struct Submatching {
    std::vector<std::pair<AgentId, ObjectId>> pairs; // sorted by agent, unique agents/objects

    static Submatching empty() { return {}; }
    static Submatching from_pairs(std::vector<std::pair<AgentId, ObjectId>> pairs);

    int size() const { return static_cast<int>(pairs.size()); }
    bool proper(int n) const { return size() < n; }
    bool matches_agent(AgentId i) const;
    bool matches_object(ObjectId x) const;
    bool contains(const Submatching& other) const; // other ⊆ this
    void add(AgentId i, ObjectId x);

    uint32_t unmatched_agents(int n) const;  // bitmask
    uint32_t unmatched_objects(int m) const; // bitmask

    // One byte per agent slot: 0 = unmatched, object+1 otherwise.
    uint64_t key(int n) const;

    bool operator==(const Submatching& o) const { return pairs == o.pairs; }
    bool operator<(const Submatching& o) const { return pairs < o.pairs; }
};

// Projection of outcomes to the part an agent cares about. For assignment
// problems this is the agent's own object; for binary voting the identity.
struct RelevanceMap {
    std::function<int(AgentId, const Assignment&)> project;

    static RelevanceMap own_object() {
        return RelevanceMap{[](AgentId i, const Assignment& a) { return a.of(i); }};
    }
};

// ---- enumerators ---------------------------------------------------------

int64_t default_profile_budget(); // honours SPMECH_BUDGET

// Lazy view over all m! orders; also usable as a random-access decoder so
// sweeps can split the index range across workers.
class OrderEnumerator {
public:
    explicit OrderEnumerator(int m); // throws CapacityError unless 1 <= m <= 8
    int64_t count() const { return count_; }
    const StrictOrder& at(int64_t index) const;

    // iteration support: for (const StrictOrder& o : OrderEnumerator(m))
    const StrictOrder* begin() const;
    const StrictOrder* end() const;

private:
    int m_;
    int64_t count_;
};

// Lazy view over all (m!)^n preference profiles in mixed-radix order: the
// profile with index p assigns agent i the order with index
// (p / (m!)^i) % m!. Agent 0 is the least significant digit.
class ProfileEnumerator {
public:
    ProfileEnumerator(int n, int m, int64_t budget = default_profile_budget());
    int64_t count() const { return count_; }
    PreferenceProfile at(int64_t index) const;
    void decode(int64_t index, PreferenceProfile& out) const; // reuses storage

    int n() const { return n_; }
    int m() const { return m_; }
    int64_t order_count() const { return fact_; }

    // Mixed-radix helpers shared by the sweep kernels.
    int64_t digit(int64_t index, AgentId i) const { return (index / pow_[i]) % fact_; }
    int64_t with_digit(int64_t index, AgentId i, int64_t d) const {
        return index + (d - digit(index, i)) * pow_[i];
    }
    // Index of the opposing profile (digits of all agents except i),
    // in [0, (m!)^(n-1)).
    int64_t opposing_index(int64_t index, AgentId i) const {
        int64_t high = index / (pow_[i] * fact_);
        return index % pow_[i] + high * pow_[i];
    }
    int64_t opposing_count() const { return count_ / fact_; }
    // Inverse of opposing_index: full profile index from (opp, digit of i).
    int64_t compose(int64_t opp_index, AgentId i, int64_t d) const {
        int64_t low = opp_index % pow_[i];
        int64_t high = opp_index / pow_[i];
        return low + d * pow_[i] + high * pow_[i] * fact_;
    }

private:
    int n_, m_;
    int64_t fact_, count_;
    std::array<int64_t, kMaxObjects + 1> pow_{};
};

// ---- predicates ----------------------------------------------------------

// True iff every object is the unique top of at least one order in `domain`.
bool check_top_rich(const std::vector<StrictOrder>& domain, int m);

// True iff every agent weakly prefers mu1's object over mu2's and at least
// one agent strictly prefers it.
bool assignment_pareto_dominates(const Assignment& mu1, const Assignment& mu2,
                                 const PreferenceProfile& profile);

} // namespace spmech

#endif
