#include "spmech/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>

namespace spmech {

int64_t factorial(int m) {
    int64_t f = 1;
    for (int k = 2; k <= m; ++k) f *= k;
    return f;
}

StrictOrder StrictOrder::from_ranking(const std::vector<int>& ranking) {
    const int m = static_cast<int>(ranking.size());
    if (m < 1 || m > kMaxObjects) throw CapacityError("order size out of range [1,8]: " + std::to_string(m));
    StrictOrder o;
    o.m = m;
    std::array<bool, kMaxObjects> seen{};
    for (int r = 0; r < m; ++r) {
        int x = ranking[r];
        if (x < 0 || x >= m || seen[x]) throw DomainError("ranking is not a permutation of 0.." + std::to_string(m - 1));
        seen[x] = true;
        o.ranking[r] = static_cast<uint8_t>(x);
        o.rank_of[x] = static_cast<uint8_t>(r);
    }
    return o;
}

ObjectId StrictOrder::top_among(uint32_t object_mask) const {
    for (int r = 0; r < m; ++r)
        if (object_mask & (1u << ranking[r])) return ranking[r];
    throw DomainError("top_among: empty object set");
}

bool StrictOrder::operator==(const StrictOrder& o) const {
    return m == o.m && std::equal(ranking.begin(), ranking.begin() + m, o.ranking.begin());
}

bool StrictOrder::operator<(const StrictOrder& o) const {
    return std::lexicographical_compare(ranking.begin(), ranking.begin() + m,
                                        o.ranking.begin(), o.ranking.begin() + o.m);
}

const std::vector<StrictOrder>& all_orders(int m) {
    if (m < 1 || m > kMaxObjects) throw CapacityError("order enumeration supports 1 <= m <= 8, got " + std::to_string(m));
    static std::vector<StrictOrder> tables[kMaxObjects + 1];
    static std::once_flag built[kMaxObjects + 1];
    std::call_once(built[m], [m] {
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<StrictOrder> out;
        out.reserve(factorial(m));
        do {
            out.push_back(StrictOrder::from_ranking(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        tables[m] = std::move(out);
    });
    return tables[m];
}

int order_index(const StrictOrder& order) {
    // Lehmer code: rank of the ranking sequence among all permutations.
    const int m = order.m;
    int64_t index = 0;
    for (int r = 0; r < m; ++r) {
        int smaller = 0;
        for (int s = r + 1; s < m; ++s)
            if (order.ranking[s] < order.ranking[r]) ++smaller;
        index += smaller * factorial(m - 1 - r);
    }
    return static_cast<int>(index);
}

OpposingProfile OpposingProfile::drop(const PreferenceProfile& profile, AgentId i) {
    if (i < 0 || i >= profile.agent_count()) throw DomainError("drop: agent out of range");
    OpposingProfile opp;
    opp.excluded = i;
    opp.orders = profile.orders;
    return opp;
}

PreferenceProfile OpposingProfile::with(const StrictOrder& order_i) const {
    PreferenceProfile p;
    p.orders = orders;
    p.orders[excluded] = order_i;
    return p;
}

Assignment Assignment::from_vector(const std::vector<int>& objects) {
    const int n = static_cast<int>(objects.size());
    if (n < 1 || n > kMaxObjects) throw CapacityError("assignment size out of range");
    Assignment a;
    a.n = n;
    uint32_t seen = 0;
    for (int i = 0; i < n; ++i) {
        int x = objects[i];
        if (x < 0 || x >= kMaxObjects || (seen & (1u << x))) throw DomainError("assignment is not injective");
        seen |= 1u << x;
        a.assigned[i] = static_cast<uint8_t>(x);
    }
    return a;
}

bool Assignment::operator==(const Assignment& o) const {
    return n == o.n && std::equal(assigned.begin(), assigned.begin() + n, o.assigned.begin());
}

uint32_t Assignment::pack() const {
    uint32_t v = 0;
    for (int i = 0; i < n; ++i) v |= static_cast<uint32_t>(assigned[i]) << (4 * i);
    return v;
}

Assignment Assignment::unpack(uint32_t v, int n) {
    Assignment a;
    a.n = n;
    for (int i = 0; i < n; ++i) a.assigned[i] = static_cast<uint8_t>((v >> (4 * i)) & 0xF);
    return a;
}

Submatching Submatching::from_pairs(std::vector<std::pair<AgentId, ObjectId>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Submatching s;
    uint32_t agents = 0, objects = 0;
    for (auto [i, x] : pairs) {
        if (i < 0 || i >= kMaxObjects || x < 0 || x >= kMaxObjects) throw DomainError("submatching index out of range");
        if (agents & (1u << i)) throw DomainError("agent appears twice in submatching");
        if (objects & (1u << x)) throw DomainError("object appears twice in submatching");
        agents |= 1u << i;
        objects |= 1u << x;
    }
    s.pairs = std::move(pairs);
    return s;
}

bool Submatching::matches_agent(AgentId i) const {
    for (auto& [a, x] : pairs)
        if (a == i) return true;
    return false;
}

bool Submatching::matches_object(ObjectId x) const {
    for (auto& [a, y] : pairs)
        if (y == x) return true;
    return false;
}

bool Submatching::contains(const Submatching& other) const {
    return std::includes(pairs.begin(), pairs.end(), other.pairs.begin(), other.pairs.end());
}

void Submatching::add(AgentId i, ObjectId x) {
    if (matches_agent(i) || matches_object(x)) throw DomainError("submatching add: duplicate agent or object");
    pairs.emplace_back(i, x);
    std::sort(pairs.begin(), pairs.end());
}

uint32_t Submatching::unmatched_agents(int n) const {
    uint32_t mask = (1u << n) - 1;
    for (auto& [a, x] : pairs) mask &= ~(1u << a);
    return mask;
}

uint32_t Submatching::unmatched_objects(int m) const {
    uint32_t mask = (1u << m) - 1;
    for (auto& [a, x] : pairs) mask &= ~(1u << x);
    return mask;
}

uint64_t Submatching::key(int n) const {
    uint64_t k = 0;
    for (auto& [a, x] : pairs) k |= static_cast<uint64_t>(x + 1) << (8 * a);
    (void)n;
    return k;
}

int64_t default_profile_budget() {
    if (const char* env = std::getenv("SPMECH_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw InputError("SPMECH_BUDGET must be a positive integer");
    }
    return 1000000000; // 10^9 evaluations: desk-scale contract
}

OrderEnumerator::OrderEnumerator(int m) : m_(m), count_(0) {
    if (m < 1 || m > kMaxObjects) throw CapacityError("order enumeration supports 1 <= m <= 8, got " + std::to_string(m));
    count_ = factorial(m);
}

const StrictOrder& OrderEnumerator::at(int64_t index) const {
    return all_orders(m_)[static_cast<size_t>(index)];
}

const StrictOrder* OrderEnumerator::begin() const { return all_orders(m_).data(); }
const StrictOrder* OrderEnumerator::end() const { return all_orders(m_).data() + count_; }

ProfileEnumerator::ProfileEnumerator(int n, int m, int64_t budget) : n_(n), m_(m) {
    if (n < 1 || n > kMaxObjects) throw CapacityError("profile enumeration supports 1 <= n <= 8 agents");
    if (m < 1 || m > kMaxObjects) throw CapacityError("order enumeration supports 1 <= m <= 8, got " + std::to_string(m));
    fact_ = factorial(m);
    int64_t count = 1;
    pow_[0] = 1;
    for (int i = 0; i < n; ++i) {
        if (count > budget / fact_)
            throw CapacityError("profile sweep needs " + std::to_string(n) + " x " + std::to_string(fact_) +
                                " digits, exceeding budget " + std::to_string(budget));
        count *= fact_;
        pow_[i + 1] = count;
    }
    count_ = count;
}

PreferenceProfile ProfileEnumerator::at(int64_t index) const {
    PreferenceProfile p;
    p.orders.resize(n_);
    decode(index, p);
    return p;
}

void ProfileEnumerator::decode(int64_t index, PreferenceProfile& out) const {
    const auto& table = all_orders(m_);
    out.orders.resize(n_);
    for (int i = 0; i < n_; ++i) out.orders[i] = table[static_cast<size_t>(digit(index, i))];
}

bool check_top_rich(const std::vector<StrictOrder>& domain, int m) {
    if (domain.empty()) throw DomainError("top-rich check needs a nonempty domain");
    uint32_t tops = 0;
    for (const auto& order : domain) tops |= 1u << order.top();
    return tops == (1u << m) - 1;
}

bool assignment_pareto_dominates(const Assignment& mu1, const Assignment& mu2,
                                 const PreferenceProfile& profile) {
    bool strict = false;
    for (int i = 0; i < mu1.n; ++i) {
        const int r1 = profile.of(i).rank(mu1.of(i));
        const int r2 = profile.of(i).rank(mu2.of(i));
        if (r1 > r2) return false;
        if (r1 < r2) strict = true;
    }
    return strict;
}

} // namespace spmech
