#include "spmech/audit.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "spmech/strings.hpp"

namespace spmech::audit {

namespace {

std::string agent_str(AgentId i) { return std::to_string(i); }

PreferenceProfile profile_at(const RuleTable& t, int64_t p) {
    return t.profiles.at(p);
}

// Digits of agent i's order inside a flattened (something, digit) index.
struct SpWitness {
    int64_t p;
    AgentId i;
    int64_t d;
};

Counterexample sp_counterexample(const RuleTable& t, const SpWitness& w) {
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, w.p)));
    cx.put("agent", agent_str(w.i));
    cx.put("deviation", order_to_string(all_orders(t.m)[w.d]));
    return cx;
}

} // namespace

Audited Audited::build(const RuleSpec& spec, int workers, int64_t budget) {
    Audited a{spec, build_rule_table(spec, workers, budget), {}, workers};
    a.menus = build_menu_masks(a.table);
    return a;
}

Audited Audited::build_fn(int n, int m, const std::string& name,
                          const std::function<Assignment(const PreferenceProfile&)>& fn, int workers,
                          int64_t budget) {
    RuleTable table(n, m, budget);
    table.packed.resize(table.count());
    PreferenceProfile scratch;
    for (int64_t p = 0; p < table.count(); ++p) { // serial: arbitrary fn may not be re-entrant
        table.profiles.decode(p, scratch);
        table.packed[p] = fn(scratch).pack();
    }
    Audited a{RuleSpec{}, std::move(table), {}, workers};
    a.spec.kind = RuleKind::Imposed; // placeholder kind; spec not used by table checks
    a.spec.n = n;
    a.spec.m = m;
    a.spec.name = name;
    a.menus = build_menu_masks(a.table);
    return a;
}

AuditReport check_strategy_proof(const Audited& a) {
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const auto& orders = all_orders(t.m);
    const int64_t count = t.count() * t.n * fact;

    auto pred = [&](int64_t idx) {
        const int64_t d = idx % fact;
        const int64_t rest = idx / fact;
        const AgentId i = static_cast<AgentId>(rest % t.n);
        const int64_t p = rest / t.n;
        const int64_t q = e.with_digit(p, i, d);
        const StrictOrder& truthful = orders[e.digit(p, i)];
        return truthful.rank(t.object_of(q, i)) < truthful.rank(t.object_of(p, i));
    };
    const int64_t hit = find_first(count, a.workers, pred);
    if (hit < 0) return AuditReport::passed("strategy-proofness", count);
    SpWitness w{hit / fact / t.n, static_cast<AgentId>((hit / fact) % t.n), hit % fact};
    return AuditReport::failed("strategy-proofness", sp_counterexample(t, w), count);
}

AuditReport check_hammond(const Audited& a) {
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const auto& orders = all_orders(t.m);
    const int64_t count = t.n * a.menus.opp_count * fact;

    auto pred = [&](int64_t idx) {
        const int64_t d = idx % fact;
        const int64_t rest = idx / fact;
        const int64_t opp = rest % a.menus.opp_count;
        const AgentId i = static_cast<AgentId>(rest / a.menus.opp_count);
        const uint32_t menu = a.menus.self_menu[i][opp];
        const int64_t p = e.compose(opp, i, d);
        return orders[d].top_among(menu) != t.object_of(p, i);
    };
    const int64_t hit = find_first(count, a.workers, pred);
    if (hit < 0) return AuditReport::passed("hammond-optimality", count);

    const int64_t d = hit % fact;
    const int64_t rest = hit / fact;
    const int64_t opp = rest % a.menus.opp_count;
    const AgentId i = static_cast<AgentId>(rest / a.menus.opp_count);
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, e.compose(opp, i, d))));
    cx.put("agent", agent_str(i));
    Menu menu{t.m, a.menus.self_menu[i][opp]};
    std::string items;
    for (ObjectId x : menu.sorted_items()) items += object_letter(x);
    cx.put("menu", items);
    return AuditReport::failed("hammond-optimality", cx, count);
}

AuditReport check_nonbossy(const Audited& a) {
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const int64_t count = t.n * a.menus.opp_count;

    auto scan = [&](int64_t idx, int64_t* d1, int64_t* d2) {
        const int64_t opp = idx % a.menus.opp_count;
        const AgentId i = static_cast<AgentId>(idx / a.menus.opp_count);
        std::array<int64_t, kMaxObjects> first_digit;
        first_digit.fill(-1);
        std::array<uint32_t, kMaxObjects> first_packed{};
        for (int64_t d = 0; d < fact; ++d) {
            const int64_t p = e.compose(opp, i, d);
            const ObjectId own = t.object_of(p, i);
            if (first_digit[own] < 0) {
                first_digit[own] = d;
                first_packed[own] = t.packed[p];
            } else if (first_packed[own] != t.packed[p]) {
                if (d1) *d1 = first_digit[own], *d2 = d;
                return true;
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, a.workers, [&](int64_t idx) { return scan(idx, nullptr, nullptr); });
    if (hit < 0) return AuditReport::passed("non-bossiness", count * fact);

    int64_t d1 = 0, d2 = 0;
    scan(hit, &d1, &d2);
    const int64_t opp = hit % a.menus.opp_count;
    const AgentId i = static_cast<AgentId>(hit / a.menus.opp_count);
    Counterexample cx;
    cx.put("agent", agent_str(i));
    cx.put("profile1", profile_to_string(profile_at(t, e.compose(opp, i, d1))));
    cx.put("profile2", profile_to_string(profile_at(t, e.compose(opp, i, d2))));
    return AuditReport::failed("non-bossiness", cx, count * fact);
}

AuditReport check_nonautarkic(const Audited& a) {
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const int64_t count = t.n * a.menus.opp_count;

    auto scan = [&](int64_t idx, int64_t* d1, int64_t* d2) {
        const int64_t opp = idx % a.menus.opp_count;
        const AgentId i = static_cast<AgentId>(idx / a.menus.opp_count);
        const uint32_t own_mask = 0xFu << (4 * i);
        std::vector<uint32_t> others;
        std::vector<uint8_t> own;
        std::vector<int64_t> digit;
        others.reserve(fact);
        for (int64_t d = 0; d < fact; ++d) {
            const int64_t p = e.compose(opp, i, d);
            const uint32_t rest = t.packed[p] & ~own_mask;
            const uint8_t mine = static_cast<uint8_t>(t.object_of(p, i));
            bool seen = false;
            for (size_t k = 0; k < others.size(); ++k) {
                if (others[k] == rest) {
                    if (own[k] != mine) {
                        if (d1) *d1 = digit[k], *d2 = d;
                        return true;
                    }
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                others.push_back(rest);
                own.push_back(mine);
                digit.push_back(d);
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, a.workers, [&](int64_t idx) { return scan(idx, nullptr, nullptr); });
    if (hit < 0) return AuditReport::passed("non-autarky", count * fact);

    int64_t d1 = 0, d2 = 0;
    scan(hit, &d1, &d2);
    const int64_t opp = hit % a.menus.opp_count;
    const AgentId i = static_cast<AgentId>(hit / a.menus.opp_count);
    Counterexample cx;
    cx.put("agent", agent_str(i));
    cx.put("profile1", profile_to_string(profile_at(t, e.compose(opp, i, d1))));
    cx.put("profile2", profile_to_string(profile_at(t, e.compose(opp, i, d2))));
    return AuditReport::failed("non-autarky", cx, count * fact);
}

AuditReport check_group_sp(const Audited& a, GroupSpMode mode) {
    if (mode == GroupSpMode::Papai) {
        AuditReport sp = check_strategy_proof(a);
        AuditReport nb = check_nonbossy(a);
        const int64_t work = sp.work + nb.work;
        if (sp.pass && nb.pass)
            return AuditReport::passed("group-strategy-proofness", work, "strategy-proof and non-bossy");
        AuditReport& bad = sp.pass ? nb : sp;
        Counterexample cx = *bad.counterexample;
        cx.put("via", bad.property);
        return AuditReport::failed("group-strategy-proofness", cx, work, "fails " + bad.property);
    }

    if (a.table.n != 3)
        throw CapacityError("direct group-strategy-proofness sweep is limited to n = 3");
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const auto& orders = all_orders(t.m);
    int64_t work = 0;

    for (int64_t p = 0; p < t.count(); ++p) {
        for (uint32_t coalition = 1; coalition < (1u << t.n); ++coalition) {
            std::vector<AgentId> members;
            for (int i = 0; i < t.n; ++i)
                if ((coalition >> i) & 1) members.push_back(i);
            const int k = static_cast<int>(members.size());
            int64_t reports = 1;
            for (int s = 0; s < k; ++s) reports *= fact;
            for (int64_t mis = 0; mis < reports; ++mis) {
                int64_t q = p, rest = mis;
                for (AgentId i : members) {
                    q = e.with_digit(q, i, rest % fact);
                    rest /= fact;
                }
                ++work;
                bool all_weak = true, some_strict = false;
                for (AgentId i : members) {
                    const StrictOrder& truthful = orders[e.digit(p, i)];
                    const int now = truthful.rank(t.object_of(q, i));
                    const int before = truthful.rank(t.object_of(p, i));
                    if (now > before) {
                        all_weak = false;
                        break;
                    }
                    if (now < before) some_strict = true;
                }
                if (all_weak && some_strict) {
                    Counterexample cx;
                    cx.put("profile", profile_to_string(profile_at(t, p)));
                    std::string who, lies;
                    int64_t r2 = mis;
                    for (AgentId i : members) {
                        if (!who.empty()) who += ",", lies += "|";
                        who += agent_str(i);
                        lies += order_to_string(orders[r2 % fact]);
                        r2 /= fact;
                    }
                    cx.put("coalition", who);
                    cx.put("misreport", lies);
                    return AuditReport::failed("group-strategy-proofness", cx, work, "direct sweep");
                }
            }
        }
    }
    return AuditReport::passed("group-strategy-proofness", work, "direct sweep");
}

AuditReport check_efficiency(const Audited& a) {
    const RuleTable& t = a.table;
    if (t.n != t.m) throw DomainError("efficiency sweep expects as many objects as agents");
    const auto& bijections = all_orders(t.n); // ranking read as agent -> object
    const auto& orders = all_orders(t.m);
    const int64_t nf = static_cast<int64_t>(bijections.size());
    const int64_t count = t.count() * nf;

    auto pred = [&](int64_t idx) {
        const int64_t b = idx % nf;
        const int64_t p = idx / nf;
        const StrictOrder& alt = bijections[b];
        bool strict = false;
        for (AgentId i = 0; i < t.n; ++i) {
            const StrictOrder& ri = orders[t.profiles.digit(p, i)];
            const int now = ri.rank(alt.ranking[i]);
            const int got = ri.rank(t.object_of(p, i));
            if (now > got) return false;
            if (now < got) strict = true;
        }
        return strict;
    };
    const int64_t hit = find_first(count, a.workers, pred);
    if (hit < 0) return AuditReport::passed("efficiency", count);

    const int64_t p = hit / nf;
    const StrictOrder& alt = bijections[hit % nf];
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, p)));
    std::vector<int> objects(alt.ranking.begin(), alt.ranking.begin() + t.n);
    cx.put("dominating", assignment_to_string(Assignment::from_vector(objects)));
    return AuditReport::failed("efficiency", cx, count);
}

AuditReport check_reallocation_proof(const Audited& a) {
    const RuleTable& t = a.table;
    const ProfileEnumerator& e = t.profiles;
    const int64_t fact = e.order_count();
    const auto& orders = all_orders(t.m);
    const int n = t.n;

    int64_t rest_count = 1;
    for (int k = 0; k < n - 2; ++k) rest_count *= fact;
    std::vector<std::pair<AgentId, AgentId>> pairs;
    for (AgentId i = 0; i < n; ++i)
        for (AgentId j = 0; j < n; ++j)
            if (i != j) pairs.emplace_back(i, j);

    auto embed_rest = [&](int64_t r, AgentId i, AgentId j) {
        int64_t p = 0;
        for (AgentId g = 0; g < n; ++g) {
            if (g == i || g == j) continue;
            p = e.with_digit(p, g, r % fact);
            r /= fact;
        }
        return p;
    };

    struct Violation {
        int64_t di, dj, mi, mj;
        AgentId i, j;
    };

    // A violating pair misreports so that (a) each misreport alone leaves
    // the misreporter's own object unchanged, (b) jointly both objects
    // move, and (c) swapping the two new objects leaves i weakly and j
    // strictly better off than the truthful outcome.
    auto scan_rest = [&](int64_t idx, Violation* out) {
        const auto [i, j] = pairs[idx / rest_count];
        const int64_t base = embed_rest(idx % rest_count, i, j);
        // objects of i and j over the (report_i, report_j) grid
        std::vector<uint8_t> grid_i(fact * fact), grid_j(fact * fact);
        for (int64_t a = 0; a < fact; ++a) {
            const int64_t pa = e.with_digit(base, i, a);
            for (int64_t b = 0; b < fact; ++b) {
                const int64_t q = e.with_digit(pa, j, b);
                grid_i[a * fact + b] = static_cast<uint8_t>(t.object_of(q, i));
                grid_j[a * fact + b] = static_cast<uint8_t>(t.object_of(q, j));
            }
        }
        bool moves_i = false, moves_j = false;
        for (int64_t k = 1; k < fact * fact && !(moves_i && moves_j); ++k) {
            moves_i |= grid_i[k] != grid_i[0];
            moves_j |= grid_j[k] != grid_j[0];
        }
        if (!moves_i || !moves_j) return false; // one side can never change, so nothing can swap
        std::vector<int32_t> safe_i, safe_j;
        for (int64_t di = 0; di < fact; ++di) {
            const StrictOrder& ri = orders[di];
            for (int64_t dj = 0; dj < fact; ++dj) {
                const StrictOrder& rj = orders[dj];
                const uint8_t tx = grid_i[di * fact + dj];
                const uint8_t ty = grid_j[di * fact + dj];
                safe_i.clear();
                safe_j.clear();
                for (int64_t mi = 0; mi < fact; ++mi)
                    if (mi != di && grid_i[mi * fact + dj] == tx) safe_i.push_back(static_cast<int32_t>(mi));
                for (int64_t mj = 0; mj < fact; ++mj)
                    if (mj != dj && grid_j[di * fact + mj] == ty) safe_j.push_back(static_cast<int32_t>(mj));
                for (int32_t mi : safe_i) {
                    for (int32_t mj : safe_j) {
                        const uint8_t x = grid_i[static_cast<int64_t>(mi) * fact + mj];
                        const uint8_t y = grid_j[static_cast<int64_t>(mi) * fact + mj];
                        if (x == tx || y == ty) continue;          // both assignments must move
                        if (ri.rank(y) > ri.rank(tx)) continue;    // i weakly gains from the swap
                        if (rj.rank(x) >= rj.rank(ty)) continue;   // j strictly gains
                        if (out) *out = Violation{di, dj, mi, mj, i, j};
                        return true;
                    }
                }
            }
        }
        return false;
    };

    const int64_t count = static_cast<int64_t>(pairs.size()) * rest_count;
    const int64_t hit = find_first(count, a.workers, [&](int64_t idx) { return scan_rest(idx, nullptr); });
    const int64_t work = count * fact * fact;
    if (hit < 0) return AuditReport::passed("reallocation-proofness", work);

    Violation v{};
    scan_rest(hit, &v);
    const int64_t base = embed_rest(hit % rest_count, v.i, v.j);
    const int64_t p = e.with_digit(e.with_digit(base, v.i, v.di), v.j, v.dj);
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, p)));
    cx.put("agent_i", agent_str(v.i));
    cx.put("agent_j", agent_str(v.j));
    cx.put("misreport_i", order_to_string(orders[v.mi]));
    cx.put("misreport_j", order_to_string(orders[v.mj]));
    return AuditReport::failed("reallocation-proofness", cx, work);
}

AuditReport pareto_dominates_rule(const Audited& a, const Audited& b) {
    const RuleTable& ta = a.table;
    const RuleTable& tb = b.table;
    if (ta.n != tb.n || ta.m != tb.m) throw DomainError("dominance comparison needs a common environment");
    const auto& orders = all_orders(ta.m);
    const int64_t count = ta.count() * ta.n;

    auto worse = [&](int64_t idx) {
        const AgentId i = static_cast<AgentId>(idx % ta.n);
        const int64_t p = idx / ta.n;
        const StrictOrder& ri = orders[ta.profiles.digit(p, i)];
        return ri.rank(ta.object_of(p, i)) > ri.rank(tb.object_of(p, i));
    };
    const int64_t bad = find_first(count, a.workers, worse);
    if (bad >= 0) {
        Counterexample cx;
        cx.put("profile", profile_to_string(profile_at(ta, bad / ta.n)));
        cx.put("agent", agent_str(static_cast<AgentId>(bad % ta.n)));
        cx.put("reason", "agent strictly worse under the first rule");
        return AuditReport::failed("pareto-dominance", cx, count);
    }
    auto better = [&](int64_t idx) {
        const AgentId i = static_cast<AgentId>(idx % ta.n);
        const int64_t p = idx / ta.n;
        const StrictOrder& ri = orders[ta.profiles.digit(p, i)];
        return ri.rank(ta.object_of(p, i)) < ri.rank(tb.object_of(p, i));
    };
    const int64_t strict = find_first(count, a.workers, better);
    if (strict < 0) {
        Counterexample cx;
        cx.put("reason", "no strict improvement anywhere");
        return AuditReport::failed("pareto-dominance", cx, 2 * count);
    }
    return AuditReport::passed("pareto-dominance", 2 * count);
}

namespace {

// Freedom comparison over menu masks: a grants i weakly more freedom than b
// (inclusion at every opposing profile).
bool freedom_geq_masks(const Audited& a, const Audited& b, AgentId i, int64_t* witness_opp) {
    for (int64_t opp = 0; opp < a.menus.opp_count; ++opp) {
        const uint32_t ma = a.menus.self_menu[i][opp];
        const uint32_t mb = b.menus.self_menu[i][opp];
        if ((ma & mb) != mb) {
            if (witness_opp) *witness_opp = opp;
            return false;
        }
    }
    return true;
}

bool freedom_strict_somewhere(const Audited& a, const Audited& b) {
    for (AgentId i = 0; i < a.table.n; ++i)
        for (int64_t opp = 0; opp < a.menus.opp_count; ++opp)
            if (a.menus.self_menu[i][opp] != b.menus.self_menu[i][opp]) return true;
    return false;
}

} // namespace

AuditReport freedom_dominates(const Audited& a, const Audited& b) {
    if (a.table.n != b.table.n || a.table.m != b.table.m)
        throw DomainError("freedom comparison needs a common environment");
    const int64_t work = a.table.n * a.menus.opp_count;
    for (AgentId i = 0; i < a.table.n; ++i) {
        int64_t opp = -1;
        if (!freedom_geq_masks(a, b, i, &opp)) {
            Counterexample cx;
            cx.put("agent", agent_str(i));
            cx.put("opposing", opposing_to_string(opposing_at(a.table.n, a.table.m, i, opp)));
            cx.put("reason", "menu not weakly larger");
            return AuditReport::failed("freedom-dominance", cx, work);
        }
    }
    if (!freedom_strict_somewhere(a, b)) {
        Counterexample cx;
        cx.put("reason", "no strictly larger menu anywhere");
        return AuditReport::failed("freedom-dominance", cx, work);
    }
    return AuditReport::passed("freedom-dominance", work);
}

AuditReport verify_thm_menu_pareto(const Audited& a, const Audited& b) {
    AuditReport dom = pareto_dominates_rule(a, b);

    bool freedom = true;
    for (AgentId i = 0; i < a.table.n && freedom; ++i) freedom = freedom_geq_masks(a, b, i, nullptr);
    const bool strict = freedom && freedom_strict_somewhere(a, b);
    const bool freedom_side = freedom && strict;

    const int64_t work = dom.work + a.table.n * a.menus.opp_count;
    std::ostringstream note;
    note << "dominance=" << (dom.pass ? "yes" : "no") << " freedom=" << (freedom_side ? "yes" : "no");
    if (dom.pass == freedom_side) return AuditReport::passed("menu-pareto-equivalence", work, note.str());

    Counterexample cx;
    cx.put("reason", "dominance and freedom sides disagree");
    if (dom.counterexample)
        for (auto& [k, v] : dom.counterexample->fields) cx.put("dominance_" + k, v);
    return AuditReport::failed("menu-pareto-equivalence", cx, work, note.str());
}

namespace {

struct FiberStats {
    int delta_self = 0;
    int delta_rest = 0;
    bool nonbossy = true;
    bool nonautarkic = true;
};

FiberStats fiber_stats(const Audited& a, AgentId i, int64_t opp) {
    const RuleTable& t = a.table;
    const int64_t fact = t.profiles.order_count();
    const uint32_t own_mask = 0xFu << (4 * i);
    FiberStats stats;
    stats.delta_self = a.menus.delta_self(i, opp);
    std::vector<uint32_t> rests;
    std::vector<uint8_t> owns;
    rests.reserve(fact);
    std::array<int64_t, kMaxObjects> own_to_rest;
    own_to_rest.fill(-1);
    for (int64_t d = 0; d < fact; ++d) {
        const int64_t p = t.profiles.compose(opp, i, d);
        const uint32_t rest = t.packed[p] & ~own_mask;
        const uint8_t own = static_cast<uint8_t>(t.object_of(p, i));
        int slot = -1;
        for (size_t k = 0; k < rests.size(); ++k)
            if (rests[k] == rest) {
                slot = static_cast<int>(k);
                break;
            }
        if (slot < 0) {
            rests.push_back(rest);
            owns.push_back(own);
        } else if (owns[slot] != own) {
            stats.nonautarkic = false; // same others, different own object
        }
        if (own_to_rest[own] < 0)
            own_to_rest[own] = static_cast<int64_t>(rest);
        else if (own_to_rest[own] != static_cast<int64_t>(rest))
            stats.nonbossy = false; // same own object, different rest
    }
    stats.delta_rest = static_cast<int>(rests.size());
    return stats;
}

} // namespace

AuditReport verify_lemma_fibers(const Audited& a) {
    const int64_t fact = a.table.profiles.order_count();
    bool all_nonautarkic = true, all_nonbossy = true, all_equal = true;
    int64_t work = 0;

    for (AgentId i = 0; i < a.table.n; ++i) {
        for (int64_t opp = 0; opp < a.menus.opp_count; ++opp) {
            work += fact;
            const FiberStats stats = fiber_stats(a, i, opp);
            all_nonautarkic &= stats.nonautarkic;
            all_nonbossy &= stats.nonbossy;
            all_equal &= stats.delta_rest == stats.delta_self;
            Counterexample cx;
            cx.put("agent", agent_str(i));
            cx.put("opposing", opposing_to_string(opposing_at(a.table.n, a.table.m, i, opp)));
            if (stats.nonbossy && stats.delta_rest > stats.delta_self) {
                cx.put("reason", "non-bossy fiber with delta_rest > delta_self");
                return AuditReport::failed("fiber-lemmas", cx, work);
            }
            if (stats.nonautarkic && stats.delta_rest < stats.delta_self) {
                cx.put("reason", "non-autarkic fiber with delta_rest < delta_self");
                return AuditReport::failed("fiber-lemmas", cx, work);
            }
        }
    }

    const int held = (all_nonautarkic ? 1 : 0) + (all_nonbossy ? 1 : 0) + (all_equal ? 1 : 0);
    std::ostringstream note;
    note << "non-autarkic=" << all_nonautarkic << " non-bossy=" << all_nonbossy << " delta-equal=" << all_equal;
    if (held == 2) {
        Counterexample cx;
        cx.put("reason", "two of the three clauses hold but the third fails");
        return AuditReport::failed("fiber-lemmas", cx, work, note.str());
    }
    return AuditReport::passed("fiber-lemmas", work, note.str());
}

AuditReport verify_extreme_menus(const Audited& a) {
    const RuleTable& t = a.table;
    std::vector<int> common(t.m);
    for (int r = 0; r < t.m; ++r) common[r] = t.m - 1 - r;
    const int64_t d = order_index(StrictOrder::from_ranking(common));
    int64_t p = 0;
    for (AgentId i = 0; i < t.n; ++i) p = t.profiles.with_digit(p, i, d);

    int64_t work = t.n;
    for (AgentId i = 0; i < t.n; ++i) {
        const ObjectId got = t.object_of(p, i);
        const int64_t opp = t.profiles.opposing_index(p, i);
        const uint32_t menu = a.menus.self_menu[i][opp];
        const uint32_t expected = (1u << (got + 1)) - 1; // everything ranked weakly below
        if (menu != expected) {
            Counterexample cx;
            cx.put("profile", profile_to_string(profile_at(t, p)));
            cx.put("agent", agent_str(i));
            cx.put("menu", [&] {
                std::string s;
                for (ObjectId x : Menu{t.m, menu}.sorted_items()) s += object_letter(x);
                return s;
            }());
            return AuditReport::failed("extreme-menus", cx, work);
        }
    }
    return AuditReport::passed("extreme-menus", work, "menu sizes realise 1.." + std::to_string(t.n));
}

AuditReport check_power_transitivity(const Audited& a) {
    const RuleTable& t = a.table;
    const int64_t count = t.count();

    auto scan = [&](int64_t p, AgentId* wi, AgentId* wj, AgentId* wk) {
        std::array<int64_t, kMaxObjects> opp;
        for (AgentId i = 0; i < t.n; ++i) opp[i] = t.profiles.opposing_index(p, i);
        for (AgentId i = 0; i < t.n; ++i)
            for (AgentId j = 0; j < t.n; ++j) {
                if (j == i || !a.menus.power(i, j, opp[i])) continue;
                for (AgentId k = 0; k < t.n; ++k) {
                    if (k == i || k == j || !a.menus.power(j, k, opp[j])) continue;
                    if (!a.menus.power(i, k, opp[i])) {
                        if (wi) *wi = i, *wj = j, *wk = k;
                        return true;
                    }
                }
            }
        return false;
    };
    const int64_t hit = find_first(count, a.workers, [&](int64_t p) { return scan(p, nullptr, nullptr, nullptr); });
    const int64_t work = count * t.n * t.n * t.n;
    if (hit < 0) return AuditReport::passed("power-transitivity", work);

    AgentId i = 0, j = 0, k = 0;
    scan(hit, &i, &j, &k);
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, hit)));
    cx.put("agent_i", agent_str(i));
    cx.put("agent_j", agent_str(j));
    cx.put("agent_k", agent_str(k));
    return AuditReport::failed("power-transitivity", cx, work);
}

AuditReport verify_lemma_inclusion_power(const Audited& a) {
    const RuleTable& t = a.table;
    const int64_t count = t.count();

    auto scan = [&](int64_t p, AgentId* wi, AgentId* wj) {
        for (AgentId i = 0; i < t.n; ++i) {
            const int64_t oi = t.profiles.opposing_index(p, i);
            for (AgentId j = 0; j < t.n; ++j) {
                if (j == i) continue;
                const int64_t oj = t.profiles.opposing_index(p, j);
                const uint32_t mi = a.menus.self_menu[i][oi];
                const uint32_t mj = a.menus.self_menu[j][oj];
                if ((mi & mj) == mj && !a.menus.power(i, j, oi)) {
                    if (wi) *wi = i, *wj = j;
                    return true;
                }
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, a.workers, [&](int64_t p) { return scan(p, nullptr, nullptr); });
    const int64_t work = count * t.n * t.n;
    if (hit < 0) return AuditReport::passed("menu-inclusion-power", work);

    AgentId i = 0, j = 0;
    scan(hit, &i, &j);
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, hit)));
    cx.put("agent_i", agent_str(i));
    cx.put("agent_j", agent_str(j));
    return AuditReport::failed("menu-inclusion-power", cx, work);
}

AuditReport verify_prop_menu_superset(const Audited& a) {
    const RuleTable& t = a.table;
    const int64_t count = t.count();

    auto scan = [&](int64_t p, AgentId* wi, AgentId* wj) {
        for (AgentId i = 0; i < t.n; ++i) {
            const int64_t oi = t.profiles.opposing_index(p, i);
            for (AgentId j = 0; j < t.n; ++j) {
                if (j == i) continue;
                const int64_t oj = t.profiles.opposing_index(p, j);
                const uint32_t mi = a.menus.self_menu[i][oi];
                const uint32_t mj = a.menus.self_menu[j][oj];
                const bool superset = (mi & mj) == mj;
                if (a.menus.power(i, j, oi) != superset) {
                    if (wi) *wi = i, *wj = j;
                    return true;
                }
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, a.workers, [&](int64_t p) { return scan(p, nullptr, nullptr); });
    const int64_t work = count * t.n * t.n;
    if (hit < 0) return AuditReport::passed("menu-superset-power", work);

    AgentId i = 0, j = 0;
    scan(hit, &i, &j);
    Counterexample cx;
    cx.put("profile", profile_to_string(profile_at(t, hit)));
    cx.put("agent_i", agent_str(i));
    cx.put("agent_j", agent_str(j));
    return AuditReport::failed("menu-superset-power", cx, work);
}

std::vector<bool> agents_with_full_menu(const Audited& a) {
    const uint32_t full = (1u << a.table.m) - 1;
    std::vector<bool> out(a.table.n, false);
    for (AgentId i = 0; i < a.table.n; ++i)
        for (int64_t opp = 0; opp < a.menus.opp_count; ++opp)
            if (a.menus.self_menu[i][opp] == full) {
                out[i] = true;
                break;
            }
    return out;
}

AuditReport verify_full_menu(const Audited& a, bool expect_all_agents) {
    const std::vector<bool> reach = agents_with_full_menu(a);
    const int64_t work = a.table.n * a.menus.opp_count;
    std::string bits;
    for (bool b : reach) bits += b ? '1' : '0';
    const bool all = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    if (expect_all_agents == all) return AuditReport::passed("full-menu-reach", work, "per-agent " + bits);
    Counterexample cx;
    cx.put("per_agent", bits);
    cx.put("expected", expect_all_agents ? "all agents reach a full menu" : "some agent never reaches a full menu");
    return AuditReport::failed("full-menu-reach", cx, work);
}

AuditReport check_balanced(const Audited& a) {
    const RuleTable& t = a.table;
    const auto& orders = all_orders(t.m);
    std::vector<int64_t> counts(static_cast<size_t>(t.n) * t.m, 0);
    tally_over(t.count(), a.workers, counts, [&](int64_t p, std::vector<int64_t>& local) {
        for (AgentId i = 0; i < t.n; ++i) {
            const int r = orders[t.profiles.digit(p, i)].rank(t.object_of(p, i));
            ++local[static_cast<size_t>(i) * t.m + r];
        }
    });
    const int64_t work = t.count() * t.n;
    for (int r = 0; r < t.m; ++r)
        for (AgentId i = 1; i < t.n; ++i)
            if (counts[static_cast<size_t>(i) * t.m + r] != counts[r]) {
                Counterexample cx;
                cx.put("rank", std::to_string(r + 1));
                cx.put("agent_counts", [&] {
                    std::string s;
                    for (AgentId k = 0; k < t.n; ++k) {
                        if (k) s += ",";
                        s += std::to_string(counts[static_cast<size_t>(k) * t.m + r]);
                    }
                    return s;
                }());
                return AuditReport::failed("balancedness", cx, work);
            }
    return AuditReport::passed("balancedness", work);
}

BilateralPower max_bilateral_power(const Audited& a) {
    BilateralPower best;
    for (AgentId i = 0; i < a.table.n; ++i)
        for (AgentId j = 0; j < a.table.n; ++j) {
            if (j == i) continue;
            for (int64_t opp = 0; opp < a.menus.opp_count; ++opp) {
                const int delta = a.menus.delta_pair(i, j, opp);
                if (delta > best.max_delta) best = BilateralPower{delta, i, j, opp};
            }
        }
    return best;
}

bool replay_counterexample(const RuleSpec& spec, const AuditReport& report) {
    if (report.pass || !report.counterexample) return false;
    const Counterexample& cx = *report.counterexample;
    if (cx.has("reason") && !cx.has("profile") && !cx.has("profile1")) return true; // informational

    if (report.property == "strategy-proofness" || report.property == "hammond-optimality") {
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        const AgentId i = std::stoi(cx.get("agent"));
        const Assignment truthful = evaluate(spec, profile);
        if (report.property == "strategy-proofness") {
            PreferenceProfile deviated = profile;
            deviated.orders[i] = order_from_string(cx.get("deviation"));
            return profile.of(i).prefers(evaluate(spec, deviated).of(i), truthful.of(i));
        }
        const Menu menu = menu_self(spec, i, OpposingProfile::drop(profile, i));
        return profile.of(i).top_among(menu.items_mask) != truthful.of(i);
    }
    if (report.property == "non-bossiness" || report.property == "non-autarky") {
        const AgentId i = std::stoi(cx.get("agent"));
        const Assignment a1 = evaluate(spec, profile_from_string(cx.get("profile1")));
        const Assignment a2 = evaluate(spec, profile_from_string(cx.get("profile2")));
        bool others_differ = false;
        for (AgentId j = 0; j < a1.n; ++j)
            if (j != i && a1.of(j) != a2.of(j)) others_differ = true;
        if (report.property == "non-bossiness") return a1.of(i) == a2.of(i) && others_differ;
        return a1.of(i) != a2.of(i) && !others_differ;
    }
    if (report.property == "group-strategy-proofness") {
        if (cx.has("via"))
            return replay_counterexample(spec, AuditReport{cx.get("via"), false, report.counterexample, 0, ""});
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        PreferenceProfile deviated = profile;
        std::stringstream who(cx.get("coalition")), lies(cx.get("misreport"));
        std::string tok_i, tok_o;
        std::vector<AgentId> members;
        while (std::getline(who, tok_i, ',') && std::getline(lies, tok_o, '|')) {
            const AgentId i = std::stoi(tok_i);
            members.push_back(i);
            deviated.orders[i] = order_from_string(tok_o);
        }
        const Assignment before = evaluate(spec, profile);
        const Assignment after = evaluate(spec, deviated);
        bool all_weak = true, some_strict = false;
        for (AgentId i : members) {
            if (profile.of(i).prefers(before.of(i), after.of(i))) all_weak = false;
            if (profile.of(i).prefers(after.of(i), before.of(i))) some_strict = true;
        }
        return all_weak && some_strict;
    }
    if (report.property == "efficiency") {
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        const Assignment alt = assignment_from_string(cx.get("dominating"));
        return assignment_pareto_dominates(alt, evaluate(spec, profile), profile);
    }
    if (report.property == "reallocation-proofness") {
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        const AgentId i = std::stoi(cx.get("agent_i"));
        const AgentId j = std::stoi(cx.get("agent_j"));
        PreferenceProfile only_i = profile, only_j = profile, both = profile;
        only_i.orders[i] = order_from_string(cx.get("misreport_i"));
        both.orders[i] = only_i.orders[i];
        only_j.orders[j] = order_from_string(cx.get("misreport_j"));
        both.orders[j] = only_j.orders[j];
        const Assignment before = evaluate(spec, profile);
        const Assignment after = evaluate(spec, both);
        const bool unilateral_safe = evaluate(spec, only_i).of(i) == before.of(i) &&
                                     evaluate(spec, only_j).of(j) == before.of(j);
        const bool moved = after.of(i) != before.of(i) && after.of(j) != before.of(j);
        const bool i_weak = !profile.of(i).prefers(before.of(i), after.of(j));
        const bool j_strict = profile.of(j).prefers(after.of(i), before.of(j));
        return unilateral_safe && moved && i_weak && j_strict;
    }
    if (report.property == "power-transitivity") {
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        const AgentId i = std::stoi(cx.get("agent_i"));
        const AgentId j = std::stoi(cx.get("agent_j"));
        const AgentId k = std::stoi(cx.get("agent_k"));
        return has_power_over(spec, i, j, OpposingProfile::drop(profile, i)) &&
               has_power_over(spec, j, k, OpposingProfile::drop(profile, j)) &&
               !has_power_over(spec, i, k, OpposingProfile::drop(profile, i));
    }
    if (report.property == "menu-superset-power") {
        const PreferenceProfile profile = profile_from_string(cx.get("profile"));
        const AgentId i = std::stoi(cx.get("agent_i"));
        const AgentId j = std::stoi(cx.get("agent_j"));
        const Menu mi = menu_self(spec, i, OpposingProfile::drop(profile, i));
        const Menu mj = menu_self(spec, j, OpposingProfile::drop(profile, j));
        return has_power_over(spec, i, j, OpposingProfile::drop(profile, i)) != mi.includes(mj);
    }
    throw DomainError("no replay handler for property " + report.property);
}

} // namespace spmech::audit
