#include "uvb/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace uvb {

namespace detail {
// elimination.cpp
std::optional<std::vector<std::map<uint32_t, Int>>> eliminate_all(
    std::vector<CoefPoly> eqs, std::vector<uint32_t> vars, uint64_t& nodes);
}

namespace {

struct CapReached {};

CoefPoly strip_content(const CoefPoly& p) {
    Int c = p.content();
    if (c == 0 || c == 1) return p;
    CoefPoly q;
    for (auto& [m, v] : p.terms()) q += CoefPoly::monomial(m, v / c);
    return q;
}

// Unit-coefficient linear substitutions applied to exhaustion, with content
// normalization. Preserves the solution set exactly (no box involved);
// substitution expressions are replayed in reverse to rebuild full tuples.
struct Propagated {
    std::vector<CoefPoly> eqs;
    std::vector<std::pair<uint32_t, CoefPoly>> subs;  // in application order
    std::vector<uint32_t> free_vars;
    bool inconsistent = false;
};

Propagated propagate(std::vector<CoefPoly> eqs, size_t var_count,
                     bool enabled) {
    Propagated out;
    std::vector<bool> substituted(var_count, false);
    for (auto& e : eqs) e = strip_content(e);
    bool changed = enabled;
    while (changed) {
        changed = false;
        for (size_t e = 0; e < eqs.size() && !changed; ++e) {
            if (eqs[e].is_zero()) continue;
            if (eqs[e].is_constant()) {
                out.inconsistent = true;
                break;
            }
            for (uint32_t v : eqs[e].variables()) {
                auto lin = eqs[e].isolate_linear(v);
                if (!lin) continue;
                if (lin->coef != 1 && lin->coef != -1) continue;
                CoefPoly rest = CoefPoly::from_terms(lin->rest);
                CoefPoly value = lin->coef == 1 ? -rest : rest;
                for (auto& f : eqs)
                    if (f.contains(v)) f = strip_content(f.substitute(v, value));
                out.subs.emplace_back(v, std::move(value));
                substituted[v] = true;
                changed = true;
                break;
            }
        }
        if (out.inconsistent) break;
    }
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) {
            out.inconsistent = true;
            continue;
        }
        out.eqs.push_back(std::move(e));
    }
    for (uint32_t v = 0; v < var_count; ++v)
        if (!substituted[v]) out.free_vars.push_back(v);
    return out;
}

class BoxSearch {
public:
    BoxSearch(const SolverConfig& cfg, bool node_propagation)
        : cfg_(cfg), node_propagation_(node_propagation) {}

    uint64_t nodes = 0;
    bool cap_exceeded = false;
    // full assignments: branch values plus replayed node substitutions
    std::vector<std::map<uint32_t, Int>> found;

    void run(std::vector<CoefPoly> eqs, std::vector<uint32_t> free_vars) {
        std::map<uint32_t, Int> assign;
        try {
            dfs(std::move(eqs), std::move(free_vars), assign);
        } catch (const CapReached&) {
            cap_exceeded = true;
        }
    }

private:
    const SolverConfig& cfg_;
    bool node_propagation_;
    std::vector<std::pair<uint32_t, CoefPoly>> sub_stack_;

    void record(const std::map<uint32_t, Int>& assign) {
        if (found.size() >= cfg_.max_solutions) throw CapReached{};
        std::map<uint32_t, Int> full = assign;
        std::vector<Int> dense;
        auto value_of = [&](uint32_t v) -> Int& {
            if (dense.size() <= v) dense.resize(v + 1, 0);
            return dense[v];
        };
        for (auto& [v, val] : assign) value_of(v) = val;
        for (auto it = sub_stack_.rbegin(); it != sub_stack_.rend(); ++it) {
            Int val = it->second.evaluate_total(dense);
            value_of(it->first) = val;
            full[it->first] = val;
        }
        found.push_back(std::move(full));
    }

    void branch(const std::vector<CoefPoly>& eqs,
                const std::vector<uint32_t>& free_vars,
                std::map<uint32_t, Int>& assign, uint32_t var,
                const Int& value) {
        std::vector<CoefPoly> next;
        next.reserve(eqs.size());
        for (auto& e : eqs) {
            if (!e.contains(var)) {
                next.push_back(e);
                continue;
            }
            CoefPoly f = e.substitute(var, value);
            if (f.is_zero()) continue;
            if (f.is_constant()) return;  // nonzero constant: dead branch
            next.push_back(std::move(f));
        }
        std::vector<uint32_t> rest;
        rest.reserve(free_vars.size() - 1);
        for (uint32_t v : free_vars)
            if (v != var) rest.push_back(v);
        assign[var] = value;
        dfs(std::move(next), std::move(rest), assign);
        assign.erase(var);
    }

    // propagation at a node; false when a contradiction surfaced
    bool node_propagate(std::vector<CoefPoly>& eqs,
                        std::vector<uint32_t>& free_vars) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& e : eqs) {
                if (e.is_zero()) continue;
                e = strip_content(e);
                if (e.is_constant()) return false;
                for (uint32_t v : e.variables()) {
                    auto lin = e.isolate_linear(v);
                    if (!lin || (lin->coef != 1 && lin->coef != -1)) continue;
                    CoefPoly rest = CoefPoly::from_terms(lin->rest);
                    CoefPoly value = lin->coef == 1 ? -rest : rest;
                    for (auto& f : eqs)
                        if (f.contains(v)) f = f.substitute(v, value);
                    sub_stack_.emplace_back(v, std::move(value));
                    std::erase(free_vars, v);
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
        std::erase_if(eqs, [](const CoefPoly& e) { return e.is_zero(); });
        for (auto& e : eqs)
            if (e.is_constant()) return false;
        return true;
    }

    void dfs(std::vector<CoefPoly> eqs, std::vector<uint32_t> free_vars,
             std::map<uint32_t, Int>& assign) {
        ++nodes;
        size_t stack_mark = sub_stack_.size();
        bool alive = true;
        if (node_propagation_) alive = node_propagate(eqs, free_vars);

        if (alive) {
            if (free_vars.empty()) {
                bool all_zero = true;
                for (auto& e : eqs)
                    if (!e.is_zero()) all_zero = false;
                if (all_zero) record(assign);
            } else if (const auto pin = find_pinned(eqs); pin) {
                for (const Int& r : pin->second)
                    branch(eqs, free_vars, assign, pin->first, r);
            } else {
                uint32_t var = pick_branch_var(eqs, free_vars);
                for (long long r = 0; r <= cfg_.bound; ++r) {
                    branch(eqs, free_vars, assign, var, Int(r));
                    if (r > 0) branch(eqs, free_vars, assign, var, Int(-r));
                }
            }
        }
        sub_stack_.resize(stack_mark);
    }

    // an equation constraining a single remaining unknown, with its roots
    std::optional<std::pair<uint32_t, std::vector<Int>>> find_pinned(
        const std::vector<CoefPoly>& eqs) const {
        std::optional<std::pair<uint32_t, std::vector<Int>>> best;
        for (auto& e : eqs) {
            auto vars = e.variables();
            if (vars.size() != 1) continue;
            uint32_t v = vars[0];
            auto uni = e.univariate_in(v);
            std::vector<Int> coeffs(uni.size());
            for (size_t d = 0; d < uni.size(); ++d)
                coeffs[d] = uni[d].constant_term();
            std::vector<Int> roots;
            if (uni.size() == 2) {
                // linear c*x + d = 0: exact divisibility pruning
                if (coeffs[0] % coeffs[1] == 0)
                    roots.push_back(-coeffs[0] / coeffs[1]);
            } else {
                roots = detail::integer_roots(coeffs, cfg_.bound);
            }
            std::erase_if(roots, [&](const Int& r) {
                return r > cfg_.bound || r < -cfg_.bound;
            });
            if (!best || roots.size() < best->second.size()) {
                best = {v, std::move(roots)};
                if (best->second.size() <= 1) break;
            }
        }
        return best;
    }

    // most constrained variable: highest occurrence count, lowest id
    uint32_t pick_branch_var(const std::vector<CoefPoly>& eqs,
                             const std::vector<uint32_t>& free_vars) const {
        if (eqs.empty()) return free_vars.front();
        std::map<uint32_t, int> occ;
        for (auto& e : eqs)
            for (uint32_t v : e.variables()) ++occ[v];
        uint32_t var = free_vars.front();
        int best_occ = -1;
        for (uint32_t v : free_vars) {
            auto it = occ.find(v);
            int o = it == occ.end() ? 0 : it->second;
            if (o > best_occ) {
                best_occ = o;
                var = v;
            }
        }
        return var;
    }
};

}  // namespace

SolutionSet solve(const ConstraintSystem& sys, const SolverConfig& cfg) {
    if (cfg.bound < 1) throw std::invalid_argument("solver bound must be >= 1");
    auto t0 = std::chrono::steady_clock::now();

    std::vector<CoefPoly> eqs;
    for (auto& e : sys.equations()) eqs.push_back(e.poly);
    size_t m = sys.unknown_count();

    bool hybrid = cfg.strategy != SolverConfig::Strategy::dfs;
    Propagated prop = propagate(std::move(eqs), m, hybrid);

    SolutionSet out;
    out.bound = cfg.bound;
    out.completeness = Completeness::box_bounded;

    std::vector<std::map<uint32_t, Int>> partial;
    if (!prop.inconsistent) {
        bool elim_done = false;
        if (cfg.strategy == SolverConfig::Strategy::elim) {
            auto res =
                detail::eliminate_all(prop.eqs, prop.free_vars, out.stats.nodes);
            if (res) {
                partial = std::move(*res);
                out.completeness = Completeness::elimination_complete;
                elim_done = true;
                if (partial.size() > cfg.max_solutions) {
                    partial.resize(cfg.max_solutions);
                    out.cap_exceeded = true;
                }
            }
        }
        if (!elim_done) {
            BoxSearch search(cfg, hybrid);
            search.run(prop.eqs, prop.free_vars);
            partial = std::move(search.found);
            out.cap_exceeded = search.cap_exceeded;
            out.stats.nodes += search.nodes;
        }
    }

    // reconstruct full tuples through the root substitution chain
    for (auto& assign : partial) {
        std::vector<Int> tuple(m, 0);
        for (auto& [v, val] : assign) tuple[v] = val;
        for (auto it = prop.subs.rbegin(); it != prop.subs.rend(); ++it)
            tuple[it->first] = it->second.evaluate_total(tuple);
        bool ok = true;
        if (out.completeness == Completeness::box_bounded) {
            for (auto& x : tuple)
                if (x > cfg.bound || x < -cfg.bound) ok = false;
        }
        // soundness: every emitted tuple is re-verified against the system
        if (ok && sys.check_solution(tuple)) out.tuples.push_back(std::move(tuple));
    }
    std::sort(out.tuples.begin(), out.tuples.end());
    out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()),
                     out.tuples.end());

    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace uvb
