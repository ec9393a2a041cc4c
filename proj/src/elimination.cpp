#include <algorithm>
#include <map>
#include <optional>

#include "uvb/solver.hpp"

namespace uvb {
namespace detail {

namespace {

constexpr unsigned kDegreeCap = 32;
constexpr unsigned kBitCap = 4096;
constexpr long long kRootScanCap = 1 << 21;

struct ElimFail {};  // infinite family or structurally stuck: fall back

void guard(const CoefPoly& p) {
    if (p.degree() > kDegreeCap)
        throw EliminationBlowup("elimination degree exceeds cap");
    for (auto& [m, c] : p.terms())
        if (boost::multiprecision::msb(boost::multiprecision::abs(c)) + 1 > kBitCap)
            throw EliminationBlowup("elimination coefficients exceed bit cap");
}

CoefPoly strip_content(const CoefPoly& p) {
    Int c = p.content();
    if (c == 0 || c == 1) return p;
    CoefPoly q;
    for (auto& [m, v] : p.terms()) q += CoefPoly::monomial(m, v / c);
    return q;
}

Int eval_univariate(const std::vector<Int>& coeffs, const Int& x) {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::vector<Int> integer_roots(const std::vector<Int>& coeffs_in, long long max_abs) {
    std::vector<Int> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty())
        throw std::invalid_argument("integer_roots of the zero polynomial");
    std::vector<Int> roots;
    size_t m0 = 0;
    while (coeffs[m0] == 0) ++m0;
    if (m0 > 0) {
        roots.push_back(0);
        coeffs.erase(coeffs.begin(), coeffs.begin() + m0);
    }
    if (coeffs.size() == 1) return roots;
    // integer roots divide the constant term and obey the Cauchy bound
    Int a0 = boost::multiprecision::abs(coeffs.front());
    Int lead = boost::multiprecision::abs(coeffs.back());
    Int maxc = 0;
    for (auto& c : coeffs) {
        Int a = boost::multiprecision::abs(c);
        if (a > maxc) maxc = a;
    }
    Int cauchy = 1 + (maxc + lead - 1) / lead;
    Int limit = std::min(a0, cauchy);
    if (max_abs > 0 && limit > max_abs) limit = max_abs;
    if (limit > kRootScanCap)
        throw EliminationBlowup("integer root candidate range too large");
    for (Int d = 1; d <= limit; ++d) {
        if (a0 % d != 0) continue;
        if (eval_univariate(coeffs, d) == 0) roots.push_back(d);
        if (eval_univariate(coeffs, -d) == 0) roots.push_back(-d);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

CoefPoly resultant(const CoefPoly& f, const CoefPoly& g, uint32_t var) {
    auto uf = f.univariate_in(var);
    auto ug = g.univariate_in(var);
    size_t df = uf.size() - 1, dg = ug.size() - 1;
    if (df == 0 || dg == 0) {
        CoefPoly base = df == 0 ? f : g;
        size_t e = df == 0 ? dg : df;
        CoefPoly r(Int(1));
        for (size_t i = 0; i < e; ++i) r = r * base;
        return r;
    }
    size_t n = df + dg;
    std::vector<std::vector<CoefPoly>> M(n, std::vector<CoefPoly>(n));
    for (size_t i = 0; i < dg; ++i)
        for (size_t j = 0; j <= df; ++j) M[i][i + j] = uf[df - j];
    for (size_t i = 0; i < df; ++i)
        for (size_t j = 0; j <= dg; ++j) M[dg + i][i + j] = ug[dg - j];

    // Bareiss fraction-free elimination
    CoefPoly prev(Int(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            size_t s = k + 1;
            while (s < n && M[s][k].is_zero()) ++s;
            if (s == n) return CoefPoly();  // singular: resultant vanishes
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                CoefPoly num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = num.is_zero() ? CoefPoly() : num.divide_exact(prev);
                guard(M[i][j]);
            }
            M[i][k] = CoefPoly();
        }
        prev = M[k][k];
    }
    CoefPoly res = M[n - 1][n - 1];
    return sign < 0 ? -res : res;
}

namespace {

using Assignment = std::map<uint32_t, Int>;

std::vector<Assignment> solve_rec(std::vector<CoefPoly> eqs,
                                  std::vector<uint32_t> vars, uint64_t& nodes) {
    ++nodes;
    std::vector<CoefPoly> live;
    for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return {};
        live.push_back(strip_content(e));
    }
    if (vars.empty()) return {Assignment{}};

    // every remaining variable must be constrained somewhere
    std::map<uint32_t, int> occ;
    for (auto& e : live)
        for (uint32_t v : e.variables()) ++occ[v];
    for (uint32_t v : vars)
        if (!occ.count(v)) throw ElimFail{};

    if (vars.size() == 1) {
        uint32_t v = vars[0];
        std::vector<std::vector<Int>> unis;
        for (auto& e : live) {
            auto u = e.univariate_in(v);
            std::vector<Int> c(u.size());
            for (size_t d = 0; d < u.size(); ++d) c[d] = u[d].constant_term();
            unis.push_back(std::move(c));
        }
        std::vector<Assignment> out;
        for (const Int& r : integer_roots(unis[0])) {
            bool ok = true;
            for (auto& u : unis)
                if (eval_univariate(u, r) != 0) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back({{v, r}});
        }
        return out;
    }

    // choose the cheapest eliminable variable
    uint32_t x = 0;
    int best_score = -1;
    for (uint32_t v : vars) {
        if (occ[v] < 2) continue;  // resultants need two polynomials
        int maxdeg = 0;
        for (auto& e : live) maxdeg = std::max<int>(maxdeg, e.degree_in(v));
        int score = maxdeg * 1000 + occ[v];
        if (best_score < 0 || score < best_score) {
            best_score = score;
            x = v;
        }
    }
    if (best_score < 0) throw ElimFail{};

    std::vector<CoefPoly> with_x, without_x;
    for (auto& e : live)
        (e.contains(x) ? with_x : without_x).push_back(e);
    size_t pivot = 0;
    for (size_t i = 1; i < with_x.size(); ++i) {
        auto key = [&](const CoefPoly& p) {
            return std::pair(p.degree_in(x), p.term_count());
        };
        if (key(with_x[i]) < key(with_x[pivot])) pivot = i;
    }
    std::vector<CoefPoly> next = without_x;
    for (size_t i = 0; i < with_x.size(); ++i) {
        if (i == pivot) continue;
        CoefPoly r = resultant(with_x[pivot], with_x[i], x);
        if (!r.is_zero()) next.push_back(strip_content(r));
    }
    std::vector<uint32_t> rest;
    for (uint32_t v : vars)
        if (v != x) rest.push_back(v);

    auto sub = solve_rec(std::move(next), std::move(rest), nodes);
    std::vector<Assignment> out;
    for (auto& a : sub) {
        std::vector<std::optional<Int>> partial;
        for (auto& [v, val] : a) {
            if (partial.size() <= v) partial.resize(v + 1);
            partial[v] = val;
        }
        std::vector<std::vector<Int>> unis;
        bool dead = false;
        for (auto& e : with_x) {
            CoefPoly s = e.evaluate(partial, true);
            if (s.is_zero()) continue;
            if (s.is_constant()) {
                dead = true;
                break;
            }
            auto u = s.univariate_in(x);
            std::vector<Int> c(u.size());
            for (size_t d = 0; d < u.size(); ++d) c[d] = u[d].constant_term();
            unis.push_back(std::move(c));
        }
        if (dead) continue;
        if (unis.empty()) throw ElimFail{};  // x free on this fiber
        for (const Int& r : integer_roots(unis[0])) {
            bool ok = true;
            for (auto& u : unis)
                if (eval_univariate(u, r) != 0) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Assignment full = a;
            full[x] = r;
            out.push_back(std::move(full));
        }
    }
    return out;
}

}  // namespace

std::optional<std::vector<std::map<uint32_t, Int>>> eliminate_all(
    std::vector<CoefPoly> eqs, std::vector<uint32_t> vars, uint64_t& nodes) {
    try {
        return solve_rec(std::move(eqs), std::move(vars), nodes);
    } catch (const ElimFail&) {
        return std::nullopt;
    } catch (const EliminationBlowup&) {
        return std::nullopt;
    }
}

}  // namespace detail
}  // namespace uvb
