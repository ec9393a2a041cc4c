#include "uvb/coefpoly.hpp"

#include <algorithm>
#include <numeric>

namespace uvb {

Monomial Monomial::var(uint32_t v, uint32_t e) {
    Monomial m;
    if (e > 0) m.entries_.push_back({v, e});
    return m;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto& [v, e] : entries_) d += e;
    return d;
}

unsigned Monomial::degree_in(uint32_t v) const {
    for (auto& [w, e] : entries_)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.entries_.reserve(entries_.size() + o.entries_.size());
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first < b->first) r.entries_.push_back(*a++);
        else if (b->first < a->first) r.entries_.push_back(*b++);
        else {
            r.entries_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.entries_.insert(r.entries_.end(), a, entries_.end());
    r.entries_.insert(r.entries_.end(), b, o.entries_.end());
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    // graded lexicographic with earlier variables larger; a genuine monomial
    // order, so leading terms multiply (divide_exact depends on this)
    unsigned da = degree(), db = o.degree();
    if (da != db) return da < db;
    auto a = entries_.begin(), b = o.entries_.begin();
    while (a != entries_.end() && b != o.entries_.end()) {
        if (a->first != b->first) return a->first > b->first;
        if (a->second != b->second) return a->second < b->second;
        ++a, ++b;
    }
    return a == entries_.end() && b != o.entries_.end();
}

Monomial Monomial::without(uint32_t v) const {
    Monomial r;
    for (auto& ent : entries_)
        if (ent.first != v) r.entries_.push_back(ent);
    return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
    for (auto& [v, e] : o.entries_)
        if (degree_in(v) < e) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial r;
    for (auto& [v, e] : entries_) {
        uint32_t oe = o.degree_in(v);
        if (e > oe) r.entries_.push_back({v, e - oe});
    }
    return r;
}

CoefPoly::CoefPoly(Int c) {
    if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

CoefPoly CoefPoly::variable(uint32_t v) {
    return monomial(Monomial::var(v), 1);
}

CoefPoly CoefPoly::monomial(Monomial m, Int c) {
    CoefPoly p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool CoefPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const Int& CoefPoly::constant_term() const {
    static const Int zero = 0;
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? zero : it->second;
}

void CoefPoly::insert(const Monomial& m, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CoefPoly CoefPoly::operator-() const {
    CoefPoly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

CoefPoly CoefPoly::operator+(const CoefPoly& o) const {
    CoefPoly r = *this;
    r += o;
    return r;
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
    for (auto& [m, c] : o.terms_) insert(m, c);
    return *this;
}

CoefPoly CoefPoly::operator-(const CoefPoly& o) const {
    CoefPoly r = *this;
    r -= o;
    return r;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
    for (auto& [m, c] : o.terms_) insert(m, -c);
    return *this;
}

CoefPoly CoefPoly::operator*(const CoefPoly& o) const {
    CoefPoly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.insert(m1 * m2, c1 * c2);
    return r;
}

CoefPoly CoefPoly::operator*(const Int& c) const {
    CoefPoly r;
    if (c == 0) return r;
    for (auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

unsigned CoefPoly::degree() const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

unsigned CoefPoly::degree_in(uint32_t v) const {
    unsigned d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

bool CoefPoly::contains(uint32_t v) const {
    for (auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

std::vector<uint32_t> CoefPoly::variables() const {
    std::vector<uint32_t> vs;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.entries()) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

CoefPoly CoefPoly::substitute(uint32_t v, const CoefPoly& value) const {
    CoefPoly r;
    std::vector<CoefPoly> powers{CoefPoly(Int(1))};
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(v);
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        CoefPoly base = CoefPoly::monomial(m.without(v), c);
        r += base * powers[e];
    }
    return r;
}

CoefPoly CoefPoly::substitute(uint32_t v, const Int& value) const {
    CoefPoly r;
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(v);
        r.insert(m.without(v), e == 0 ? c : c * pow_int(value, e));
    }
    return r;
}

CoefPoly CoefPoly::evaluate(const std::vector<std::optional<Int>>& assignment,
                            bool partial) const {
    CoefPoly r;
    for (auto& [m, c] : terms_) {
        Int coef = c;
        Monomial rest;
        for (auto& [v, e] : m.entries()) {
            if (v < assignment.size() && assignment[v]) {
                coef *= pow_int(*assignment[v], e);
            } else if (partial) {
                rest = rest * Monomial::var(v, e);
            } else {
                throw MissingAssignment("unknown #" + std::to_string(v) +
                                        " has no assigned value");
            }
        }
        r.insert(rest, coef);
    }
    return r;
}

Int CoefPoly::evaluate_total(const std::vector<Int>& assignment) const {
    Int s = 0;
    for (auto& [m, c] : terms_) {
        Int t = c;
        for (auto& [v, e] : m.entries()) {
            if (v >= assignment.size())
                throw MissingAssignment("unknown #" + std::to_string(v) +
                                        " has no assigned value");
            t *= pow_int(assignment[v], e);
        }
        s += t;
    }
    return s;
}

std::vector<CoefPoly> CoefPoly::univariate_in(uint32_t v) const {
    std::vector<CoefPoly> out(degree_in(v) + 1);
    for (auto& [m, c] : terms_) out[m.degree_in(v)].insert(m.without(v), c);
    return out;
}

std::optional<LinearView> CoefPoly::isolate_linear(uint32_t v) const {
    LinearView lv;
    lv.var = v;
    lv.coef = 0;
    for (auto& [m, c] : terms_) {
        unsigned e = m.degree_in(v);
        if (e == 0) {
            lv.rest.push_back({m, c});
        } else if (e == 1 && m.degree() == 1) {
            lv.coef = c;
        } else {
            return std::nullopt;  // v occurs nonlinearly or with other vars
        }
    }
    if (lv.coef == 0) return std::nullopt;
    return lv;
}

CoefPoly CoefPoly::from_terms(const std::vector<std::pair<Monomial, Int>>& ts) {
    CoefPoly p;
    for (auto& [m, c] : ts) p.insert(m, c);
    return p;
}

Int CoefPoly::content() const {
    Int g = 0;
    for (auto& [m, c] : terms_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

CoefPoly CoefPoly::divide_exact(const CoefPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    CoefPoly rem = *this, quot;
    const auto& dl = *d.terms_.rbegin();  // leading term in the graded order
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms_.rbegin();
        if (!rl.first.divisible_by(dl.first) || rl.second % dl.second != 0)
            throw std::domain_error("inexact polynomial division");
        CoefPoly t = CoefPoly::monomial(rl.first.divide_by(dl.first),
                                        rl.second / dl.second);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string CoefPoly::to_string(const std::vector<Unknown>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // print highest-degree terms first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Int a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        bool coef_shown = (a != 1) || m.empty();
        if (coef_shown) out += a.str();
        bool first = !coef_shown;
        for (auto& [v, e] : m.entries()) {
            if (!first || coef_shown) out += "*";
            out += v < names.size() ? names[v].name : "x" + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
            first = false;
        }
    }
    return out;
}

}  // namespace uvb
