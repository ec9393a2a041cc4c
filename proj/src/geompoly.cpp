#include "uvb/geompoly.hpp"

#include <algorithm>

namespace uvb {

GeomPoly::GeomPoly(Int c) {
    if (c != 0) terms_.emplace(Exps{0, 0, 0}, CoefPoly(std::move(c)));
}

GeomPoly GeomPoly::T(unsigned e) { return term(e, 0, 0, CoefPoly(Int(1))); }
GeomPoly GeomPoly::U(unsigned e) { return term(0, e, 0, CoefPoly(Int(1))); }
GeomPoly GeomPoly::V(unsigned e) { return term(0, 0, e, CoefPoly(Int(1))); }

GeomPoly GeomPoly::term(unsigned t, unsigned u, unsigned v, CoefPoly c) {
    GeomPoly p;
    if (!c.is_zero()) p.terms_.emplace(Exps{t, u, v}, std::move(c));
    return p;
}

void GeomPoly::set(const Exps& e, CoefPoly c) {
    if (c.is_zero()) terms_.erase(e);
    else terms_[e] = std::move(c);
}

void GeomPoly::add_term(const Exps& e, const CoefPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GeomPoly GeomPoly::operator-() const {
    GeomPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GeomPoly GeomPoly::operator+(const GeomPoly& o) const {
    GeomPoly r = *this;
    r += o;
    return r;
}

GeomPoly& GeomPoly::operator+=(const GeomPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GeomPoly GeomPoly::operator-(const GeomPoly& o) const {
    GeomPoly r = *this;
    r -= o;
    return r;
}

GeomPoly& GeomPoly::operator-=(const GeomPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GeomPoly GeomPoly::operator*(const GeomPoly& o) const {
    GeomPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

GeomPoly GeomPoly::operator*(const CoefPoly& c) const {
    GeomPoly r;
    for (auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

GeomPoly GeomPoly::operator*(const Int& c) const {
    GeomPoly r;
    for (auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

GeomPoly GeomPoly::shift_T(const Int& c) const {
    if (c == 0) return *this;
    GeomPoly r;
    for (auto& [e, cf] : terms_) {
        // (T + cU)^t expanded binomially
        for (unsigned j = 0; j <= e[0]; ++j) {
            Int k = binomial(e[0], j) * pow_int(c, j);
            r.add_term({e[0] - j, e[1] + j, e[2]}, cf * k);
        }
    }
    return r;
}

GeomPoly GeomPoly::eval_unknowns(
    const std::vector<std::optional<Int>>& assignment, bool partial) const {
    GeomPoly r;
    for (auto& [e, c] : terms_) r.add_term(e, c.evaluate(assignment, partial));
    return r;
}

const CoefPoly& GeomPoly::coefficient_of(unsigned t, unsigned u, unsigned v) const {
    static const CoefPoly zero;
    auto it = terms_.find(Exps{t, u, v});
    return it == terms_.end() ? zero : it->second;
}

unsigned GeomPoly::deg_T() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[0]);
    return d;
}

unsigned GeomPoly::deg_U() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[1]);
    return d;
}

unsigned GeomPoly::deg_V() const {
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[2]);
    return d;
}

bool GeomPoly::is_V_free() const {
    for (auto& [e, c] : terms_)
        if (e[2] > 0) return false;
    return true;
}

bool GeomPoly::is_numeric() const {
    for (auto& [e, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

namespace {

std::string uv_monomial(unsigned u, unsigned v) {
    std::string s;
    if (u) {
        s += "U";
        if (u > 1) s += "^" + std::to_string(u);
    }
    if (v) {
        s += "V";
        if (v > 1) s += "^" + std::to_string(v);
    }
    return s;
}

// one UV term with a constant coefficient, e.g. "-2U^2V"; leading controls
// whether the sign is a prefix or a separator
void append_const_term(std::string& out, const Int& c, const std::string& mon,
                       bool leading) {
    Int a = c;
    if (leading) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? "-" : "+";
        if (a < 0) a = -a;
    }
    if (a != 1 || mon.empty()) out += a.str();
    out += mon;
}

}  // namespace

std::string GeomPoly::to_string(const std::vector<Unknown>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // group terms by T power, descending
    auto it = terms_.rbegin();
    while (it != terms_.rend()) {
        unsigned t = it->first[0];
        std::vector<std::pair<Exps, const CoefPoly*>> group;
        while (it != terms_.rend() && it->first[0] == t) {
            group.push_back({it->first, &it->second});
            ++it;
        }
        std::string tpart;
        if (t >= 1) {
            tpart = "T";
            if (t > 1) tpart += "^" + std::to_string(t);
        }
        bool leading = out.empty();
        bool single = group.size() == 1;
        if (single && group[0].second->is_constant()) {
            const auto& [e, c] = group[0];
            std::string mon = uv_monomial(e[1], e[2]);
            append_const_term(out, c->constant_term(), mon + tpart,
                              leading && mon.empty() ? true : leading);
        } else {
            // several UV terms (or symbolic coefficient) under one T power
            std::string inner;
            bool first = true;
            for (auto& [e, c] : group) {
                std::string mon = uv_monomial(e[1], e[2]);
                if (c->is_constant()) {
                    append_const_term(inner, c->constant_term(), mon, first);
                } else {
                    if (!first) inner += "+";
                    inner += "(" + c->to_string(names) + ")";
                    if (!mon.empty()) inner += "*" + mon;
                }
                first = false;
            }
            if (t >= 1 && group.size() > 1) {
                if (!leading) out += "+";
                out += "(" + inner + ")" + tpart;
            } else if (t >= 1) {
                if (!leading) out += "+";
                out += inner + (inner.back() == ')' ? "*" : "") + tpart;
            } else {
                if (!leading && inner.front() != '-') out += "+";
                out += inner;
            }
        }
    }
    return out;
}

}  // namespace uvb
