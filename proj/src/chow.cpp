#include "uvb/chow.hpp"

#include <stdexcept>

namespace uvb {

ChowElement normal_form(const GeomPoly& p, unsigned n) {
    if (n < 1) throw std::invalid_argument("normal_form requires n >= 1");
    GeomPoly out;
    // worklist rewriting; each V^n replacement strictly lowers deg_V, and
    // monomials with deg_U > n are dead under further rewriting
    std::map<Exps, CoefPoly> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Exps e = node.key();
        CoefPoly c = std::move(node.mapped());
        if (e[1] > n) continue;
        if (e[2] < n) {
            out.add_term(e, c);
            continue;
        }
        for (unsigned k = 1; k <= n; ++k) {
            if (e[1] + k > n) continue;
            Exps f{e[0], e[1] + k, e[2] - k};
            auto [it, fresh] = work.emplace(f, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return ChowElement{n, std::move(out)};
}

bool chow_equal(const GeomPoly& a, const GeomPoly& b, unsigned n) {
    return normal_form(a - b, n).value.is_zero();
}

std::vector<std::pair<unsigned, unsigned>> chow_basis(unsigned n) {
    if (n < 1) throw std::invalid_argument("chow_basis requires n >= 1");
    std::vector<std::pair<unsigned, unsigned>> out;
    out.reserve(n * (n + 1));
    for (unsigned i = 0; i <= n; ++i)
        for (unsigned j = 0; j + 1 <= n; ++j) out.push_back({i, j});
    return out;
}

GeomPoly chow_relation(unsigned n) {
    GeomPoly r;
    for (unsigned k = 0; k <= n; ++k)
        r += GeomPoly::term(0, k, n - k, CoefPoly(Int(1)));
    return r;
}

}  // namespace uvb
