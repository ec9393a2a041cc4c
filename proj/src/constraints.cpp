#include "uvb/constraints.hpp"

#include <algorithm>
#include <cassert>

#include "uvb/linalg.hpp"

namespace uvb {

namespace {

std::vector<GeomPoly> symmetric_monomials(unsigned d) {
    std::vector<GeomPoly> out;
    for (unsigned a = d; 2 * a >= d; --a) {
        unsigned b = d - a;
        if (a == b) {
            out.push_back(GeomPoly::term(0, a, b, CoefPoly(Int(1))));
        } else {
            out.push_back(GeomPoly::term(0, a, b, CoefPoly(Int(1))) +
                          GeomPoly::term(0, b, a, CoefPoly(Int(1))));
        }
        if (a == 0) break;
    }
    return out;
}

}  // namespace

SymmetricBasis symmetric_basis(unsigned d, unsigned n) {
    if (d < 1) throw std::invalid_argument("symmetric_basis requires d >= 1");
    SymmetricBasis sb;
    auto mons = symmetric_monomials(d);
    sb.full_size = mons.size();
    if (d < n) {
        sb.retained = std::move(mons);
        return sb;
    }
    // coordinates of each normal form over the chow basis
    auto basis = chow_basis(n);
    IntMatrix mat(mons.size(), std::vector<Int>(basis.size(), 0));
    for (size_t i = 0; i < mons.size(); ++i) {
        GeomPoly nf = normal_form(mons[i], n).value;
        for (auto& [e, c] : nf.terms()) {
            auto it = std::find(basis.begin(), basis.end(),
                                std::make_pair(e[1], e[2]));
            assert(it != basis.end());
            mat[i][it - basis.begin()] = c.constant_term();
        }
    }
    IntMatrix kernel = row_relations(mat);
    std::vector<bool> drop(mons.size(), false);
    for (auto& rel : kernel) {
        size_t lead = 0;
        while (lead < rel.size() && rel[lead] == 0) ++lead;
        assert(lead < rel.size());
        // unit pivot: guarantees the retained coordinates still reach every
        // residue class over the integers
        if (rel[lead] != 1 && rel[lead] != -1)
            throw std::logic_error("gauge kernel pivot is not a unit");
        drop[lead] = true;
    }
    for (size_t i = 0; i < mons.size(); ++i) {
        if (drop[i]) sb.deleted.push_back(mons[i]);
        else sb.retained.push_back(mons[i]);
    }
    return sb;
}

ConstraintSystem build_system(const SplittingType& st_in, unsigned n) {
    SplittingType st = st_in;
    st.normalize();
    if (st.has_gap())
        throw ReducibleType("type " + st_in.to_string() +
                            " has a twist gap >= 2: extension of smaller uniform bundles");
    if (!st.is_consecutive())
        throw std::invalid_argument("splitting type twists must be consecutive");

    ConstraintSystem sys;
    sys.st_ = st;
    sys.n_ = n;

    static const char letters[] = "abcdefghij";
    int k = st.parts();
    for (int i = 0; i < k; ++i) {
        int r = st.ranks[i];
        for (unsigned d = 1; d <= static_cast<unsigned>(r); ++d) {
            auto sb = symmetric_basis(d, n);
            for (unsigned j = 0; j < sb.retained.size(); ++j) {
                UnknownSlot slot;
                std::string nm(1, letters[std::min(i, 9)]);
                nm += std::to_string(d);
                if (sb.retained.size() > 1) nm += "_" + std::to_string(j);
                slot.unknown = Unknown{nm, static_cast<int>(sys.slots_.size())};
                slot.factor = i;
                slot.degree = d;
                slot.index = j;
                slot.basis = sb.retained[j];
                sys.slots_.push_back(std::move(slot));
            }
        }
    }

    // monic symmetric factors S_i
    sys.factors_.resize(k);
    for (int i = 0; i < k; ++i) {
        GeomPoly S = GeomPoly::T(st.ranks[i]);
        for (auto& slot : sys.slots_) {
            if (slot.factor != i) continue;
            GeomPoly coef = slot.basis * CoefPoly::variable(slot.unknown.id);
            S += GeomPoly::T(st.ranks[i] - slot.degree) * coef;
        }
        sys.factors_[i] = std::move(S);
    }

    GeomPoly prod(Int(1));
    for (int i = 0; i < k; ++i)
        prod = prod * sys.factors_[i].shift_T(st.twists[i]);
    sys.reduced_ = normal_form(prod, n).value;

    // equations: V-carrying coefficients of the reduced product
    std::vector<Equation> eqs;
    for (auto& [e, c] : sys.reduced_.terms())
        if (e[2] >= 1) eqs.push_back({e, c});
    std::sort(eqs.begin(), eqs.end(), [](const Equation& a, const Equation& b) {
        if (a.source[0] != b.source[0]) return a.source[0] > b.source[0];
        return std::pair(a.source[1], a.source[2]) < std::pair(b.source[1], b.source[2]);
    });
    for (auto& eq : eqs) {
        bool dup = false;
        for (auto& kept : sys.equations_)
            if (kept.poly == eq.poly || kept.poly == -eq.poly) {
                dup = true;
                break;
            }
        if (!dup) sys.equations_.push_back(eq);
    }
    return sys;
}

std::vector<std::string> ConstraintSystem::unknown_names() const {
    std::vector<std::string> out;
    for (auto& s : slots_) out.push_back(s.unknown.name);
    return out;
}

int ConstraintSystem::unknown_id(int factor, unsigned degree, unsigned index) const {
    for (auto& s : slots_)
        if (s.factor == factor && s.degree == degree && s.index == index)
            return s.unknown.id;
    return -1;
}

bool ConstraintSystem::check_solution(const std::vector<Int>& tuple) const {
    if (tuple.size() != slots_.size())
        throw MissingAssignment("tuple has " + std::to_string(tuple.size()) +
                                " entries, system has " +
                                std::to_string(slots_.size()) + " unknowns");
    for (auto& eq : equations_)
        if (eq.poly.evaluate_total(tuple) != 0) return false;
    return true;
}

GeomPoly ConstraintSystem::product_at(const std::vector<Int>& tuple) const {
    std::vector<std::optional<Int>> assign(tuple.begin(), tuple.end());
    return reduced_.eval_unknowns(assign, false);
}

ChernVector ConstraintSystem::residual_chern(const std::vector<Int>& tuple) const {
    GeomPoly p = product_at(tuple);
    if (!p.is_V_free())
        throw InvalidSolution("factor product is not pulled back from P^n");
    ChernVector cv;
    cv.n = n_;
    cv.rank = st_.total_rank();
    unsigned top = std::min<unsigned>(cv.rank, n_);
    cv.c.resize(top + 1, 0);
    for (unsigned i = 0; i <= top; ++i)
        cv.c[i] = p.coefficient_of(cv.rank - i, i, 0).constant_term();
    return cv;
}

std::vector<Int> transform_solution(const ConstraintSystem& sys,
                                    const std::vector<Int>& tuple) {
    if (!sys.check_solution(tuple))
        throw InvalidSolution("transform_solution requires a solution tuple");
    SplittingType dual = dualize_type(sys.type());
    ConstraintSystem dsys = build_system(dual, sys.dimension());
    int k = sys.type().parts();
    std::vector<Int> out(dsys.unknown_count(), 0);
    for (size_t i = 0; i < sys.unknowns().size(); ++i) {
        const auto& s = sys.unknowns()[i];
        int id = dsys.unknown_id(k - 1 - s.factor, s.degree, s.index);
        assert(id >= 0);
        out[id] = (s.degree % 2 == 0) ? tuple[i] : -tuple[i];
    }
    return out;
}

}  // namespace uvb
