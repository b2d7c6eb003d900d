#include "ffeq/ore.hpp"

#include <stdexcept>

namespace ffeq {

TauPoly tau_add(const Fq& F, const TauPoly& f, const TauPoly& g) {
    std::vector<RationalFn> r(std::max(f.c.size(), g.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = ratfn_add(F, f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    return TauPoly{std::move(r)};
}

TauPoly tau_sub(const Fq& F, const TauPoly& f, const TauPoly& g) {
    std::vector<RationalFn> r(std::max(f.c.size(), g.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = ratfn_sub(F, f.coeff(static_cast<int>(i)), g.coeff(static_cast<int>(i)));
    return TauPoly{std::move(r)};
}

namespace {

// Twist-fused product for the common case where every coefficient is a
// polynomial: accumulates a_i (x -> x^{q^i})(b_j) straight into flat result
// arrays over the nonzero entries only.  Frobenius twists inflate degrees by
// q^i, so going through dense general-purpose arithmetic would square away
// the budget for exhaustive morphism checks.
TauPoly tau_mul_poly(const Fq& F, const TauPoly& f, const TauPoly& g) {
    std::vector<std::vector<FqElem>> acc(f.c.size() + g.c.size() - 1);
    std::vector<std::pair<std::uint64_t, FqElem>> nz;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        const Poly& a = f.c[i].num;
        if (a.is_zero()) continue;
        std::uint64_t qi = 1;
        for (std::size_t k = 0; k < i; ++k) qi *= F.q();
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            const Poly& b = g.c[j].num;
            if (b.is_zero()) continue;
            nz.clear();
            for (std::size_t v = 0; v < b.c.size(); ++v)
                if (b.c[v] != 0) nz.emplace_back(static_cast<std::uint64_t>(v) * qi, b.c[v]);
            auto& slot = acc[i + j];
            const std::uint64_t need = static_cast<std::uint64_t>(a.deg()) + nz.back().first + 1;
            if (slot.size() < need) slot.resize(need, 0);
            for (std::size_t u = 0; u < a.c.size(); ++u) {
                const FqElem au = a.c[u];
                if (au == 0) continue;
                for (const auto& [shift, bv] : nz) {
                    auto& cell = slot[u + shift];
                    cell = F.add(cell, F.mul(au, bv));
                }
            }
        }
    }
    std::vector<RationalFn> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = ratfn_from_poly(Poly{std::move(acc[k])});
    return TauPoly{std::move(out)};
}

}  // namespace

TauPoly tau_mul(const Fq& F, const TauPoly& f, const TauPoly& g) {
    if (f.is_zero() || g.is_zero()) return TauPoly::zero();
    const auto all_poly = [](const TauPoly& h) {
        for (const RationalFn& c : h.c)
            if (!c.is_poly()) return false;
        return true;
    };
    if (all_poly(f) && all_poly(g)) return tau_mul_poly(F, f, g);
    std::vector<RationalFn> r(f.c.size() + g.c.size() - 1);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i].is_zero()) continue;
        // q^i-power Frobenius twist applied to every coefficient of g
        std::uint64_t qi = 1;
        for (std::size_t k = 0; k < i; ++k) qi *= F.q();
        for (std::size_t j = 0; j < g.c.size(); ++j) {
            if (g.c[j].is_zero()) continue;
            const RationalFn twisted = i == 0 ? g.c[j] : ratfn_subst_tpow(F, g.c[j], qi);
            r[i + j] = ratfn_add(F, r[i + j], ratfn_mul(F, f.c[i], twisted));
        }
    }
    return TauPoly{std::move(r)};
}

std::string tau_to_string(const Fq& F, const TauPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.deg_tau(); i >= 0; --i) {
        const RationalFn c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        out += "(" + ratfn_to_string(F, c) + ")";
        if (i > 0) {
            out += "*tau";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

DrinfeldModule make_drinfeld_module(const Fq& F, const TauPoly& phi_t) {
    (void)F;
    if (phi_t.deg_tau() < 1)
        throw std::invalid_argument("make_drinfeld_module: phi_t must have tau-degree >= 1");
    if (phi_t.coeff(0) != ratfn_t())
        throw std::invalid_argument(
            "make_drinfeld_module: tau^0 coefficient of phi_t must equal t (generic characteristic)");
    return DrinfeldModule{phi_t, phi_t.deg_tau(), std::nullopt};
}

DrinfeldModule carlitz_module(const Fq& F) { return plain_module(F, 1); }

DrinfeldModule plain_module(const Fq& F, int rank) {
    if (rank < 1) throw std::invalid_argument("plain_module: rank must be >= 1");
    std::vector<RationalFn> c(static_cast<std::size_t>(rank) + 1, ratfn_one());
    c[0] = ratfn_t();
    for (int i = 1; i < rank; ++i) c[static_cast<std::size_t>(i)] = ratfn_one();
    return make_drinfeld_module(F, TauPoly{std::move(c)});
}

TauPoly phi_of(const Fq& F, const DrinfeldModule& m, const Poly& a) {
    if (a.is_zero()) return TauPoly::zero();
    // ladder of phi_{t^i}, built once per call and shared by all monomials
    std::vector<TauPoly> ladder;
    ladder.reserve(a.c.size());
    ladder.push_back(TauPoly::one());
    for (int i = 1; i <= a.deg(); ++i) ladder.push_back(tau_mul(F, m.phi_t, ladder.back()));
    TauPoly out;
    for (int i = 0; i <= a.deg(); ++i) {
        const FqElem ci = a.coeff(i);
        if (ci == 0) continue;
        TauPoly term = ladder[static_cast<std::size_t>(i)];
        if (ci != 1) {
            const RationalFn s = ratfn_from_poly(Poly::constant(ci));
            for (auto& coeff : term.c) coeff = ratfn_mul(F, s, coeff);
        }
        out = tau_add(F, out, term);
    }
    return out;
}

BigInt torsion_cardinality(const Fq& F, const DrinfeldModule& m, const Poly& a) {
    if (a.is_zero()) throw std::domain_error("torsion_cardinality: a must be nonzero");
    return q_pow(F, m.rank * a.deg());
}

}  // namespace ffeq
