#include "yangcheck/matrix_model.hpp"

#include <sstream>
#include <stdexcept>

namespace yangcheck {

namespace {

// Slot weights of the defining representation: eps_1..eps_m, 0,
// -eps_m..-eps_1 on the orthogonal block, then delta_1..delta_n,
// -delta_n..-delta_1 on the symplectic block.
Weight slot_weight(int m, int n, int k) {
    int p = 2 * m + 1;
    if (k < p) {
        int i = k + 1;
        if (i <= m) return Weight::unit_eps(m, n, i);
        if (i == m + 1) return Weight::zero(m, n);
        return -Weight::unit_eps(m, n, 2 * m + 2 - i);
    }
    int a = k - p + 1;
    if (a <= n) return Weight::unit_del(m, n, a);
    return -Weight::unit_del(m, n, 2 * n + 1 - a);
}

int slot_parity(int p, int k) { return k < p ? 0 : 1; }

RatMat build_j(int m, int n) {
    int p = 2 * m + 1, q = 2 * n, N = p + q;
    RatMat j(N, N);
    for (int i = 0; i < p; ++i) j.at(i, p - 1 - i) = 1;
    for (int a = 0; a < q; ++a) j.at(p + a, p + q - 1 - a) = (a < n) ? 1 : -1;
    return j;
}

RatMat supertranspose(const RatMat& x, int p) {
    int N = x.rows();
    RatMat r(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            // (-1)^{|i|(|i|+|j|)}: nontrivial exactly when |i|=1 and |j|=0
            int sign = slot_parity(p, i) & (1 ^ slot_parity(p, j));
            r.at(i, j) = sign ? -x.at(j, i) : x.at(j, i);
        }
    return r;
}

RatMat defect(const RatMat& x, const RatMat& j, int p) {
    return supertranspose(x, p) * j + j * x;
}

std::vector<Rational> flatten(const RatMat& x) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(x.rows()) * x.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) v.push_back(x.at(i, j));
    return v;
}

}  // namespace

Rational supertrace(const RatMat& x, int p) {
    Rational t = 0;
    for (int i = 0; i < x.rows(); ++i) t += slot_parity(p, i) ? -x.at(i, i) : x.at(i, i);
    return t;
}

RatMat super_bracket(const RatMat& x, const RatMat& y, int px, int py) {
    RatMat yx = y * x;
    return (px & py) ? x * y + yx : x * y - yx;
}

Rational LieAlgebra::pairing(std::size_t i, std::size_t j) const {
    return kappa * supertrace(basis[i].mat * basis[j].mat, 2 * m + 1);
}

LieAlgebra build_lie_algebra(int m, int n, const BorelChoice& borel) {
    if (borel.m != m || borel.n != n) throw std::invalid_argument("build_lie_algebra: borel shape mismatch");
    LieAlgebra la;
    la.m = m;
    la.n = n;
    la.borel = borel;
    la.roots = positive_roots(simple_root_system(borel));
    la.cartan = cartan_matrix(la.roots.simple);
    int rank = static_cast<int>(la.rank());
    int p = 2 * m + 1, q = 2 * n, N = p + q;
    RatMat J = build_j(m, n);

    // Group matrix unit slots by their adjoint weight.
    std::map<Weight, std::vector<std::pair<int, int>>> slots;
    for (int r = 0; r < N; ++r)
        for (int s = 0; s < N; ++s) slots[slot_weight(m, n, r) - slot_weight(m, n, s)].push_back({r, s});

    // Exact kernel of the defining condition restricted to one weight block.
    auto weight_space = [&](const Weight& w) -> std::vector<RatMat> {
        auto it = slots.find(w);
        if (it == slots.end()) return {};
        const auto& units = it->second;
        RatMat cond(N * N, static_cast<int>(units.size()));
        for (std::size_t c = 0; c < units.size(); ++c) {
            RatMat e(N, N);
            e.at(units[c].first, units[c].second) = 1;
            auto d = flatten(defect(e, J, p));
            for (int r = 0; r < N * N; ++r) cond.at(r, static_cast<int>(c)) = d[r];
        }
        std::vector<RatMat> out;
        for (const auto& coeffs : cond.kernel_basis()) {
            RatMat x(N, N);
            for (std::size_t c = 0; c < units.size(); ++c) x.at(units[c].first, units[c].second) = coeffs[c];
            out.push_back(std::move(x));
        }
        return out;
    };

    // Every nonzero weight space must be a root line; their count plus the
    // Cartan must exhaust the algebra.
    std::size_t total_dim = 0;
    for (const auto& [w, units] : slots) {
        std::size_t d = weight_space(w).size();
        total_dim += d;
        if (w.is_zero()) {
            if (d != static_cast<std::size_t>(rank))
                throw std::logic_error("build_lie_algebra: Cartan dimension mismatch");
            continue;
        }
        bool is_root = la.roots.index_of(w) >= 0 || la.roots.index_of(-w) >= 0;
        if (is_root && d != 1) throw std::logic_error("build_lie_algebra: root multiplicity is not one");
        if (!is_root && d != 0)
            throw std::logic_error("build_lie_algebra: unexpected weight " + w.render());
    }
    std::size_t expect_dim = 2 * la.positive_count() + static_cast<std::size_t>(rank);
    std::size_t even_dim = static_cast<std::size_t>((2 * m + 1) * m + n * (2 * n + 1));
    std::size_t odd_dim = static_cast<std::size_t>((2 * m + 1) * 2 * n);
    if (total_dim != expect_dim || total_dim != even_dim + odd_dim)
        throw std::logic_error("build_lie_algebra: dimension mismatch");

    // Cartan elements acting on a weight vector by the form against a
    // simple root; diagonal in the defining representation.
    std::vector<RatMat> hmat;
    for (int i = 1; i <= rank; ++i) {
        RatMat h(N, N);
        for (int k = 0; k < N; ++k)
            h.at(k, k) = Rational(static_cast<long>(
                bilinear_form(la.roots.simple.roots[static_cast<std::size_t>(i - 1)], slot_weight(m, n, k))));
        if (!defect(h, J, p).is_zero()) throw std::logic_error("build_lie_algebra: Cartan escapes the algebra");
        hmat.push_back(std::move(h));
    }

    // Calibrate the invariant form against the symmetric Cartan matrix.
    la.kappa = 0;
    for (int i = 1; i <= rank && la.kappa == 0; ++i)
        for (int j = 1; j <= rank && la.kappa == 0; ++j) {
            if (la.cartan.at(i, j) == 0) continue;
            Rational tr = supertrace(hmat[i - 1] * hmat[j - 1], p);
            if (tr == 0) throw std::logic_error("build_lie_algebra: degenerate Cartan pairing");
            la.kappa = Rational(static_cast<long>(la.cartan.at(i, j))) / tr;
        }
    if (la.kappa == 0) throw std::logic_error("build_lie_algebra: zero Cartan matrix");
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            if (la.kappa * supertrace(hmat[i - 1] * hmat[j - 1], p) !=
                Rational(static_cast<long>(la.cartan.at(i, j))))
                throw std::logic_error("build_lie_algebra: form is not a multiple of the Cartan matrix");

    // Root vectors: keep e as produced, scale f so that <e, f> = 1.
    std::vector<RatMat> emat, fmat;
    for (std::size_t k = 0; k < la.positive_count(); ++k) {
        const PositiveRoot& rt = la.roots.positive[k];
        auto es = weight_space(rt.weight);
        auto fs = weight_space(-rt.weight);
        if (es.size() != 1 || fs.size() != 1)
            throw std::logic_error("build_lie_algebra: missing root vector");
        RatMat e = es[0], f = fs[0];
        Rational s = la.kappa * supertrace(e * f, p);
        if (s == 0) throw std::logic_error("build_lie_algebra: degenerate root pairing");
        f = f.scaled(1 / s);
        // [e, f] must realize the image of the root under the form.
        RatMat want(N, N);
        for (int kk = 0; kk < N; ++kk)
            want.at(kk, kk) =
                Rational(static_cast<long>(bilinear_form(rt.weight, slot_weight(m, n, kk))));
        if (super_bracket(e, f, rt.parity, rt.parity) != want)
            throw std::logic_error("build_lie_algebra: [e, f] is not the weight coroot");
        emat.push_back(std::move(e));
        fmat.push_back(std::move(f));
    }

    auto idx_str = [](std::size_t k) {
        std::ostringstream os;
        os << (k + 1);
        return os.str();
    };
    for (std::size_t k = 0; k < la.positive_count(); ++k)
        la.basis.push_back({"f" + idx_str(k), fmat[k], -la.roots.positive[k].weight,
                            la.roots.positive[k].parity});
    for (int i = 1; i <= rank; ++i)
        la.basis.push_back({"h" + idx_str(static_cast<std::size_t>(i - 1)), hmat[i - 1],
                            Weight::zero(m, n), 0});
    for (std::size_t k = 0; k < la.positive_count(); ++k)
        la.basis.push_back({"e" + idx_str(k), emat[k], la.roots.positive[k].weight,
                            la.roots.positive[k].parity});

    // Decompose every bracket over the basis; failure to close is fatal.
    std::map<Weight, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < la.basis.size(); ++i) by_weight[la.basis[i].weight].push_back(i);
    la.table.assign(la.dim(), std::vector<BracketRow>(la.dim()));
    for (std::size_t i = 0; i < la.dim(); ++i)
        for (std::size_t j = 0; j < la.dim(); ++j) {
            RatMat b = super_bracket(la.basis[i].mat, la.basis[j].mat, la.basis[i].parity,
                                     la.basis[j].parity);
            if (b.is_zero()) continue;
            Weight w = la.basis[i].weight + la.basis[j].weight;
            auto it = by_weight.find(w);
            if (it == by_weight.end())
                throw std::logic_error("build_lie_algebra: bracket leaves the weight grading");
            const auto& cand = it->second;
            RatMat sys(N * N, static_cast<int>(cand.size()));
            for (std::size_t c = 0; c < cand.size(); ++c) {
                auto col = flatten(la.basis[cand[c]].mat);
                for (int r = 0; r < N * N; ++r) sys.at(r, static_cast<int>(c)) = col[r];
            }
            auto sol = sys.solve(flatten(b));
            if (!sol) throw std::logic_error("build_lie_algebra: bracket does not close");
            for (std::size_t c = 0; c < cand.size(); ++c)
                if ((*sol)[c] != 0) la.table[i][j].push_back({cand[c], (*sol)[c]});
        }
    return la;
}

namespace {

struct SerreCtx {
    const LieAlgebra& la;
    int p;

    RatMat e(int i) const { return la.basis[la.epos(static_cast<std::size_t>(i - 1))].mat; }
    RatMat f(int i) const { return la.basis[la.fpos(static_cast<std::size_t>(i - 1))].mat; }
    RatMat h(int i) const { return la.basis[la.hpos(i)].mat; }
    int pe(int i) const { return la.basis[la.epos(static_cast<std::size_t>(i - 1))].parity; }

    RatMat br(const RatMat& x, const RatMat& y, int px, int py) const {
        return super_bracket(x, y, px, py);
    }
};

}  // namespace

SerreReport verify_serre(const LieAlgebra& la) {
    SerreReport rep;
    SerreCtx c{la, 2 * la.m + 1};
    int rank = static_cast<int>(la.rank());
    auto add = [&](const std::string& name, bool ok) {
        rep.checks.push_back({name, ok});
        rep.all_ok = rep.all_ok && ok;
    };
    auto cij = [&](int i, int j) { return Rational(static_cast<long>(la.cartan.at(i, j))); };

    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            add("cartan-commute[" + ij + "]", c.br(c.h(i), c.h(j), 0, 0).is_zero());
            add("cartan-on-raising[" + ij + "]",
                c.br(c.h(i), c.e(j), 0, c.pe(j)) == c.e(j).scaled(cij(i, j)));
            add("cartan-on-lowering[" + ij + "]",
                c.br(c.h(i), c.f(j), 0, c.pe(j)) == c.f(j).scaled(-cij(i, j)));
            RatMat ef = c.br(c.e(i), c.f(j), c.pe(i), c.pe(j));
            add("pairing[" + ij + "]", i == j ? ef == c.h(i) : ef.is_zero());
        }

    for (int i = 1; i <= rank; ++i) {
        if (la.cartan.at(i, i) != 0) continue;
        add("isotropic-square[" + std::to_string(i) + "]",
            c.br(c.e(i), c.e(i), 1, 1).is_zero() && c.br(c.f(i), c.f(i), 1, 1).is_zero());
    }
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            if (i == j || la.cartan.at(i, j) != 0) continue;
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            add("distant-commute[" + ij + "]",
                c.br(c.e(i), c.e(j), c.pe(i), c.pe(j)).is_zero() &&
                    c.br(c.f(i), c.f(j), c.pe(i), c.pe(j)).is_zero());
        }

    for (int i = 1; i < rank; ++i) {
        if (la.cartan.at(i, i) == 0) continue;
        for (int j : {i - 1, i + 1}) {
            if (j < 1 || j > rank) continue;
            std::string ij = std::to_string(i) + "," + std::to_string(j);
            RatMat ee = c.br(c.e(i), c.br(c.e(i), c.e(j), c.pe(i), c.pe(j)), c.pe(i),
                             c.pe(i) ^ c.pe(j));
            RatMat ff = c.br(c.f(i), c.br(c.f(i), c.f(j), c.pe(i), c.pe(j)), c.pe(i),
                             c.pe(i) ^ c.pe(j));
            add("adjacent-cubic[" + ij + "]", ee.is_zero() && ff.is_zero());
        }
    }

    if (rank >= 2) {
        int i = rank, j = rank - 1;
        RatMat inner_e = c.br(c.e(i), c.e(j), c.pe(i), c.pe(j));
        RatMat mid_e = c.br(c.e(i), inner_e, c.pe(i), c.pe(i) ^ c.pe(j));
        RatMat out_e = c.br(c.e(i), mid_e, c.pe(i), c.pe(j));
        RatMat inner_f = c.br(c.f(i), c.f(j), c.pe(i), c.pe(j));
        RatMat mid_f = c.br(c.f(i), inner_f, c.pe(i), c.pe(i) ^ c.pe(j));
        RatMat out_f = c.br(c.f(i), mid_f, c.pe(i), c.pe(j));
        add("terminal-quartic", out_e.is_zero() && out_f.is_zero());
    }

    for (int j = 2; j < rank; ++j) {
        RatMat a = c.br(c.e(j + 1), c.e(j), c.pe(j + 1), c.pe(j));
        RatMat b = c.br(a, c.e(j - 1), c.pe(j + 1) ^ c.pe(j), c.pe(j - 1));
        RatMat d = c.br(b, c.e(j), c.pe(j + 1) ^ c.pe(j) ^ c.pe(j - 1), c.pe(j));
        RatMat af = c.br(c.f(j + 1), c.f(j), c.pe(j + 1), c.pe(j));
        RatMat bf = c.br(af, c.f(j - 1), c.pe(j + 1) ^ c.pe(j), c.pe(j - 1));
        RatMat df = c.br(bf, c.f(j), c.pe(j + 1) ^ c.pe(j) ^ c.pe(j - 1), c.pe(j));
        add("mixed-quartic[" + std::to_string(j) + "]", d.is_zero() && df.is_zero());
    }
    return rep;
}

}  // namespace yangcheck
