#include "yangcheck/module_witness.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "yangcheck/matrix_model.hpp"

namespace yangcheck {

ScalarMat ScalarMat::identity(int n) {
    ScalarMat r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = Scalar(1);
    return r;
}

bool ScalarMat::is_zero() const {
    for (const auto& c : data_)
        if (!c.is_zero()) return false;
    return true;
}

ScalarMat ScalarMat::operator+(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ScalarMat: shape mismatch");
    ScalarMat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

ScalarMat ScalarMat::operator-(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ScalarMat: shape mismatch");
    ScalarMat r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ScalarMat: shape mismatch");
    ScalarMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(k, j);
                if (y.is_zero()) continue;
                r.at(i, j) += x * y;
            }
        }
    }
    return r;
}

ScalarMat ScalarMat::scaled(const Scalar& c) const {
    ScalarMat r(rows_, cols_);
    if (c.is_zero()) return r;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
}

std::string ScalarMat::to_string() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " [";
        for (int j = 0; j < cols_; ++j) {
            s += at(i, j).to_string();
            if (j + 1 < cols_) s += ", ";
        }
        s += "]";
        if (i + 1 < rows_) s += ";";
    }
    s += "]";
    return s;
}

namespace {

ScalarMat lift(const RatMat& m) {
    ScalarMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r.at(i, j) = Scalar(m.at(i, j));
    return r;
}

// Unknown entries of one level-1 letter: matrix position and variable id.
using Slots = std::vector<std::pair<std::pair<int, int>, int>>;

}  // namespace

std::optional<ModuleWitness> ModuleWitness::build(const YangianModel& model,
                                                  const std::vector<Rational>& trials) {
    const BorelChoice& borel = model.borel();
    const LieAlgebra la = build_lie_algebra(borel.m, borel.n, borel);
    const int rank = model.rank();
    const int dim = la.basis.front().mat.rows();

    // Level-0 letters act by the defining representation.
    std::vector<std::optional<ScalarMat>> actions(model.alphabet().size());
    std::vector<RatMat> h0;
    h0.reserve(static_cast<std::size_t>(rank));
    for (int i = 1; i <= rank; ++i) {
        const Weight& alpha = model.simple().roots[static_cast<std::size_t>(i - 1)];
        const int k = la.roots.index_of(alpha);
        if (k < 0) return std::nullopt;
        actions[model.xp(i, 0)] = lift(la.basis[la.epos(static_cast<std::size_t>(k))].mat);
        actions[model.xm(i, 0)] = lift(la.basis[la.fpos(static_cast<std::size_t>(k))].mat);
        const RatMat& hm = la.basis[la.hpos(i)].mat;
        actions[model.h(i, 0)] = lift(hm);
        h0.push_back(hm);
    }

    // Weight compatibility: position (r, c) can hold a weight-w entry only
    // when every Cartan action sees eigenvalue difference w there.  The
    // Cartan actions on level-1 letters are themselves minimal relations,
    // so restricting the unknowns this way loses no module.
    const auto weight_ok = [&](int r, int c, const std::vector<Rational>& w) {
        for (int j = 1; j <= rank; ++j) {
            const RatMat& h = h0[static_cast<std::size_t>(j - 1)];
            if (h.at(r, r) - h.at(c, c) != w[static_cast<std::size_t>(j - 1)]) return false;
        }
        return true;
    };
    const auto letter_weight = [&](int sign, int i) {
        std::vector<Rational> w;
        w.reserve(static_cast<std::size_t>(rank));
        for (int j = 1; j <= rank; ++j) w.push_back(rat(sign * static_cast<long>(model.c(j, i))));
        return w;
    };

    int nvars = 0;
    std::map<LetterId, Slots> slots;
    for (int i = 1; i <= rank; ++i) {
        for (int sign : {+1, -1}) {
            const std::vector<Rational> w = letter_weight(sign, i);
            Slots& sl = slots[model.x(sign, i, 1)];
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    if (weight_ok(r, c, w)) sl.push_back({{r, c}, nvars++});
        }
        const std::vector<Rational> zero(static_cast<std::size_t>(rank), rat(0));
        Slots& sl = slots[model.h(i, 1)];
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                if (weight_ok(r, c, zero)) sl.push_back({{r, c}, nvars++});
    }

    const auto known = [&](LetterId id) { return actions[id].has_value(); };

    std::vector<const RelationInstance*> applicable;
    const auto instances = model.relation_instances(Family::Minimal);
    for (const auto& inst : instances)
        if (inst.applicable) applicable.push_back(&inst);

    // Linear pass: instances all of whose words hold at most one level-1
    // letter contribute exact linear constraints on the unknown entries.
    std::vector<std::vector<Scalar>> rows;
    std::vector<Scalar> rhs;
    for (const RelationInstance* instp : applicable) {
        bool linear = true;
        for (const auto& [word, coeff] : instp->element.terms()) {
            int unknown = 0;
            for (LetterId id : word) {
                if (known(id)) continue;
                if (slots.find(id) == slots.end()) return std::nullopt;
                ++unknown;
            }
            if (unknown > 1) {
                linear = false;
                break;
            }
        }
        if (!linear) continue;

        std::vector<std::vector<Scalar>> lin(static_cast<std::size_t>(dim) * dim,
                                             std::vector<Scalar>(static_cast<std::size_t>(nvars)));
        std::vector<Scalar> cst(static_cast<std::size_t>(dim) * dim);
        for (const auto& [word, coeff] : instp->element.terms()) {
            int upos = -1;
            for (std::size_t p = 0; p < word.size(); ++p)
                if (!known(word[p])) {
                    upos = static_cast<int>(p);
                    break;
                }
            if (upos < 0) {
                ScalarMat prod = ScalarMat::identity(dim);
                for (LetterId id : word) prod = prod * *actions[id];
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b)
                        cst[static_cast<std::size_t>(a) * dim + b] += coeff * prod.at(a, b);
            } else {
                ScalarMat pre = ScalarMat::identity(dim);
                ScalarMat post = ScalarMat::identity(dim);
                for (int p = 0; p < upos; ++p) pre = pre * *actions[word[static_cast<std::size_t>(p)]];
                for (std::size_t p = static_cast<std::size_t>(upos) + 1; p < word.size(); ++p)
                    post = post * *actions[word[p]];
                for (const auto& [pos, var] : slots[word[static_cast<std::size_t>(upos)]]) {
                    for (int a = 0; a < dim; ++a) {
                        const Scalar& l = pre.at(a, pos.first);
                        if (l.is_zero()) continue;
                        for (int b = 0; b < dim; ++b) {
                            const Scalar& rgt = post.at(pos.second, b);
                            if (rgt.is_zero()) continue;
                            lin[static_cast<std::size_t>(a) * dim + b][static_cast<std::size_t>(var)] +=
                                coeff * l * rgt;
                        }
                    }
                }
            }
        }
        for (int k = 0; k < dim * dim; ++k) {
            const auto& lrow = lin[static_cast<std::size_t>(k)];
            bool nonzero = !cst[static_cast<std::size_t>(k)].is_zero();
            if (!nonzero)
                for (const Scalar& s : lrow)
                    if (!s.is_zero()) {
                        nonzero = true;
                        break;
                    }
            if (!nonzero) continue;
            rows.push_back(lrow);
            rhs.push_back(-cst[static_cast<std::size_t>(k)]);
        }
    }

    // Exact elimination over the scalar field; first nonzero pivot, so the
    // particular solution and kernel basis are deterministic.
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int prow = 0;
    for (int col = 0; col < nvars && prow < nrows; ++col) {
        int sel = -1;
        for (int r = prow; r < nrows; ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(sel)], rows[static_cast<std::size_t>(prow)]);
        std::swap(rhs[static_cast<std::size_t>(sel)], rhs[static_cast<std::size_t>(prow)]);
        auto& prow_vec = rows[static_cast<std::size_t>(prow)];
        const Scalar inv = Scalar(1) / prow_vec[static_cast<std::size_t>(col)];
        for (int c = col; c < nvars; ++c) prow_vec[static_cast<std::size_t>(c)] *= inv;
        rhs[static_cast<std::size_t>(prow)] *= inv;
        for (int r = 0; r < nrows; ++r) {
            if (r == prow) continue;
            const Scalar f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = col; c < nvars; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * prow_vec[static_cast<std::size_t>(c)];
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(prow)];
        }
        pivot_col.push_back(col);
        ++prow;
    }
    for (int r = prow; r < nrows; ++r)
        if (!rhs[static_cast<std::size_t>(r)].is_zero()) return std::nullopt;

    std::vector<bool> is_pivot(static_cast<std::size_t>(nvars), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Scalar> particular(static_cast<std::size_t>(nvars));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        particular[static_cast<std::size_t>(pivot_col[r])] = rhs[r];
    std::vector<std::vector<Scalar>> kernel;
    for (int fc = 0; fc < nvars; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Scalar> v(static_cast<std::size_t>(nvars));
        v[static_cast<std::size_t>(fc)] = Scalar(1);
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[static_cast<std::size_t>(pivot_col[r])] = -rows[r][static_cast<std::size_t>(fc)];
        kernel.push_back(std::move(v));
    }

    std::vector<Rational> trial_list = kernel.empty() ? std::vector<Rational>{rat(0)} : trials;
    for (const Rational& t : trial_list) {
        std::vector<Scalar> u = particular;
        for (const auto& v : kernel)
            for (int k = 0; k < nvars; ++k)
                u[static_cast<std::size_t>(k)] += Scalar(t) * v[static_cast<std::size_t>(k)];

        auto candidate = actions;
        for (const auto& [id, sl] : slots) {
            ScalarMat m(dim, dim);
            for (const auto& [pos, var] : sl) m.at(pos.first, pos.second) = u[static_cast<std::size_t>(var)];
            candidate[id] = std::move(m);
        }

        // Full verification, quadratic instances included: the candidate is
        // accepted only when it annihilates every applicable instance.
        bool ok = true;
        std::size_t verified = 0;
        for (const RelationInstance* instp : applicable) {
            ScalarMat img(dim, dim);
            for (const auto& [word, coeff] : instp->element.terms()) {
                ScalarMat prod = ScalarMat::identity(dim);
                for (LetterId id : word) prod = prod * *candidate[id];
                img = img + prod.scaled(coeff);
            }
            if (!img.is_zero()) {
                ok = false;
                break;
            }
            ++verified;
        }
        if (!ok) continue;

        ModuleWitness w;
        w.dim_ = dim;
        w.free_params_ = static_cast<int>(kernel.size());
        w.trial_ = t;
        w.verified_ = verified;
        w.actions_ = std::move(candidate);
        return w;
    }
    return std::nullopt;
}

bool ModuleWitness::has_action(LetterId id) const {
    return id < actions_.size() && actions_[id].has_value();
}

const ScalarMat& ModuleWitness::action(LetterId id) const {
    if (!has_action(id)) throw std::invalid_argument("ModuleWitness: letter has no assigned action");
    return *actions_[id];
}

ScalarMat ModuleWitness::evaluate(const Element& e) const {
    ScalarMat img(dim_, dim_);
    for (const auto& [word, coeff] : e.terms()) {
        ScalarMat prod = ScalarMat::identity(dim_);
        for (LetterId id : word) prod = prod * action(id);
        img = img + prod.scaled(coeff);
    }
    return img;
}

}  // namespace yangcheck
