#include "yangcheck/enveloping.hpp"

#include <stdexcept>

namespace yangcheck {

Enveloping::Enveloping(const LieAlgebra& la) : la_(la) {
    std::size_t P = la_.positive_count();
    letter_of_.resize(la_.dim());
    std::vector<std::size_t> basis_order;
    for (std::size_t k = 0; k < P; ++k) basis_order.push_back(la_.fpos(k));
    for (int i = 1; i <= static_cast<int>(la_.rank()); ++i) basis_order.push_back(la_.hpos(i));
    for (std::size_t k = P; k-- > 0;) basis_order.push_back(la_.epos(k));
    for (std::size_t b : basis_order)
        letter_of_[b] = alpha_.add(la_.basis[b].name, la_.basis[b].parity);

    sys_ = std::make_unique<RewriteSystem>(alpha_, DegreeBound{64, 64});
    for (LetterId hi = 1; hi < alpha_.size(); ++hi)
        for (LetterId lo = 0; lo < hi; ++lo) {
            std::size_t bh = basis_order[hi], bl = basis_order[lo];
            int sign = la_.basis[bh].parity & la_.basis[bl].parity;
            Element rel = Element::from_word({hi, lo}) -
                          Element::from_word({lo, hi}, sign ? Scalar(-1) : Scalar(1)) -
                          bracket_image(bh, bl);
            sys_->add_relation(rel);
        }
    for (LetterId a = 0; a < alpha_.size(); ++a) {
        if (!alpha_.at(a).parity) continue;
        std::size_t b = basis_order[a];
        Element rel =
            Element::from_word({a, a}) - bracket_image(b, b).scaled(Scalar(rat(1, 2)));
        sys_->add_relation(rel);
    }
    auto st = sys_->complete();
    if (!st.reached_fixpoint || st.rules_added != 0)
        throw std::logic_error("Enveloping: straightening rules are not confluent");
}

Element Enveloping::bracket_image(std::size_t bi, std::size_t bj) const {
    Element out;
    for (const auto& [idx, c] : la_.bracket(bi, bj))
        out.add_term({letter(idx)}, Scalar(c));
    return out;
}

Tensor2 casimir(const Enveloping& env) {
    const LieAlgebra& la = env.lie();
    int rank = static_cast<int>(la.rank());
    RatMat gram(rank, rank);
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j)
            gram.at(i - 1, j - 1) = la.pairing(la.hpos(i), la.hpos(j));
    auto inv = gram.inverse();
    if (!inv) throw std::logic_error("casimir: degenerate Cartan form");
    Tensor2 omega;
    for (int k = 1; k <= rank; ++k) {
        Element dual;
        for (int l = 1; l <= rank; ++l) dual += env.h_gen(l).scaled(Scalar(inv->at(k - 1, l - 1)));
        omega += tensor_of(env.h_gen(k), dual);
    }
    for (std::size_t k = 0; k < la.positive_count(); ++k) {
        Element e = env.gen(la.epos(k)), f = env.gen(la.fpos(k));
        int par = la.roots.positive[k].parity;
        omega += tensor_of(e, f).scaled(par ? Scalar(-1) : Scalar(1));
        omega += tensor_of(f, e);
    }
    return omega;
}

Tensor2 normalize_legs(const Enveloping& env, const Tensor2& t) {
    Tensor2 out;
    for (const auto& [key, c] : t.terms()) {
        Element l = env.normalize(Element::from_word(key[0]));
        Element r = env.normalize(Element::from_word(key[1]));
        out += tensor_of(l, r).scaled(c);
    }
    return out;
}

Element multiply_legs(const Tensor2& t) {
    Element out;
    for (const auto& [key, c] : t.terms()) {
        Word w = key[0];
        w.insert(w.end(), key[1].begin(), key[1].end());
        out.add_term(w, c);
    }
    return out;
}

}  // namespace yangcheck
