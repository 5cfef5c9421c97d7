#include "yangcheck/yangian.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace yangcheck {

namespace {

std::string num(int v) { return std::to_string(v); }

std::string sig(int sign) { return sign > 0 ? "+" : "-"; }

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int t = 1; t <= k; ++t) out = out * (n - k + t) / t;
    return out;
}

long long pow_ll(long long base, int exp) {
    long long out = 1;
    for (int t = 0; t < exp; ++t) out *= base;
    return out;
}

}  // namespace

const char* to_string(Family f) { return f == Family::Minimal ? "minimal" : "full"; }

YangianModel::YangianModel(const BorelChoice& borel, int level_cap)
    : borel_(borel),
      simple_(simple_root_system(borel)),
      cartan_(cartan_matrix(simple_)),
      cap_(level_cap) {
    if (cap_ < 1) throw std::invalid_argument("level cap must be at least 1");
    const int R = rank();
    for (int r = 0; r <= cap_; ++r) {
        for (int i = 1; i <= R; ++i)
            alphabet_.add("f" + num(i) + "_" + num(r), parity(i), r);
        for (int i = 1; i <= R; ++i) alphabet_.add("h" + num(i) + "_" + num(r), 0, r);
        for (int i = 1; i <= R; ++i)
            alphabet_.add("e" + num(i) + "_" + num(r), parity(i), r);
    }

    const std::size_t slots = static_cast<std::size_t>(R) * static_cast<std::size_t>(cap_ + 1);
    xminus_.assign(slots, Element::zero());
    xplus_.assign(slots, Element::zero());
    hletters_.assign(slots, Element::zero());
    auto idx = [&](int i, int r) {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cap_ + 1) +
               static_cast<std::size_t>(r);
    };
    for (int i = 1; i <= R; ++i)
        for (int r = 0; r <= cap_; ++r) {
            if (r <= 1) {
                xminus_[idx(i, r)] = Element::single(xm(i, r));
                xplus_[idx(i, r)] = Element::single(xp(i, r));
                hletters_[idx(i, r)] = Element::single(h(i, r));
                continue;
            }
            const int p = pivot(i);
            const Scalar inv = Scalar(1) / Scalar(static_cast<long>(c(i, p)));
            xplus_[idx(i, r)] =
                graded_bracket(alphabet_, htilde1(p), xplus_[idx(i, r - 1)]).scaled(inv);
            xminus_[idx(i, r)] =
                graded_bracket(alphabet_, htilde1(p), xminus_[idx(i, r - 1)]).scaled(-inv);
            hletters_[idx(i, r)] =
                graded_bracket(alphabet_, xplus_[idx(i, r)], Element::single(xm(i, 0)));
        }
}

LetterId YangianModel::xm(int i, int r) const {
    if (i < 1 || i > rank()) throw std::out_of_range("vertex index out of range");
    if (r < 0 || r > cap_) throw std::out_of_range("level out of range");
    return static_cast<LetterId>(r * 3 * rank() + (i - 1));
}

LetterId YangianModel::h(int i, int r) const { return xm(i, r) + static_cast<LetterId>(rank()); }

LetterId YangianModel::xp(int i, int r) const {
    return xm(i, r) + static_cast<LetterId>(2 * rank());
}

int YangianModel::pivot(int i) const {
    if (i < 1 || i > rank()) throw std::out_of_range("vertex index out of range");
    if (c(i, i) != 0) return i;
    if (i + 1 <= rank() && c(i, i + 1) != 0) return i + 1;
    throw std::logic_error("no recursion pivot for vertex " + num(i));
}

const Element& YangianModel::expand_x(int sign, int i, int r) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    xm(i, r);  // range check
    const std::size_t ix = static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cap_ + 1) +
                           static_cast<std::size_t>(r);
    return sign > 0 ? xplus_[ix] : xminus_[ix];
}

const Element& YangianModel::expand_h(int i, int r) const {
    xm(i, r);  // range check
    return hletters_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cap_ + 1) +
                     static_cast<std::size_t>(r)];
}

Element YangianModel::expand_letter(LetterId id) const {
    const int R = rank();
    const int r = static_cast<int>(id) / (3 * R);
    const int rem = static_cast<int>(id) % (3 * R);
    const int kind = rem / R;
    const int i = rem % R + 1;
    if (kind == 0) return expand_x(-1, i, r);
    if (kind == 1) return expand_h(i, r);
    return expand_x(+1, i, r);
}

Element YangianModel::expand(const Element& e) const {
    Element out = Element::zero();
    for (const auto& [w, coef] : e.terms()) {
        Element prod = Element::unit(coef);
        for (LetterId id : w) prod = prod * expand_letter(id);
        out = out + prod;
    }
    return out;
}

Element YangianModel::htilde1(int i) const {
    Element out = Element::single(h(i, 1));
    out.add_term(Word{h(i, 0), h(i, 0)}, Scalar::of(rat(-1, 2), 1));
    return out;
}

Element YangianModel::htilde(int i, int r) const {
    xm(i, r);  // range check
    Element out = Element::zero();
    for (int q = 1; q <= r + 1; ++q) {
        const Scalar coef = Scalar::of(rat(q % 2 ? 1 : -1, q), static_cast<unsigned>(q - 1));
        std::vector<int> parts(static_cast<std::size_t>(q), 0);
        std::function<void(int, int)> fill = [&](int pos, int remaining) {
            if (pos == q - 1) {
                parts[static_cast<std::size_t>(pos)] = remaining;
                Word w;
                for (int part : parts) w.push_back(h(i, part));
                out.add_term(w, coef);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                parts[static_cast<std::size_t>(pos)] = v;
                fill(pos + 1, remaining - v);
            }
        };
        fill(0, r + 1 - q);
    }
    return out;
}

Element YangianModel::hdoubletilde(int i, int j, int r) const {
    xm(i, r);  // range check
    xm(j, 0);
    if (r == 0) return Element::single(h(i, 0));
    Element out = htilde(i, r);
    const long long cij = c(i, j);
    for (int p = 1; 2 * p <= r; ++p) {
        const long long n = binom_ll(r, 2 * p) * pow_ll(cij, 2 * p);
        const long long d = pow_ll(4, p) * (2 * p + 1);
        const Scalar coef =
            Scalar::of(rat(static_cast<long>(n), static_cast<long>(d)), static_cast<unsigned>(2 * p));
        out = out - hdoubletilde(i, j, r - 2 * p).scaled(coef);
    }
    return out;
}

Element YangianModel::thx_identity(int i, int j, int r, int s, int sign) const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    xm(i, r);  // range checks, including the top level r+s
    xm(j, r + s);
    Element lhs = graded_bracket(alphabet_, expand(htilde(i, r)), expand_x(sign, j, s));
    const long long cij = c(i, j);
    Element rhs = expand_x(sign, j, r + s).scaled(Scalar(static_cast<long>(sign * cij)));
    for (int p = 1; 2 * p <= r; ++p) {
        const long long n = sign * cij * binom_ll(r, 2 * p) * pow_ll(cij, 2 * p);
        const long long d = pow_ll(4, p) * (2 * p + 1);
        rhs = rhs + expand_x(sign, j, r + s - 2 * p)
                        .scaled(Scalar::of(rat(static_cast<long>(n), static_cast<long>(d)),
                                           static_cast<unsigned>(2 * p)));
    }
    return lhs - rhs;
}

void YangianModel::check_bounds(const InstanceBounds& b) const {
    const int lows[] = {b.y1_r, b.y1_s, b.y2_s,  b.y3_sum, b.y4_r,  b.y4_s,  b.y5_sum,
                        b.y6_r, b.y6_s, b.y7_sum, b.y8_r,   b.y8_s,  b.y8_t,  b.y9_r1,
                        b.y9_r2, b.y9_r3, b.y9_t,  b.y10_r,  b.y10_s};
    for (int v : lows)
        if (v < 0) throw std::invalid_argument("instance bounds must be nonnegative");
    const int need = std::max({b.y1_r, b.y1_s, b.y2_s, b.y3_sum, b.y4_r + 1, b.y4_s + 1,
                               b.y5_sum + 1, b.y6_r, b.y6_s, b.y7_sum, b.y8_r, b.y8_s, b.y8_t,
                               b.y9_r1, b.y9_r2, b.y9_r3, b.y9_t, b.y10_r, b.y10_s});
    if (need > cap_) throw std::invalid_argument("instance bounds exceed the level cap");
}

std::vector<RelationInstance> YangianModel::relation_instances(Family family,
                                                               const InstanceBounds& b) const {
    std::vector<RelationInstance> out;
    const int R = rank();
    auto X = [&](int sg, int i, int r) { return Element::single(x(sg, i, r)); };
    auto H = [&](int i, int r) { return Element::single(h(i, r)); };
    auto br = [&](const Element& a, const Element& bb) { return graded_bracket(alphabet_, a, bb); };
    auto abr = [&](const Element& a, const Element& bb) {
        return graded_bracket(alphabet_, a, bb, Scalar(-1));
    };
    auto push = [&](std::string label, Element e, bool ok, std::string why) {
        out.push_back({std::move(label), family, ok ? std::move(e) : Element::zero(), ok,
                       ok ? std::string() : std::move(why)});
    };
    auto half = [&](int sg, int i, int j) {
        return Scalar::of(rat(static_cast<long>(sg * c(i, j)), 2), 1);
    };

    if (family == Family::Full) {
        check_bounds(b);
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j)
                for (int r = 0; r <= b.y1_r; ++r)
                    for (int s = 0; s <= b.y1_s; ++s)
                        push("y1[i=" + num(i) + ",j=" + num(j) + ",r=" + num(r) + ",s=" + num(s) +
                                 "]",
                             br(H(i, r), H(j, s)), true, "");
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int j = 1; j <= R; ++j)
                    for (int s = 0; s <= b.y2_s; ++s)
                        push("y2[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + ",s=" + num(s) +
                                 "]",
                             br(H(i, 0), X(sg, j, s)) -
                                 X(sg, j, s).scaled(Scalar(static_cast<long>(sg * c(i, j)))),
                             true, "");
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j)
                for (int r = 0; r <= b.y3_sum; ++r)
                    for (int s = 0; r + s <= b.y3_sum; ++s) {
                        Element e = br(X(+1, i, r), X(-1, j, s));
                        if (i == j) e = e - H(i, r + s);
                        push("y3[i=" + num(i) + ",j=" + num(j) + ",r=" + num(r) + ",s=" + num(s) +
                                 "]",
                             std::move(e), true, "");
                    }
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int j = 1; j <= R; ++j)
                    for (int r = 0; r <= b.y4_r; ++r)
                        for (int s = 0; s <= b.y4_s; ++s) {
                            const bool ok =
                                !(i == j && parity(i) == 1 && !(c(i, i) != 0 && r == 0));
                            Element e = ok ? br(H(i, r + 1), X(sg, j, s)) -
                                                 br(H(i, r), X(sg, j, s + 1)) -
                                                 abr(H(i, r), X(sg, j, s)).scaled(half(sg, i, j))
                                           : Element::zero();
                            push("y4[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) +
                                     ",r=" + num(r) + ",s=" + num(s) + "]",
                                 std::move(e), ok,
                                 "i = j with |i| odd and (c_ii = 0 or r > 0)");
                        }
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int j = 1; j <= R; ++j)
                    for (int r = 0; r <= b.y5_sum; ++r)
                        for (int s = 0; r + s <= b.y5_sum; ++s) {
                            const bool ok = !(i == j && parity(i) == 1);
                            Element e = ok ? br(X(sg, i, r + 1), X(sg, j, s)) -
                                                 br(X(sg, i, r), X(sg, j, s + 1)) -
                                                 abr(X(sg, i, r), X(sg, j, s)).scaled(half(sg, i, j))
                                           : Element::zero();
                            push("y5[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) +
                                     ",r=" + num(r) + ",s=" + num(s) + "]",
                                 std::move(e), ok, "i = j with |i| odd");
                        }
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int r = 0; r <= b.y6_r; ++r)
                    for (int s = 0; s <= b.y6_s; ++s)
                        push("y6[" + sig(sg) + ",i=" + num(i) + ",r=" + num(r) + ",s=" + num(s) +
                                 "]",
                             c(i, i) == 0 ? br(H(i, r), X(sg, i, s)) : Element::zero(),
                             c(i, i) == 0, "c_ii != 0");
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int j = 1; j <= R; ++j)
                    for (int r = 0; r <= b.y7_sum; ++r)
                        for (int s = 0; r + s <= b.y7_sum; ++s)
                            push("y7[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) +
                                     ",r=" + num(r) + ",s=" + num(s) + "]",
                                 c(i, j) == 0 ? br(X(sg, i, r), X(sg, j, s)) : Element::zero(),
                                 c(i, j) == 0, "c_ij != 0");
        for (int sg : {+1, -1})
            for (int i = 1; i <= R; ++i)
                for (int j : {i - 1, i + 1}) {
                    if (j < 1 || j > R) continue;
                    for (int r = 0; r <= b.y8_r; ++r)
                        for (int s = 0; s <= b.y8_s; ++s)
                            for (int t = 0; t <= b.y8_t; ++t) {
                                const bool ok = c(i, i) != 0 && i != R;
                                Element e =
                                    ok ? br(X(sg, i, r), br(X(sg, i, s), X(sg, j, t))) +
                                             br(X(sg, i, s), br(X(sg, i, r), X(sg, j, t)))
                                       : Element::zero();
                                push("y8[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) +
                                         ",r=" + num(r) + ",s=" + num(s) + ",t=" + num(t) + "]",
                                     std::move(e), ok,
                                     c(i, i) == 0 ? "c_ii = 0"
                                                  : "cubic not asserted at the last vertex");
                            }
                }
        if (R >= 2) {
            const bool iib = classify_vertex(simple_, R - 1) == VertexType::TypeIIb;
            for (int sg : {+1, -1})
                for (int r1 = 0; r1 <= b.y9_r1; ++r1)
                    for (int r2 = 0; r2 <= b.y9_r2; ++r2)
                        for (int r3 = 0; r3 <= b.y9_r3; ++r3)
                            for (int t = 0; t <= b.y9_t; ++t) {
                                Element e = Element::zero();
                                if (iib) {
                                    const int lv[3] = {r1, r2, r3};
                                    static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1},
                                                                   {1, 0, 2}, {1, 2, 0},
                                                                   {2, 0, 1}, {2, 1, 0}};
                                    for (const auto& p : perm)
                                        e = e + br(X(sg, R, lv[p[0]]),
                                                   br(X(sg, R, lv[p[1]]),
                                                      br(X(sg, R, lv[p[2]]), X(sg, R - 1, t))));
                                }
                                push("y9[" + sig(sg) + ",r=(" + num(r1) + "," + num(r2) + "," +
                                         num(r3) + "),t=" + num(t) + "]",
                                     std::move(e), iib,
                                     "no grey vertex next to a black terminal");
                            }
        }
        for (int sg : {+1, -1})
            for (int j = 2; j + 1 <= R; ++j)
                for (int r = 0; r <= b.y10_r; ++r)
                    for (int s = 0; s <= b.y10_s; ++s) {
                        const bool ok = classify_vertex(simple_, j) != VertexType::None;
                        Element e = ok ? br(br(X(sg, j - 1, r), X(sg, j, 0)),
                                            br(X(sg, j, 0), X(sg, j + 1, s)))
                                       : Element::zero();
                        push("y10[" + sig(sg) + ",j=" + num(j) + ",r=" + num(r) + ",s=" + num(s) +
                                 "]",
                             std::move(e), ok, "vertex " + num(j) + " is not a middle vertex");
                    }
        return out;
    }

    for (int i = 1; i <= R; ++i)
        for (int j = 1; j <= R; ++j)
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; s <= 1; ++s)
                    push("my1[i=" + num(i) + ",j=" + num(j) + ",r=" + num(r) + ",s=" + num(s) +
                             "]",
                         br(H(i, r), H(j, s)), true, "");
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j)
                for (int s = 0; s <= 1; ++s)
                    push("my2[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + ",s=" + num(s) + "]",
                         br(H(i, 0), X(sg, j, s)) -
                             X(sg, j, s).scaled(Scalar(static_cast<long>(sg * c(i, j)))),
                         true, "");
    for (int i = 1; i <= R; ++i)
        for (int j = 1; j <= R; ++j)
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; r + s <= 1; ++s) {
                    Element e = br(X(+1, i, r), X(-1, j, s));
                    if (i == j) e = e - H(i, r + s);
                    push("my3[i=" + num(i) + ",j=" + num(j) + ",r=" + num(r) + ",s=" + num(s) +
                             "]",
                         std::move(e), true, "");
                }
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j) {
                const bool ok = !(i == j && c(i, i) == 0);
                Element e = ok ? br(htilde1(i), X(sg, j, 0)) -
                                     X(sg, j, 1).scaled(Scalar(static_cast<long>(sg * c(i, j))))
                               : Element::zero();
                push("my4[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + "]", std::move(e), ok,
                     "i = j with c_ii = 0");
            }
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j) {
                const bool ok = !(i == j && parity(i) == 1);
                Element e = ok ? br(X(sg, i, 1), X(sg, j, 0)) - br(X(sg, i, 0), X(sg, j, 1)) -
                                     abr(X(sg, i, 0), X(sg, j, 0)).scaled(half(sg, i, j))
                               : Element::zero();
                push("my5[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + "]", std::move(e), ok,
                     "i = j with |i| odd");
            }
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int s = 0; s <= 1; ++s)
                push("my6[" + sig(sg) + ",i=" + num(i) + ",s=" + num(s) + "]",
                     c(i, i) == 0 ? br(H(i, 1), X(sg, i, s)) : Element::zero(), c(i, i) == 0,
                     "c_ii != 0");
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int j = 1; j <= R; ++j)
                push("my7[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + "]",
                     c(i, j) == 0 ? br(X(sg, i, 0), X(sg, j, 0)) : Element::zero(), c(i, j) == 0,
                     "c_ij != 0");
    for (int sg : {+1, -1})
        for (int i = 1; i <= R; ++i)
            for (int j : {i - 1, i + 1}) {
                if (j < 1 || j > R) continue;
                const bool ok = c(i, i) != 0 && i != R;
                Element e = ok ? br(X(sg, i, 0), br(X(sg, i, 0), X(sg, j, 0))) : Element::zero();
                push("my8[" + sig(sg) + ",i=" + num(i) + ",j=" + num(j) + "]", std::move(e), ok,
                     c(i, i) == 0 ? "c_ii = 0" : "cubic not asserted at the last vertex");
            }
    if (R >= 2) {
        const bool iib = classify_vertex(simple_, R - 1) == VertexType::TypeIIb;
        for (int sg : {+1, -1}) {
            Element e = iib ? br(X(sg, R, 0),
                                 br(X(sg, R, 0), br(X(sg, R, 0), X(sg, R - 1, 0))))
                            : Element::zero();
            push("my9[" + sig(sg) + "]", std::move(e), iib,
                 "no grey vertex next to a black terminal");
        }
    }
    for (int sg : {+1, -1})
        for (int j = 2; j + 1 <= R; ++j) {
            const bool ok = classify_vertex(simple_, j) != VertexType::None;
            Element e = ok ? br(br(X(sg, j - 1, 0), X(sg, j, 0)),
                                br(X(sg, j, 0), X(sg, j + 1, 0)))
                           : Element::zero();
            push("my10[" + sig(sg) + ",j=" + num(j) + "]", std::move(e), ok,
                 "vertex " + num(j) + " is not a middle vertex");
        }
    return out;
}

const RewriteSystem& YangianModel::system(Family family) const {
    auto build = [this, family](std::unique_ptr<RewriteSystem>& slot) {
        auto sys = std::make_unique<RewriteSystem>(alphabet_, bound_);
        for (const auto& inst : relation_instances(family, full_rule_bounds_))
            if (inst.applicable && !inst.element.is_zero()) sys->add_relation(inst.element);
        sys->complete(budget_);
        slot = std::move(sys);
    };
    if (family == Family::Minimal) {
        std::call_once(minimal_once_, build, std::ref(minimal_sys_));
        return *minimal_sys_;
    }
    std::call_once(full_once_, build, std::ref(full_sys_));
    return *full_sys_;
}

Verdict YangianModel::verify_relation(const RelationInstance& inst, Family assumptions) const {
    if (!inst.applicable)
        throw std::invalid_argument("relation instance not applicable: " + inst.label);
    const Element target =
        assumptions == Family::Minimal ? expand(inst.element) : inst.element;
    return system(assumptions).test_zero(target);
}

std::vector<DeterminantDevice> YangianModel::determinant_devices() const {
    std::vector<DeterminantDevice> out;
    const int R = rank();
    auto C = [&](int a, int b) { return Rational(static_cast<long>(cartan_.at(a, b))); };
    for (int i = 1; i <= R; ++i)
        for (int j = i + 1; j <= R; ++j) {
            int m = 0, n = 0;
            std::string tag;
            const int d = j - i;
            const bool oi = parity(i) == 1, oj = parity(j) == 1;
            if (d == 1) {
                m = i, n = j, tag = "d1";
            } else if (d == 2) {
                const int mid = (i + j) / 2;
                if (!oi && !oj) {
                    m = i, n = j, tag = "d2-ee";
                } else if (oi && !oj) {
                    m = mid, n = j, tag = "d2-oe";
                } else if (!oi && oj) {
                    m = i, n = mid, tag = "d2-eo";
                } else if (j == R &&
                           simple_.kind[static_cast<std::size_t>(j - 1)] == NodeKind::Black) {
                    m = mid, n = j, tag = "d2-oo-terminal";
                } else {
                    m = mid, n = j + 1 <= R ? j + 1 : i - 1, tag = "d2-oo-interior";
                }
            } else {
                m = oi ? i + 1 : i;
                n = oj ? j - 1 : j;
                tag = "far";
            }
            DeterminantDevice dev;
            dev.label = "pair[i=" + num(i) + ",j=" + num(j) + ",case=" + tag + "]";
            dev.rows = {m, n};
            dev.matrix = {{C(i, m), C(j, m)}, {C(i, n), C(j, n)}};
            dev.det = dev.matrix[0][0] * dev.matrix[1][1] - dev.matrix[0][1] * dev.matrix[1][0];
            out.push_back(std::move(dev));
        }
    for (int j = 2; j + 1 <= R; ++j) {
        const VertexType t = classify_vertex(simple_, j);
        if (t == VertexType::None) continue;
        int m = j - 1;
        std::string tag = t == VertexType::TypeIIa ? "ii-a" : "ii-b";
        if (t == VertexType::TypeI) {
            const bool ol = parity(j - 1) == 1, orr = parity(j + 1) == 1;
            if (ol != orr) {
                m = j - 1, tag = "i-mixed";
            } else {
                m = j >= 3 ? j - 2 : j + 2;
                tag = "i-ext";
            }
        }
        DeterminantDevice dev;
        dev.label = "middle[j=" + num(j) + ",case=" + tag + "]";
        dev.rows = {m, j, j + 1};
        for (int row : dev.rows)
            dev.matrix.push_back({C(j - 1, row), C(j, row), C(j + 1, row)});
        const auto& A = dev.matrix;
        dev.det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
                  A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
                  A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
        out.push_back(std::move(dev));
    }
    return out;
}

void YangianModel::set_bound(DegreeBound b) {
    if (minimal_sys_ || full_sys_) throw std::logic_error("rewrite systems already built");
    bound_ = b;
}

void YangianModel::set_completion_budget(std::chrono::milliseconds budget) {
    if (minimal_sys_ || full_sys_) throw std::logic_error("rewrite systems already built");
    budget_ = budget;
}

void YangianModel::set_full_rule_bounds(const InstanceBounds& bounds) {
    if (full_sys_) throw std::logic_error("full rewrite system already built");
    check_bounds(bounds);
    full_rule_bounds_ = bounds;
}

std::string instance_listing(const std::vector<RelationInstance>& instances) {
    std::string out;
    for (const auto& inst : instances) {
        out += inst.label;
        out += inst.applicable ? ": ok" : ": skipped (" + inst.reason + ")";
        out += '\n';
    }
    return out;
}

}  // namespace yangcheck
