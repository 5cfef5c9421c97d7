#include "yangcheck/freealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace yangcheck {

LetterId Alphabet::add(std::string name, int parity, long level) {
    if (name.empty()) throw std::invalid_argument("Alphabet::add: empty name");
    if (parity != 0 && parity != 1) throw std::invalid_argument("Alphabet::add: parity must be 0 or 1");
    if (level < 0) throw std::invalid_argument("Alphabet::add: negative level");
    if (index_.count(name)) throw std::invalid_argument("Alphabet::add: duplicate name " + name);
    LetterId id = static_cast<LetterId>(letters_.size());
    index_.emplace(name, id);
    letters_.push_back({std::move(name), parity, level});
    return id;
}

const Letter& Alphabet::at(LetterId id) const {
    if (id >= letters_.size()) throw std::out_of_range("Alphabet::at: bad id");
    return letters_[id];
}

std::optional<LetterId> Alphabet::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int word_parity(const Alphabet& a, const Word& w) {
    int p = 0;
    for (LetterId id : w) p ^= a.at(id).parity;
    return p;
}

long word_level(const Alphabet& a, const Word& w) {
    long s = 0;
    for (LetterId id : w) s += a.at(id).level;
    return s;
}

bool word_less(const Alphabet& a, const Word& x, const Word& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    long lx = word_level(a, x), ly = word_level(a, y);
    if (lx != ly) return lx < ly;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string word_to_string(const Alphabet& a, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += a.at(w[i]).name;
    }
    return s;
}

Element Element::unit(Scalar c) { return from_word({}, std::move(c)); }

Element Element::from_word(Word w, Scalar c) {
    Element e;
    e.add_term(w, c);
    return e;
}

Element Element::single(LetterId id, Scalar c) { return from_word({id}, std::move(c)); }

Scalar Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator-() const {
    Element r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element operator*(const Element& x, const Element& y) {
    Element r;
    for (const auto& [wx, cx] : x.terms_)
        for (const auto& [wy, cy] : y.terms_) {
            Word w = wx;
            w.insert(w.end(), wy.begin(), wy.end());
            r.add_term(w, cx * cy);
        }
    return r;
}

Element Element::scaled(const Scalar& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [w, t] : terms_) r.terms_.emplace(w, t * c);
    return r;
}

const Word& Element::leading_word(const Alphabet& a) const {
    if (terms_.empty()) throw std::logic_error("Element::leading_word: zero element");
    const Word* best = &terms_.begin()->first;
    for (const auto& [w, c] : terms_)
        if (word_less(a, *best, w)) best = &w;
    return *best;
}

int Element::parity(const Alphabet& a) const {
    if (terms_.empty()) return 0;
    int p = word_parity(a, terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_parity(a, w) != p) throw std::logic_error("Element::parity: mixed parities");
    return p;
}

namespace {

std::string term_string(const Scalar& c, const std::string& word_str, bool word_empty) {
    std::string cs = c.to_string();
    if (word_empty) return cs;
    if (cs == "1") return word_str;
    if (cs == "-1") return "-" + word_str;
    return cs + " " + word_str;
}

std::string join_terms(std::vector<std::string> parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

}  // namespace

std::string Element::to_string(const Alphabet& a) const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Word, Scalar>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](auto* x, auto* y) { return word_less(a, y->first, x->first); });
    std::vector<std::string> parts;
    parts.reserve(ts.size());
    for (auto* t : ts)
        parts.push_back(term_string(t->second, word_to_string(a, t->first), t->first.empty()));
    return join_terms(std::move(parts));
}

Element graded_bracket(const Alphabet& a, const Element& x, const Element& y, const Scalar& v) {
    Element r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Scalar c = cx * cy;
            Word xy = wx;
            xy.insert(xy.end(), wy.begin(), wy.end());
            r.add_term(xy, c);
            Word yx = wy;
            yx.insert(yx.end(), wx.begin(), wx.end());
            Scalar back = c * v;
            if (!(word_parity(a, wx) && word_parity(a, wy))) back = -back;
            r.add_term(yx, back);
        }
    return r;
}

Tensor2 tensor_of(const Element& x, const Element& y) {
    Tensor2 r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) r.add_term({wx, wy}, cx * cy);
    return r;
}

Tensor3 tensor_of(const Element& x, const Element& y, const Element& z) {
    Tensor3 r;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            for (const auto& [wz, cz] : z.terms()) r.add_term({wx, wy, wz}, cx * cy * cz);
    return r;
}

template <std::size_t N>
TensorElem<N> tensor_mul(const Alphabet& a, const TensorElem<N>& x, const TensorElem<N>& y) {
    TensorElem<N> r;
    for (const auto& [kx, cx] : x.terms()) {
        std::array<int, N> px;
        for (std::size_t i = 0; i < N; ++i) px[i] = word_parity(a, kx[i]);
        for (const auto& [ky, cy] : y.terms()) {
            int sign = 0;
            for (std::size_t i = 1; i < N; ++i)
                for (std::size_t j = 0; j < i; ++j) sign ^= px[i] & word_parity(a, ky[j]);
            typename TensorElem<N>::Key k;
            for (std::size_t i = 0; i < N; ++i) {
                k[i] = kx[i];
                k[i].insert(k[i].end(), ky[i].begin(), ky[i].end());
            }
            Scalar c = cx * cy;
            r.add_term(k, sign ? -c : c);
        }
    }
    return r;
}

template Tensor2 tensor_mul<2>(const Alphabet&, const Tensor2&, const Tensor2&);
template Tensor3 tensor_mul<3>(const Alphabet&, const Tensor3&, const Tensor3&);

Tensor2 tau_swap(const Alphabet& a, const Tensor2& x) {
    Tensor2 r;
    for (const auto& [k, c] : x.terms()) {
        int sign = word_parity(a, k[0]) & word_parity(a, k[1]);
        r.add_term({k[1], k[0]}, sign ? -c : c);
    }
    return r;
}

Tensor2 box_embed(const Element& x) {
    Tensor2 r;
    for (const auto& [w, c] : x.terms()) {
        if (w.size() != 1)
            throw std::invalid_argument("box_embed: support must consist of single letters");
        r.add_term(Tensor2::Key{w, Word{}}, c);
        r.add_term(Tensor2::Key{Word{}, w}, c);
    }
    return r;
}

Tensor2 tensor_bracket(const Alphabet& a, const Tensor2& x, const Tensor2& y) {
    Tensor2 r;
    for (const auto& [kx, cx] : x.terms()) {
        int p0 = word_parity(a, kx[0]), p1 = word_parity(a, kx[1]);
        int px = p0 ^ p1;
        for (const auto& [ky, cy] : y.terms()) {
            int q0 = word_parity(a, ky[0]), q1 = word_parity(a, ky[1]);
            int py = q0 ^ q1;
            Scalar c = cx * cy;
            // x y with the Koszul sign for the inner legs crossing
            Word f0 = kx[0];
            f0.insert(f0.end(), ky[0].begin(), ky[0].end());
            Word f1 = kx[1];
            f1.insert(f1.end(), ky[1].begin(), ky[1].end());
            r.add_term({f0, f1}, (p1 & q0) ? -c : c);
            // minus (-1)^{|x||y|} y x
            Word g0 = ky[0];
            g0.insert(g0.end(), kx[0].begin(), kx[0].end());
            Word g1 = ky[1];
            g1.insert(g1.end(), kx[1].begin(), kx[1].end());
            int sign = (q1 & p0) ^ (px & py) ^ 1;
            r.add_term({g0, g1}, sign ? -c : c);
        }
    }
    return r;
}

template <std::size_t N>
std::string tensor_to_string(const Alphabet& a, const TensorElem<N>& x) {
    if (x.is_zero()) return "0";
    std::vector<const std::pair<const typename TensorElem<N>::Key, Scalar>*> ts;
    for (const auto& t : x.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](auto* u, auto* v) {
        for (std::size_t i = 0; i < N; ++i) {
            if (u->first[i] == v->first[i]) continue;
            return word_less(a, v->first[i], u->first[i]);
        }
        return false;
    });
    std::vector<std::string> parts;
    for (auto* t : ts) {
        std::string ws;
        for (std::size_t i = 0; i < N; ++i) {
            if (i) ws += " (x) ";
            ws += word_to_string(a, t->first[i]);
        }
        std::string cs = t->second.to_string();
        if (cs == "1")
            parts.push_back(ws);
        else if (cs == "-1")
            parts.push_back("-" + ws);
        else
            parts.push_back(cs + " " + ws);
    }
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

template std::string tensor_to_string<2>(const Alphabet&, const Tensor2&);
template std::string tensor_to_string<3>(const Alphabet&, const Tensor3&);

}  // namespace yangcheck
