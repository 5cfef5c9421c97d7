#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "yangcheck/scalar.hpp"

namespace yangcheck {

// Generators of a free associative superalgebra.  Each letter carries a
// Z/2 parity and a nonnegative level used by the word order.
using LetterId = std::uint32_t;

struct Letter {
    std::string name;
    int parity = 0;  // 0 even, 1 odd
    long level = 0;
};

class Alphabet {
public:
    LetterId add(std::string name, int parity, long level = 0);
    const Letter& at(LetterId id) const;
    std::optional<LetterId> id_of(const std::string& name) const;
    std::size_t size() const { return letters_.size(); }

private:
    std::vector<Letter> letters_;
    std::unordered_map<std::string, LetterId> index_;
};

using Word = std::vector<LetterId>;

int word_parity(const Alphabet& a, const Word& w);
long word_level(const Alphabet& a, const Word& w);

// Word order: length, then total level, then lexicographic by letter id.
// Multiplicative and well-founded, so rewriting toward smaller words halts.
bool word_less(const Alphabet& a, const Word& x, const Word& y);

std::string word_to_string(const Alphabet& a, const Word& w);

// Finitely supported Scalar-linear combination of words.  The product is
// concatenation extended bilinearly; parity signs enter only through the
// operations that are defined to carry them (bracket, tensor structure).
class Element {
public:
    Element() = default;

    static Element zero() { return {}; }
    static Element unit(Scalar c = Scalar(1));
    static Element from_word(Word w, Scalar c = Scalar(1));
    static Element single(LetterId id, Scalar c = Scalar(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Word& w) const;
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element x, const Element& y) { return x += y; }
    friend Element operator-(Element x, const Element& y) { return x -= y; }
    friend Element operator*(const Element& x, const Element& y);
    Element scaled(const Scalar& c) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    // Largest word of the support in the given order; throws when zero.
    const Word& leading_word(const Alphabet& a) const;

    // Defined only when every word of the support has the same parity.
    int parity(const Alphabet& a) const;

    std::string to_string(const Alphabet& a) const;

private:
    std::map<Word, Scalar> terms_;
};

// [x, y]_v = xy - (-1)^{|x||y|} v yx on homogeneous words, bilinear overall.
Element graded_bracket(const Alphabet& a, const Element& x, const Element& y,
                       const Scalar& v = Scalar(1));

// N-fold tensor power with the Koszul product rule.
template <std::size_t N>
class TensorElem {
public:
    using Key = std::array<Word, N>;

    TensorElem() = default;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    TensorElem operator-() const {
        TensorElem r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    TensorElem& operator+=(const TensorElem& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    TensorElem& operator-=(const TensorElem& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend TensorElem operator+(TensorElem x, const TensorElem& y) { return x += y; }
    friend TensorElem operator-(TensorElem x, const TensorElem& y) { return x -= y; }
    TensorElem scaled(const Scalar& c) const {
        TensorElem r;
        if (c.is_zero()) return r;
        for (const auto& [k, w] : terms_) r.terms_.emplace(k, w * c);
        return r;
    }

    bool operator==(const TensorElem& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorElem& o) const { return !(*this == o); }

private:
    std::map<Key, Scalar> terms_;
};

using Tensor2 = TensorElem<2>;
using Tensor3 = TensorElem<3>;

// Plain bilinear assembly x (x) y, no sign: signs belong to the product.
Tensor2 tensor_of(const Element& x, const Element& y);
Tensor3 tensor_of(const Element& x, const Element& y, const Element& z);

// (a1 (x) .. (x) aN)(b1 (x) .. (x) bN)
//   = (-1)^{sum_{j<i} |a_i||b_j|} a1 b1 (x) .. (x) aN bN.
template <std::size_t N>
TensorElem<N> tensor_mul(const Alphabet& a, const TensorElem<N>& x, const TensorElem<N>& y);

// a (x) b -> (-1)^{|a||b|} b (x) a.
Tensor2 tau_swap(const Alphabet& a, const Tensor2& x);

// x -> x (x) 1 + 1 (x) x, defined on combinations of single letters only.
Tensor2 box_embed(const Element& x);

// [X, Y] = XY - (-1)^{|X||Y|} YX with |a (x) b| = |a| + |b|, bilinear.
Tensor2 tensor_bracket(const Alphabet& a, const Tensor2& x, const Tensor2& y);

template <std::size_t N>
std::string tensor_to_string(const Alphabet& a, const TensorElem<N>& x);

}  // namespace yangcheck
