#pragma once

#include <memory>

#include "yangcheck/matrix_model.hpp"
#include "yangcheck/rewriting.hpp"

namespace yangcheck {

// Enveloping algebra of a realized Lie superalgebra as a rewriting system:
// one letter per basis element, ordered lowering block ascending, Cartan,
// raising block descending; straightening rules sort any word into that
// order.  The diamond property of these rules is equivalent to the Jacobi
// identity of the bracket table, so completion adding a rule is fatal.
class Enveloping {
public:
    explicit Enveloping(const LieAlgebra& la);
    Enveloping(const Enveloping&) = delete;
    Enveloping& operator=(const Enveloping&) = delete;

    const LieAlgebra& lie() const { return la_; }
    const Alphabet& alphabet() const { return alpha_; }
    const RewriteSystem& system() const { return *sys_; }

    LetterId letter(std::size_t basis_index) const { return letter_of_[basis_index]; }
    Element gen(std::size_t basis_index) const { return Element::single(letter(basis_index)); }
    Element e_gen(int i) const { return gen(la_.epos(static_cast<std::size_t>(i - 1))); }
    Element f_gen(int i) const { return gen(la_.fpos(static_cast<std::size_t>(i - 1))); }
    Element h_gen(int i) const { return gen(la_.hpos(i)); }

    // Bracket of two basis letters expanded into single-letter words.
    Element bracket_image(std::size_t bi, std::size_t bj) const;

    Element normalize(const Element& e) const { return sys_->normalize(e); }

private:
    LieAlgebra la_;
    Alphabet alpha_;
    std::vector<LetterId> letter_of_;
    std::unique_ptr<RewriteSystem> sys_;
};

// Sum over a homogeneous basis of the algebra of x_a (x) x^a, the two
// factors dual under the invariant form.
Tensor2 casimir(const Enveloping& env);

// Normalizes the two legs of every term independently.
Tensor2 normalize_legs(const Enveloping& env, const Tensor2& t);

// Concatenates the legs: the image under the product map.
Element multiply_legs(const Tensor2& t);

}  // namespace yangcheck
