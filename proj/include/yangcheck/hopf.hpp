#pragma once

#include <memory>
#include <string>
#include <vector>

#include "yangcheck/enveloping.hpp"
#include "yangcheck/report.hpp"
#include "yangcheck/yangian.hpp"

namespace yangcheck {

// Weighting of the positive-root sums in the level-one coproduct and
// antipode images: Plain uses the pairing coefficient as-is, ParitySigned
// multiplies each summand by the parity sign of its root.  The two arise
// from the two ways of splitting the Casimir tensor into halves; the axiom
// checks adjudicate empirically which pairings cancel.
enum class SignConvention { Plain, ParitySigned };

const char* to_string(SignConvention c);

// Reduces every tensor leg independently to its normal form and recollects.
// Sound for equality in the tensor square of the quotient: each step only
// moves the representative by (ideal (x) algebra) + (algebra (x) ideal).
Tensor2 reduce_legs(const RewriteSystem& sys, const Tensor2& t);
Tensor3 reduce_legs(const RewriteSystem& sys, const Tensor3& t);

// Coproduct, counit, and antipode over one deformation model's alphabet,
// with mechanical checks of the Hopf superalgebra axioms on the truncated
// generator fragment {h_{i,0}, x^+-_{i,0}, h_{i,1}}.
//
// Level-zero letters are primitive; higher images follow the same pivot
// recursion the model uses for its derived generators.  The root sums use
// root vectors normalized against the realized algebra: the raising vector
// maps onto the chosen basis element and the lowering one carries the dual
// pairing weight, so their tensor sum is the lowering-raising half of the
// invariant Casimir tensor.
class HopfStructure {
public:
    explicit HopfStructure(const YangianModel& model);
    HopfStructure(const HopfStructure&) = delete;
    HopfStructure& operator=(const HopfStructure&) = delete;

    const YangianModel& model() const { return model_; }
    const LieAlgebra& lie() const { return env_->lie(); }
    const Enveloping& enveloping() const { return *env_; }

    // Root vectors as elements over the level-zero letters; k indexes the
    // positive roots in realized order.
    const Element& raising(std::size_t k) const;
    const Element& lowering(std::size_t k) const;

    // Sum over positive roots of lowering (x) raising, optionally signed.
    const Tensor2& omega_plus(SignConvention conv) const;

    // Coefficient of the root-k summand in the level-one tail for vertex i.
    Scalar tail_coefficient(SignConvention conv, int i, std::size_t k) const;

    // The algebra map to scalars killing every generator: the coefficient
    // of the empty word.
    Scalar counit(const Element& e) const;

    // Image of one generator letter; caches per convention.
    const Tensor2& coproduct_letter(LetterId id, SignConvention conv) const;
    const Element& antipode_letter(LetterId id, SignConvention conv) const;

    // Multiplicative extension over words, Koszul product on tensors.
    Tensor2 coproduct(const Element& e, SignConvention conv) const;
    // Antimultiplicative extension: letters reversed, Koszul sign for each
    // transposed odd pair.
    Element antipode(const Element& e, SignConvention conv) const;

    // (Delta (x) id) and (id (x) Delta) applied to a two-tensor.
    Tensor3 delta_left(const Tensor2& t, SignConvention conv) const;
    Tensor3 delta_right(const Tensor2& t, SignConvention conv) const;

    // Counit applied to one leg, multiplied out onto the other.
    Element eps_left(const Tensor2& t) const;
    Element eps_right(const Tensor2& t) const;

    // Multiply-out of (S (x) id) Delta(g) resp. (id (x) S) Delta(g) minus
    // eps(g) 1, with independent conventions for the coproduct and the
    // antipode so mixed pairings can be probed.
    Element antipode_residual_left(LetterId id, SignConvention dconv, SignConvention sconv) const;
    Element antipode_residual_right(LetterId id, SignConvention dconv, SignConvention sconv) const;

    // Runs the whole suite on the truncated fragment under one convention
    // used for both coproduct and antipode; mixed-pairing residuals are
    // reported alongside.  Leg comparisons reduce by the minimal rules.
    VerificationReport check_axioms(SignConvention conv) const;

private:
    struct RootVectors {
        Element raising, lowering;
    };

    void build_root_vectors();
    Tensor2 make_coproduct(LetterId id, SignConvention conv) const;
    Element make_antipode(LetterId id, SignConvention conv) const;
    // (kind 0 = lowering, 1 = cartan, 2 = raising), vertex, level.
    void decode(LetterId id, int& kind, int& i, int& r) const;

    const YangianModel& model_;
    LieAlgebra la_;
    std::unique_ptr<Enveloping> env_;
    std::vector<RootVectors> roots_;
    std::vector<Scalar> pairing_weight_;
    mutable std::vector<std::unique_ptr<Tensor2>> cop_cache_[2];
    mutable std::vector<std::unique_ptr<Element>> ant_cache_[2];
    Tensor2 omega_[2];
};

}  // namespace yangcheck
