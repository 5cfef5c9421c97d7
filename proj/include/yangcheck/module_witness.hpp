#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangcheck/freealg.hpp"
#include "yangcheck/rational.hpp"
#include "yangcheck/scalar.hpp"
#include "yangcheck/yangian.hpp"

namespace yangcheck {

// Dense matrix over the scalar field: just enough operations to carry
// module actions and the exact images of elements under them.
class ScalarMat {
  public:
    ScalarMat() : rows_(0), cols_(0) {}
    ScalarMat(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
    static ScalarMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    ScalarMat operator+(const ScalarMat& o) const;
    ScalarMat operator-(const ScalarMat& o) const;
    ScalarMat operator*(const ScalarMat& o) const;
    ScalarMat scaled(const Scalar& c) const;

    bool operator==(const ScalarMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const ScalarMat& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    int rows_, cols_;
    std::vector<Scalar> data_;
};

// Non-membership certificates from a concrete module.  Level-0 letters act
// by the defining representation of the underlying Lie superalgebra; the
// level-1 action is solved exactly over the scalar field on the weight-
// compatible positions, using every applicable minimal instance that is
// linear in level-1 letters.  Free directions of the solution space are set
// to the first trial value whose candidate survives full verification:
// every applicable minimal instance must evaluate to the zero matrix.
// Evaluation is then an algebra map annihilating each ideal generator, so
// it kills the whole two-sided ideal; a nonzero image therefore proves the
// element lies outside the ideal, at any rewriting bound.
class ModuleWitness {
  public:
    static std::optional<ModuleWitness> build(
        const YangianModel& model,
        const std::vector<Rational>& trials = {rat(1), rat(2), rat(3)});

    int dimension() const { return dim_; }
    // Kernel dimension of the solved linear system.
    int free_parameters() const { return free_params_; }
    // Value assigned to every free direction of the verified candidate.
    const Rational& trial_used() const { return trial_; }
    std::size_t verified_instances() const { return verified_; }

    bool has_action(LetterId id) const;
    const ScalarMat& action(LetterId id) const;  // throws when unassigned

    // Image of an element; throws when a letter has no assigned action
    // (letters of level two and above are never assigned).
    ScalarMat evaluate(const Element& e) const;

    bool certifies_nonmembership(const Element& e) const { return !evaluate(e).is_zero(); }

  private:
    ModuleWitness() = default;

    int dim_ = 0;
    int free_params_ = 0;
    Rational trial_;
    std::size_t verified_ = 0;
    std::vector<std::optional<ScalarMat>> actions_;
};

}  // namespace yangcheck
