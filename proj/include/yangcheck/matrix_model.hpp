#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yangcheck/ratmat.hpp"
#include "yangcheck/root_data.hpp"

namespace yangcheck {

// Concrete realization of the orthosymplectic algebra for one Borel choice:
// exact matrices in the defining representation, a basis graded by weight
// and parity, and the full bracket table over that basis.
struct BasisElem {
    std::string name;
    RatMat mat;
    Weight weight;
    int parity = 0;
};

using BracketRow = std::vector<std::pair<std::size_t, Rational>>;

struct LieAlgebra {
    int m = 0, n = 0;
    BorelChoice borel;
    RootSystem roots;
    CartanMatrix cartan;
    Rational kappa;  // normalization of the invariant form relative to str

    // Layout: one f per positive root, then the Cartan, then one e per
    // positive root, in the order of roots.positive.
    std::vector<BasisElem> basis;
    std::vector<std::vector<BracketRow>> table;

    std::size_t rank() const { return roots.simple.rank(); }
    std::size_t positive_count() const { return roots.positive.size(); }
    std::size_t dim() const { return basis.size(); }
    std::size_t fpos(std::size_t k) const { return k; }
    std::size_t hpos(int i) const { return positive_count() + static_cast<std::size_t>(i - 1); }
    std::size_t epos(std::size_t k) const { return positive_count() + rank() + k; }

    const BracketRow& bracket(std::size_t i, std::size_t j) const { return table[i][j]; }
    // Invariant form kappa * str(b_i b_j).
    Rational pairing(std::size_t i, std::size_t j) const;
};

// x y - (-1)^{px py} y x
RatMat super_bracket(const RatMat& x, const RatMat& y, int px, int py);

Rational supertrace(const RatMat& x, int p);

// Builds the algebra and hard-checks it on the way: weight spaces have the
// expected dimensions, the form restricted to the Cartan is a consistent
// multiple of the symmetric Cartan matrix, [e_a, f_a] realizes the weight
// coroot, and the bracket closes over the basis.
LieAlgebra build_lie_algebra(int m, int n, const BorelChoice& borel);

struct SerreReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_ok = true;
};

// Defining-relation sweep in the matrix realization: Cartan actions and
// pairings, vanishing brackets at zero Cartan entries, adjacent cubic
// relations away from the terminal node, the unconditional terminal
// quartic relation, and the length-four mixed relation at interior nodes.
SerreReport verify_serre(const LieAlgebra& la);

}  // namespace yangcheck
