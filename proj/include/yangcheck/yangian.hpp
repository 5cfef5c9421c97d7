#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "yangcheck/freealg.hpp"
#include "yangcheck/rational.hpp"
#include "yangcheck/rewriting.hpp"
#include "yangcheck/root_data.hpp"

namespace yangcheck {

// Which presentation a relation instance belongs to: the minimalistic one
// (letters of level 0 and 1 only) or the full one (letters of every level).
enum class Family { Minimal, Full };

const char* to_string(Family f);

// One concrete defining relation, stored as LHS minus RHS.  Instances whose
// side condition fails carry a zero element, applicable=false, and the reason.
struct RelationInstance {
    std::string label;
    Family family;
    Element element;
    bool applicable = true;
    std::string reason;
};

// Index ranges for full-family instance generation.  Levels named after the
// letters in each display; generators reject bounds that exceed the cap.
struct InstanceBounds {
    int y1_r = 2, y1_s = 2;
    int y2_s = 2;
    int y3_sum = 3;
    int y4_r = 1, y4_s = 2;
    int y5_sum = 2;
    int y6_r = 1, y6_s = 1;
    int y7_sum = 2;
    int y8_r = 1, y8_s = 0, y8_t = 1;
    int y9_r1 = 1, y9_r2 = 0, y9_r3 = 0, y9_t = 1;
    int y10_r = 1, y10_s = 1;
};

// Probe-row selection certificate: a submatrix of the Cartan matrix whose
// determinant being nonzero lets one solve for the bracketed coefficients.
struct DeterminantDevice {
    std::string label;
    std::vector<int> rows;
    std::vector<std::vector<Rational>> matrix;
    Rational det;
};

// The deformation of U(g[u]) attached to one Borel choice, truncated at a
// level cap: alphabet, derived-generator expansions, relation instances, and
// lazily completed rewrite systems for both presentations.
class YangianModel {
public:
    explicit YangianModel(const BorelChoice& borel, int level_cap = 4);
    YangianModel(const YangianModel&) = delete;
    YangianModel& operator=(const YangianModel&) = delete;

    int rank() const { return simple_.rank(); }
    int cap() const { return cap_; }
    const BorelChoice& borel() const { return borel_; }
    const SimpleRootSystem& simple() const { return simple_; }
    const CartanMatrix& cartan() const { return cartan_; }
    const Alphabet& alphabet() const { return alphabet_; }

    long long c(int i, int j) const { return cartan_.at(i, j); }
    int parity(int i) const { return simple_.parity[static_cast<std::size_t>(i - 1)]; }

    // Letter ids; i is 1-based, 0 <= r <= cap.
    LetterId xp(int i, int r) const;
    LetterId xm(int i, int r) const;
    LetterId h(int i, int r) const;
    LetterId x(int sign, int i, int r) const { return sign > 0 ? xp(i, r) : xm(i, r); }

    // Recursion pivot: i itself when c_ii != 0, else i+1.
    int pivot(int i) const;

    // Images of high-level letters over the level-0/1 sub-alphabet.
    const Element& expand_x(int sign, int i, int r) const;
    const Element& expand_h(int i, int r) const;
    Element expand(const Element& e) const;

    // h_{i,1} - (hbar/2) h_{i,0}^2.
    Element htilde1(int i) const;
    // Coefficient of t^{-r-1} in log(1 + hbar sum_r h_{i,r} t^{-r-1}), / hbar.
    Element htilde(int i, int r) const;
    // Corrected series: subtracts even-binomial multiples of lower terms.
    Element hdoubletilde(int i, int j, int r) const;
    // [htilde_{i,r}, x^sign_{j,s}] minus its closed form, fully expanded.
    Element thx_identity(int i, int j, int r, int s, int sign) const;

    // Every instance in range, applicable or not; deterministic order.
    // Minimal-family generation ignores the bounds (its levels are fixed).
    std::vector<RelationInstance> relation_instances(
        Family family, const InstanceBounds& bounds = InstanceBounds{}) const;

    // Completed-once rewrite system of a family's applicable instances.
    const RewriteSystem& system(Family family) const;

    // Reduce the instance against a family's system.  Minimal assumptions
    // first expand derived letters; full assumptions keep them as letters.
    Verdict verify_relation(const RelationInstance& inst, Family assumptions) const;

    // Probe-row certificates for every index pair and every middle vertex.
    std::vector<DeterminantDevice> determinant_devices() const;

    DegreeBound bound() const { return bound_; }
    void set_bound(DegreeBound b);
    void set_completion_budget(std::chrono::milliseconds budget);
    void set_full_rule_bounds(const InstanceBounds& bounds);

private:
    Element expand_letter(LetterId id) const;
    void check_bounds(const InstanceBounds& b) const;

    BorelChoice borel_;
    SimpleRootSystem simple_;
    CartanMatrix cartan_;
    int cap_;
    Alphabet alphabet_;
    DegreeBound bound_{6, 12};
    std::chrono::milliseconds budget_ = std::chrono::milliseconds::max();
    InstanceBounds full_rule_bounds_{};

    // Indexed (i-1)*(cap+1)+r, filled in the constructor.
    std::vector<Element> xplus_, xminus_, hletters_;

    mutable std::unique_ptr<RewriteSystem> minimal_sys_, full_sys_;
    mutable std::once_flag minimal_once_, full_once_;
};

// One line per instance: label plus "ok" or the skip reason, for audit.
std::string instance_listing(const std::vector<RelationInstance>& instances);

}  // namespace yangcheck
