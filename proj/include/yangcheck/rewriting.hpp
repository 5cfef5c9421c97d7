#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "yangcheck/freealg.hpp"

namespace yangcheck {

// lhs -> rhs with every rhs word strictly below lhs in the word order,
// so a rewrite step never enlarges a word.
struct RewriteRule {
    Word lhs;
    Element rhs;
};

// Truncation for completion: superpositions longer or deeper than this are
// skipped and recorded, which forfeits NonZero certificates but keeps Zero
// certificates sound.
struct DegreeBound {
    std::size_t max_word_len = 6;
    long max_total_level = 12;
};

enum class Verdict { Zero, NonZero, Inconclusive };
std::string to_string(Verdict v);

struct CompletionStats {
    std::size_t pairs_processed = 0;
    std::size_t pairs_skipped = 0;
    std::size_t rules_added = 0;
    bool reached_fixpoint = false;
    bool timed_out = false;
    bool bound_hit = false;
};

struct ReductionStep {
    Word from;
    std::size_t pos = 0;
    std::size_t rule = 0;
};

// A rewriting system over a fixed alphabet, completed by resolving
// suffix-prefix and inclusion superpositions in a deterministic order.
class RewriteSystem {
public:
    explicit RewriteSystem(const Alphabet& a, DegreeBound bound = {});

    // Reduces the relation against the current rules and, when nonzero,
    // orients its leading word into a new rule.  Throws when the reduced
    // relation is a nonzero multiple of the empty word.
    void add_relation(const Element& e);

    // Processes pending superpositions smallest-first until none remain,
    // the budget expires, or every survivor exceeds the bound.
    CompletionStats complete(
        std::chrono::milliseconds budget = std::chrono::milliseconds::max());

    // True when no pending pair remains and none was ever skipped, so
    // normal forms are unique and a nonzero one certifies non-membership.
    bool fixpoint_certified() const { return queue_.empty() && !bound_hit_; }
    bool bound_hit() const { return bound_hit_; }
    std::size_t pending_pairs() const { return queue_.size(); }

    // Leftmost-position, lowest-id-rule reduction to normal form.  Linear
    // in the element by construction; unique once fixpoint_certified().
    Element normalize(const Element& e, std::vector<ReductionStep>* trace = nullptr) const;

    Verdict test_zero(const Element& e) const;

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const Alphabet& alphabet() const { return *alpha_; }
    std::string dump_rules() const;

private:
    struct Task {
        Word super;
        std::size_t left = 0, right = 0;  // rule ids
        std::size_t pos = 0;              // offset of right lhs inside super
    };
    struct TaskLess {
        const Alphabet* a;
        bool operator()(const Task& x, const Task& y) const;
    };

    bool exceeds_bound(const Word& w) const;
    void add_rule(Word lhs, Element rhs);
    void enqueue_overlaps(std::size_t id);
    void enqueue(Task t);
    // First rule matching inside w at the leftmost position, lowest id.
    bool find_match(const Word& w, std::size_t& pos, std::size_t& rule) const;

    const Alphabet* alpha_;
    DegreeBound bound_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<std::size_t>> by_first_;  // rule ids by lhs front letter
    std::set<Task, TaskLess> queue_;
    std::size_t skipped_ = 0;
    bool bound_hit_ = false;
};

}  // namespace yangcheck
