#include "yangcheck/rewriting.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace yangcheck {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Zero: return "zero";
        case Verdict::NonZero: return "nonzero";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool RewriteSystem::TaskLess::operator()(const Task& x, const Task& y) const {
    if (x.super != y.super) return word_less(*a, x.super, y.super);
    if (x.left != y.left) return x.left < y.left;
    if (x.right != y.right) return x.right < y.right;
    return x.pos < y.pos;
}

RewriteSystem::RewriteSystem(const Alphabet& a, DegreeBound bound)
    : alpha_(&a), bound_(bound), by_first_(a.size()), queue_(TaskLess{&a}) {}

bool RewriteSystem::exceeds_bound(const Word& w) const {
    return w.size() > bound_.max_word_len || word_level(*alpha_, w) > bound_.max_total_level;
}

bool RewriteSystem::find_match(const Word& w, std::size_t& pos, std::size_t& rule) const {
    for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t id : by_first_[w[p]]) {
            const Word& lhs = rules_[id].lhs;
            if (lhs.size() > w.size() - p) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + p)) {
                pos = p;
                rule = id;
                return true;
            }
        }
    }
    return false;
}

Element RewriteSystem::normalize(const Element& e, std::vector<ReductionStep>* trace) const {
    std::map<Word, Scalar> todo(e.terms());
    Element done;
    while (!todo.empty()) {
        auto node = todo.extract(std::prev(todo.end()));
        const Word& w = node.key();
        const Scalar& c = node.mapped();
        if (c.is_zero()) continue;
        std::size_t pos = 0, rule = 0;
        if (!find_match(w, pos, rule)) {
            done.add_term(w, c);
            continue;
        }
        if (trace) trace->push_back({w, pos, rule});
        const RewriteRule& r = rules_[rule];
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + r.lhs.size(), w.end());
        for (const auto& [rw, rc] : r.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            auto [it, fresh] = todo.emplace(nw, c * rc);
            if (!fresh) {
                it->second += c * rc;
                if (it->second.is_zero()) todo.erase(it);
            }
        }
    }
    return done;
}

void RewriteSystem::add_rule(Word lhs, Element rhs) {
    for (const auto& [w, c] : rhs.terms())
        if (!word_less(*alpha_, w, lhs))
            throw std::logic_error("add_rule: rhs word not below lhs");
    std::size_t id = rules_.size();
    by_first_[lhs.front()].push_back(id);
    rules_.push_back({std::move(lhs), std::move(rhs)});
    enqueue_overlaps(id);
}

void RewriteSystem::add_relation(const Element& e) {
    Element r = normalize(e);
    if (r.is_zero()) return;
    Word lead = r.leading_word(*alpha_);
    if (lead.empty()) throw std::logic_error("add_relation: unit is in the ideal");
    Scalar c = r.coeff(lead);
    Element rhs = r.scaled(Scalar(-1) / c);
    rhs.add_term(lead, Scalar(1));  // cancels the leading term, leaving -rest/c
    add_rule(std::move(lead), std::move(rhs));
}

void RewriteSystem::enqueue(Task t) {
    if (exceeds_bound(t.super)) {
        bound_hit_ = true;
        ++skipped_;
        return;
    }
    queue_.insert(std::move(t));
}

void RewriteSystem::enqueue_overlaps(std::size_t id) {
    const Word& u = rules_[id].lhs;
    for (std::size_t other = 0; other < rules_.size(); ++other) {
        const Word& v = rules_[other].lhs;
        // proper suffix of u meeting a proper prefix of v
        for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
            if (std::equal(u.end() - k, u.end(), v.begin())) {
                Word super = u;
                super.insert(super.end(), v.begin() + k, v.end());
                enqueue({std::move(super), id, other, u.size() - k});
            }
            if (other != id && std::equal(v.end() - k, v.end(), u.begin())) {
                Word super = v;
                super.insert(super.end(), u.begin() + k, u.end());
                enqueue({std::move(super), other, id, v.size() - k});
            }
        }
        // an older lhs containing the new one (never the other way round,
        // since a new lhs is irreducible by construction)
        if (other != id && v.size() > u.size()) {
            for (std::size_t p = 0; p + u.size() <= v.size(); ++p)
                if (std::equal(u.begin(), u.end(), v.begin() + p))
                    enqueue({v, other, id, p});
        }
    }
}

CompletionStats RewriteSystem::complete(std::chrono::milliseconds budget) {
    CompletionStats st;
    bool has_deadline = budget != std::chrono::milliseconds::max();
    auto deadline = std::chrono::steady_clock::now() + (has_deadline ? budget : std::chrono::milliseconds(0));
    while (!queue_.empty()) {
        if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
            st.timed_out = true;
            break;
        }
        Task t = *queue_.begin();
        queue_.erase(queue_.begin());
        ++st.pairs_processed;
        const RewriteRule& rl = rules_[t.left];
        const RewriteRule& rr = rules_[t.right];
        // super = prefix . lhs(right) . suffix, with lhs(left) a prefix of super
        Word prefix(t.super.begin(), t.super.begin() + t.pos);
        Word suffix(t.super.begin() + t.pos + rr.lhs.size(), t.super.end());
        Word tail(t.super.begin() + rl.lhs.size(), t.super.end());
        Element s = rl.rhs * Element::from_word(tail) -
                    Element::from_word(prefix) * rr.rhs * Element::from_word(suffix);
        Element n = normalize(s);
        if (n.is_zero()) continue;
        Word lead = n.leading_word(*alpha_);
        if (lead.empty()) throw std::logic_error("complete: unit is in the ideal");
        Scalar c = n.coeff(lead);
        Element rhs = n.scaled(Scalar(-1) / c);
        rhs.add_term(lead, Scalar(1));
        add_rule(std::move(lead), std::move(rhs));
        ++st.rules_added;
    }
    st.pairs_skipped = skipped_;
    st.bound_hit = bound_hit_;
    st.reached_fixpoint = queue_.empty() && !bound_hit_;
    return st;
}

Verdict RewriteSystem::test_zero(const Element& e) const {
    if (normalize(e).is_zero()) return Verdict::Zero;
    return fixpoint_certified() ? Verdict::NonZero : Verdict::Inconclusive;
}

std::string RewriteSystem::dump_rules() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rules_.size(); ++i)
        os << i << ": " << word_to_string(*alpha_, rules_[i].lhs) << " -> "
           << rules_[i].rhs.to_string(*alpha_) << "\n";
    return os.str();
}

}  // namespace yangcheck
