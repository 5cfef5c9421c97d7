#pragma once

#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace yangcheck {

// Integer linear combination of the epsilon/delta basis functionals on the
// Cartan subalgebra. All weights in one context share the same (m, n).
struct Weight {
    std::vector<long long> eps, del;

    static Weight zero(int m, int n) { return {std::vector<long long>(m, 0), std::vector<long long>(n, 0)}; }
    static Weight unit_eps(int m, int n, int i) {  // 1-based
        Weight w = zero(m, n);
        w.eps.at(i - 1) = 1;
        return w;
    }
    static Weight unit_del(int m, int n, int j) {
        Weight w = zero(m, n);
        w.del.at(j - 1) = 1;
        return w;
    }

    bool is_zero() const {
        for (long long c : eps)
            if (c) return false;
        for (long long c : del)
            if (c) return false;
        return true;
    }

    bool operator==(const Weight& o) const { return eps == o.eps && del == o.del; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const {
        if (eps != o.eps) return eps < o.eps;
        return del < o.del;
    }

    Weight operator+(const Weight& o) const {
        check_dims(o);
        Weight r = *this;
        for (size_t i = 0; i < eps.size(); ++i) r.eps[i] += o.eps[i];
        for (size_t i = 0; i < del.size(); ++i) r.del[i] += o.del[i];
        return r;
    }
    Weight operator-(const Weight& o) const {
        check_dims(o);
        Weight r = *this;
        for (size_t i = 0; i < eps.size(); ++i) r.eps[i] -= o.eps[i];
        for (size_t i = 0; i < del.size(); ++i) r.del[i] -= o.del[i];
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& c : r.eps) c = -c;
        for (auto& c : r.del) c = -c;
        return r;
    }
    Weight scaled(long long k) const {
        Weight r = *this;
        for (auto& c : r.eps) c *= k;
        for (auto& c : r.del) c *= k;
        return r;
    }

    // Parity of a root: odd iff the total delta content is odd.
    int parity() const {
        long long s = 0;
        for (long long c : del) s += std::llabs(c);
        return static_cast<int>(s & 1);
    }

    // Compact text form, delta terms first: "d1-e1", "2d1", "e1+d2".
    std::string render() const {
        std::ostringstream out;
        bool first = true;
        auto emit = [&](long long c, char sym, size_t idx) {
            if (c == 0) return;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? "-" : "+");
            }
            long long a = std::llabs(c);
            if (a != 1) out << a;
            out << sym << (idx + 1);
            first = false;
        };
        for (size_t j = 0; j < del.size(); ++j) emit(del[j], 'd', j);
        for (size_t i = 0; i < eps.size(); ++i) emit(eps[i], 'e', i);
        if (first) out << "0";
        return out.str();
    }

    void check_dims(const Weight& o) const {
        if (eps.size() != o.eps.size() || del.size() != o.del.size())
            throw std::invalid_argument("Weight: dimension mismatch");
    }
};

// Standard supersymmetric form: (eps_i, eps_j) = delta_ij, (del_i, del_j) = -delta_ij,
// mixed pairs orthogonal.
inline long long bilinear_form(const Weight& a, const Weight& b) {
    a.check_dims(b);
    long long s = 0;
    for (size_t i = 0; i < a.eps.size(); ++i) s += a.eps[i] * b.eps[i];
    for (size_t j = 0; j < a.del.size(); ++j) s -= a.del[j] * b.del[j];
    return s;
}

}  // namespace yangcheck
