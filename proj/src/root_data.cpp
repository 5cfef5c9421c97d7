#include "yangcheck/root_data.hpp"

#include <algorithm>
#include <stdexcept>

#include "yangcheck/ratmat.hpp"

namespace yangcheck {

std::string to_string(NodeKind k) {
    switch (k) {
        case NodeKind::White: return "White";
        case NodeKind::Grey: return "Grey";
        case NodeKind::Black: return "Black";
    }
    return "?";
}

std::string to_string(VertexType t) {
    switch (t) {
        case VertexType::None: return "None";
        case VertexType::TypeI: return "TypeI";
        case VertexType::TypeIIa: return "TypeIIa";
        case VertexType::TypeIIb: return "TypeIIb";
    }
    return "?";
}

std::string BorelChoice::tag_string() const {
    std::string s;
    for (const auto& e : shuffle) s += (e.tag == Entry::Eps ? 'e' : 'd');
    return s;
}

BorelChoice BorelChoice::from_tag_string(const std::string& tags, int m, int n) {
    if (static_cast<int>(tags.size()) != m + n)
        throw std::invalid_argument("BorelChoice: tag string length must be m+n");
    BorelChoice b;
    b.m = m;
    b.n = n;
    int ne = 0, nd = 0;
    for (char c : tags) {
        if (c == 'e')
            b.shuffle.push_back({Entry::Eps, ++ne});
        else if (c == 'd')
            b.shuffle.push_back({Entry::Del, ++nd});
        else
            throw std::invalid_argument("BorelChoice: tags must be 'e' or 'd'");
    }
    if (ne != m || nd != n) throw std::invalid_argument("BorelChoice: tag multiset must be e^m d^n");
    return b;
}

std::vector<BorelChoice> enumerate_borels(int m, int n) {
    if (m < 0 || n < 1) throw std::invalid_argument("enumerate_borels: need m >= 0 and n >= 1");
    std::string tags = std::string(n, 'd') + std::string(m, 'e');
    std::sort(tags.begin(), tags.end());
    std::vector<BorelChoice> out;
    do {
        out.push_back(BorelChoice::from_tag_string(tags, m, n));
    } while (std::next_permutation(tags.begin(), tags.end()));
    return out;
}

static Weight basis_weight(const BorelChoice& b, int pos) {  // 0-based shuffle position
    const auto& e = b.shuffle.at(pos);
    return e.tag == BorelChoice::Entry::Eps ? Weight::unit_eps(b.m, b.n, e.index)
                                            : Weight::unit_del(b.m, b.n, e.index);
}

SimpleRootSystem simple_root_system(const BorelChoice& b) {
    SimpleRootSystem s;
    s.m = b.m;
    s.n = b.n;
    s.borel = b;
    int rank = b.m + b.n;
    for (int i = 0; i < rank; ++i) {
        Weight alpha = (i + 1 < rank) ? basis_weight(b, i) - basis_weight(b, i + 1) : basis_weight(b, i);
        int par;
        if (i + 1 < rank)
            par = (b.shuffle[i].tag != b.shuffle[i + 1].tag) ? 1 : 0;
        else
            par = (b.shuffle[i].tag == BorelChoice::Entry::Del) ? 1 : 0;
        if (par != alpha.parity()) throw std::logic_error("simple_root_system: parity bookkeeping broke");
        NodeKind kind;
        if (par == 0)
            kind = NodeKind::White;
        else
            kind = (bilinear_form(alpha, alpha) == 0) ? NodeKind::Grey : NodeKind::Black;
        s.roots.push_back(alpha);
        s.parity.push_back(par);
        s.kind.push_back(kind);
    }
    return s;
}

CartanMatrix cartan_matrix(const SimpleRootSystem& s) {
    int r = s.rank();
    CartanMatrix c;
    c.entries.assign(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c.entries[i][j] = bilinear_form(s.roots[i], s.roots[j]);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (c.entries[i][j] != c.entries[j][i]) throw std::logic_error("cartan_matrix: asymmetry");
    return c;
}

int RootSystem::index_of(const Weight& w) const {
    for (size_t i = 0; i < positive.size(); ++i)
        if (positive[i].weight == w) return static_cast<int>(i);
    return -1;
}

RootSystem positive_roots(const SimpleRootSystem& s) {
    int m = s.m, n = s.n, rank = s.rank();
    std::vector<Weight> candidates;
    auto eps = [&](int i) { return Weight::unit_eps(m, n, i); };
    auto del = [&](int j) { return Weight::unit_del(m, n, j); };
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            candidates.push_back(eps(i) - eps(j));
            candidates.push_back(eps(i) + eps(j));
        }
    for (int i = 1; i <= m; ++i) candidates.push_back(eps(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            candidates.push_back(del(i) - del(j));
            candidates.push_back(del(i) + del(j));
        }
    for (int j = 1; j <= n; ++j) candidates.push_back(del(j).scaled(2));
    for (int j = 1; j <= n; ++j) candidates.push_back(del(j));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            candidates.push_back(eps(i) - del(j));
            candidates.push_back(eps(i) + del(j));
        }

    // Coordinate matrix of the simple roots (columns) in the eps/del basis.
    RatMat mat(rank, rank);
    for (int col = 0; col < rank; ++col) {
        const Weight& a = s.roots[col];
        for (int i = 0; i < m; ++i) mat.at(i, col) = Rational(static_cast<long>(a.eps[i]));
        for (int j = 0; j < n; ++j) mat.at(m + j, col) = Rational(static_cast<long>(a.del[j]));
    }

    RootSystem rs;
    rs.simple = s;
    for (const Weight& cand : candidates) {
        for (int sign = 0; sign < 2; ++sign) {
            Weight w = sign ? -cand : cand;
            std::vector<Rational> rhs(rank);
            for (int i = 0; i < m; ++i) rhs[i] = Rational(static_cast<long>(w.eps[i]));
            for (int j = 0; j < n; ++j) rhs[m + j] = Rational(static_cast<long>(w.del[j]));
            auto x = mat.solve(rhs);
            if (!x) throw std::logic_error("positive_roots: simple roots do not span");
            bool nonneg = true, nonpos = true;
            std::vector<long long> coeffs(rank);
            for (int k = 0; k < rank; ++k) {
                const Rational& c = (*x)[k];
                if (c.get_den() != 1) throw std::logic_error("positive_roots: non-integer coefficient");
                coeffs[k] = static_cast<long long>(c.get_num().get_si());
                if (coeffs[k] > 0) nonpos = false;
                if (coeffs[k] < 0) nonneg = false;
            }
            if (!nonneg && !nonpos) throw std::logic_error("positive_roots: mixed-sign decomposition");
            if (!nonneg) continue;  // the negative of this candidate is positive
            long long height = 0;
            for (long long c : coeffs) height += c;
            int par = w.parity();
            long long par2 = 0;
            for (int k = 0; k < rank; ++k) par2 += coeffs[k] * s.parity[k];
            if (par != (par2 & 1)) throw std::logic_error("positive_roots: parity mismatch");
            rs.positive.push_back({w, par, coeffs, height});
        }
    }
    // Height-ascending; ties broken so the simple roots land in index order.
    std::sort(rs.positive.begin(), rs.positive.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeffs > b.coeffs;
    });
    for (const auto& p : rs.positive)
        if (p.height < 1) throw std::logic_error("positive_roots: nonpositive height");
    return rs;
}

VertexType classify_vertex(const SimpleRootSystem& s, int j) {
    int rank = s.rank();
    if (j < 1 || j > rank) throw std::invalid_argument("classify_vertex: index out of range");
    if (j == rank) return VertexType::None;
    if (s.kind[j - 1] != NodeKind::Grey) return VertexType::None;
    if (j == rank - 1)
        return s.kind[rank - 1] == NodeKind::White ? VertexType::TypeIIa : VertexType::TypeIIb;
    if (j > 1) return VertexType::TypeI;
    return VertexType::None;
}

std::string render_dynkin(const SimpleRootSystem& s) {
    std::string out;
    for (int i = 0; i < s.rank(); ++i) {
        if (i) out += "—";
        switch (s.kind[i]) {
            case NodeKind::White: out += "O"; break;
            case NodeKind::Grey: out += "X"; break;
            case NodeKind::Black: out += "#"; break;
        }
    }
    return out;
}

}  // namespace yangcheck
