#pragma once

#include <string>
#include <vector>

#include "yangcheck/weight.hpp"

namespace yangcheck {

enum class NodeKind { White, Grey, Black };
enum class VertexType { None, TypeI, TypeIIa, TypeIIb };

std::string to_string(NodeKind k);
std::string to_string(VertexType t);

// A Borel subalgebra choice: an ordering (shuffle) of the m epsilon and
// n delta basis symbols, each family appearing with increasing indices.
struct BorelChoice {
    int m = 0, n = 0;
    struct Entry {
        enum Tag { Eps, Del } tag;
        int index;  // 1-based within its family
    };
    std::vector<Entry> shuffle;

    std::string tag_string() const;  // e.g. "dde"
    static BorelChoice from_tag_string(const std::string& tags, int m, int n);
};

// All Borel choices for B(m, n), ordered lexicographically by tag string.
// Requires n >= 1 (the symplectic rank is positive for this family).
std::vector<BorelChoice> enumerate_borels(int m, int n);

struct SimpleRootSystem {
    int m = 0, n = 0;
    BorelChoice borel;
    std::vector<Weight> roots;       // alpha_1 .. alpha_{m+n}
    std::vector<int> parity;         // 0 or 1 per node
    std::vector<NodeKind> kind;      // per node
    int rank() const { return m + n; }
};

SimpleRootSystem simple_root_system(const BorelChoice& b);

// Symmetric integer Cartan matrix c_ij = (alpha_i, alpha_j).
struct CartanMatrix {
    std::vector<std::vector<long long>> entries;
    int rank() const { return static_cast<int>(entries.size()); }
    long long at(int i, int j) const { return entries.at(i - 1).at(j - 1); }  // 1-based
};

CartanMatrix cartan_matrix(const SimpleRootSystem& s);

struct PositiveRoot {
    Weight weight;
    int parity;
    std::vector<long long> coeffs;  // over simple roots
    long long height;               // sum of coeffs, >= 1
};

struct RootSystem {
    SimpleRootSystem simple;
    std::vector<PositiveRoot> positive;  // sorted by (height, coeffs)
    int index_of(const Weight& w) const;  // -1 if absent
};

RootSystem positive_roots(const SimpleRootSystem& s);

// Local classification of a candidate middle vertex j (1-based):
// at j = m+n-1 the terminal window wins (IIa for a White short root,
// IIb for a Black one); interior Grey vertices are TypeI; anything else None.
VertexType classify_vertex(const SimpleRootSystem& s, int j);

// One-line diagram: O (White), X (Grey), # (Black), joined by em-dashes.
std::string render_dynkin(const SimpleRootSystem& s);

}  // namespace yangcheck
