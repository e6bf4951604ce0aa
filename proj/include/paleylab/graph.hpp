#ifndef PALEYLAB_GRAPH_HPP
#define PALEYLAB_GRAPH_HPP

#include <string>
#include <vector>

#include "paleylab/field.hpp"

namespace paleylab {

// Fixed-size bitset sized at runtime; the clique solver lives on word-wide
// neighborhood intersections.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(u32 nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    void set(u32 i) { w_[i >> 6] |= u64(1) << (i & 63); }
    void clear(u32 i) { w_[i >> 6] &= ~(u64(1) << (i & 63)); }
    bool test(u32 i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    u32 size() const { return n_; }

    u32 count() const;
    bool empty() const;
    void and_with(const Bitset& o);
    bool intersects(const Bitset& o) const;

    // Lowest set bit at or after i, or size() when none.
    u32 next(u32 i) const;

    std::vector<u32> to_vector() const;

    const std::vector<u64>& words() const { return w_; }
    std::vector<u64>& words() { return w_; }

  private:
    u32 n_ = 0;
    std::vector<u64> w_;
};

enum class GraphKind { gp, peisert };

// Which pair of generator-power cosets the Fourier vanishing condition
// quantifies over for a Peisert field (exponents mod 4).
enum class PeisertBSelection { b0_b3, b1_b2 };

// Cayley graph on the additive group of F_q. For kind gp the connection set
// is the set of d-th powers in F_q* (requires q = 1 mod 2d); for kind
// peisert it is M_q = {g^j : j = 0,1 mod 4} (requires p = 3 mod 4 and even
// degree). Vertices are canonical element indices; immutable after build.
class CayleyGraph {
  public:
    static constexpr u64 kBuildCap = 8192;

    const FiniteField& field() const { return field_; }
    GraphKind kind() const { return kind_; }
    u32 d() const { return d_; } // 4 for peisert
    u64 order() const { return field_.q(); }
    u64 degree() const { return degree_; }
    u64 edge_count() const { return field_.q() * degree_ / 2; }

    bool adjacent(Elem u, Elem v) const { return adj_[u].test(v); }
    const Bitset& neighbors(Elem u) const { return adj_[u]; }
    const std::vector<Elem>& connection_set() const { return connection_; }

    // Peisert-only: the four coset lists B_0..B_3 (ascending canonical
    // index) and the selected test set B.
    const std::vector<Elem>& coset(u32 jmod4) const { return cosets_[jmod4]; }
    PeisertBSelection b_selection() const { return b_selection_; }
    std::vector<Elem> selected_b() const;

    // The translation group acts transitively on vertices of any Cayley
    // graph; for gp the d-th powers also act transitively on edges.
    bool vertex_transitive() const { return true; }
    bool edge_transitive() const { return kind_ == GraphKind::gp; }

    std::string manifest_json() const;
    std::string dimacs() const;
    std::string edge_list_json() const;

    friend CayleyGraph build_gp(const FiniteField& F, u32 d);
    friend CayleyGraph build_peisert(const FiniteField& F);

  private:
    CayleyGraph() = default;

    FiniteField field_;
    GraphKind kind_ = GraphKind::gp;
    u32 d_ = 0;
    u64 degree_ = 0;
    std::vector<Elem> connection_;
    std::vector<Bitset> adj_;
    std::vector<Elem> cosets_[4];
    PeisertBSelection b_selection_ = PeisertBSelection::b0_b3;
};

// x a nonzero d-th power in F_q*? Decided by the log test (log(x) = 0 mod d)
// and cross-checked against the Euler-type power test x^((q-1)/d) = 1; the
// two must agree.
bool is_dth_power(const FiniteField& F, Elem x, u32 d);

CayleyGraph build_gp(const FiniteField& F, u32 d);
CayleyGraph build_peisert(const FiniteField& F);

// (sqrt(q)+1) = 0 mod d, i.e. whether the middle subfield is a clique in
// GP(q,d); verified against the direct difference scan.
bool subfield_clique_test(const FiniteField& F, u32 d);

enum class ExportFormat { dimacs, edge_list_json };
void export_graph(const CayleyGraph& g, ExportFormat fmt, const std::string& path);

} // namespace paleylab

#endif
