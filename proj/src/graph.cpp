#include "paleylab/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>
#include <sstream>

#include "paleylab/errors.hpp"

namespace paleylab {

u32 Bitset::count() const {
    u32 c = 0;
    for (u64 w : w_) c += static_cast<u32>(std::popcount(w));
    return c;
}

bool Bitset::empty() const {
    for (u64 w : w_)
        if (w) return false;
    return true;
}

void Bitset::and_with(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
}

bool Bitset::intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

u32 Bitset::next(u32 i) const {
    if (i >= n_) return n_;
    std::size_t wi = i >> 6;
    u64 w = w_[wi] & (~u64(0) << (i & 63));
    while (true) {
        if (w) {
            u32 r = static_cast<u32>((wi << 6) + std::countr_zero(w));
            return r < n_ ? r : n_;
        }
        if (++wi >= w_.size()) return n_;
        w = w_[wi];
    }
}

std::vector<u32> Bitset::to_vector() const {
    std::vector<u32> v;
    for (u32 i = next(0); i < n_; i = next(i + 1)) v.push_back(i);
    return v;
}

bool is_dth_power(const FiniteField& F, Elem x, u32 d) {
    if (x == 0) raise(Errc::zero_element, "d-th power test on zero");
    if (d == 0 || (F.q() - 1) % d != 0) raise(Errc::order_not_dividing, "d must divide q-1");
    const bool by_log = F.dlog(x) % d == 0;
    const bool by_power = F.pow(x, (F.q() - 1) / d) == 1;
    if (by_log != by_power) raise(Errc::internal, "power-residue criteria disagree");
    return by_log;
}

namespace {

CayleyGraph build_from_connection(const FiniteField& F, GraphKind kind, u32 d,
                                  std::vector<Elem> connection) {
    if (F.q() > CayleyGraph::kBuildCap)
        raise(Errc::size_cap_exceeded, "graph order exceeds build cap");
    CayleyGraph g;
    g.field_ = F;
    g.kind_ = kind;
    g.d_ = d;
    g.connection_ = std::move(connection);
    g.degree_ = g.connection_.size();

    const u32 q = static_cast<u32>(F.q());
    Bitset conn(q);
    for (Elem c : g.connection_) {
        if (c == 0) raise(Errc::internal, "connection set contains zero");
        conn.set(c);
    }
    for (Elem c : g.connection_)
        if (!conn.test(F.neg(c))) raise(Errc::internal, "connection set is not symmetric");

    g.adj_.assign(q, Bitset(q));
    for (Elem u = 0; u < q; ++u)
        for (Elem c : g.connection_) g.adj_[u].set(F.add(u, c));
    for (Elem u = 0; u < q; ++u)
        if (g.adj_[u].test(u)) raise(Errc::internal, "self loop in Cayley graph");
    return g;
}

} // namespace

CayleyGraph build_gp(const FiniteField& F, u32 d) {
    if (d < 2) raise(Errc::congruence_violation, "d must exceed 1");
    if ((F.q() - 1) % (2 * u64(d)) != 0)
        raise(Errc::congruence_violation,
              "q = " + std::to_string(F.q()) + " is not 1 mod " + std::to_string(2 * d));
    std::vector<Elem> connection;
    for (Elem x = 1; x < F.q(); ++x)
        if (is_dth_power(F, x, d)) connection.push_back(x);
    // q = 1 mod 2d makes -1 a d-th power, which is what makes the graph
    // undirected; fail loudly if that ever breaks.
    if (!is_dth_power(F, F.neg(1), d)) raise(Errc::internal, "-1 is not a d-th power");
    return build_from_connection(F, GraphKind::gp, d, std::move(connection));
}

CayleyGraph build_peisert(const FiniteField& F) {
    if (F.p() % 4 != 3 || F.s() % 2 != 0)
        raise(Errc::not_peisert_field, "peisert graph needs p = 3 mod 4 and even degree");
    const u64 q = F.q();
    std::vector<Elem> connection;
    std::vector<Elem> cosets[4];
    for (Elem x = 1; x < q; ++x) {
        const u32 r = static_cast<u32>(F.dlog(x) % 4);
        cosets[r].push_back(x);
        if (r == 0 || r == 1) connection.push_back(x);
    }
    for (int r = 0; r < 4; ++r)
        if (cosets[r].size() != (q - 1) / 4) raise(Errc::internal, "peisert coset has wrong size");

    CayleyGraph g = build_from_connection(F, GraphKind::peisert, 4, std::move(connection));
    for (int r = 0; r < 4; ++r) g.cosets_[r] = std::move(cosets[r]);
    const u32 s_half = F.s() / 2;
    g.b_selection_ = (F.p() % 8 == 7 && s_half % 2 == 1) ? PeisertBSelection::b1_b2
                                                         : PeisertBSelection::b0_b3;
    return g;
}

std::vector<Elem> CayleyGraph::selected_b() const {
    if (kind_ != GraphKind::peisert) raise(Errc::case_not_applicable, "B sets exist only for peisert graphs");
    const auto& x = b_selection_ == PeisertBSelection::b0_b3 ? cosets_[0] : cosets_[1];
    const auto& y = b_selection_ == PeisertBSelection::b0_b3 ? cosets_[3] : cosets_[2];
    std::vector<Elem> b;
    b.reserve(x.size() + y.size());
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(b));
    return b;
}

bool subfield_clique_test(const FiniteField& F, u32 d) {
    const u64 q = F.q();
    if (!is_square(q)) raise(Errc::not_square, "subfield clique test needs a square q");
    if (d < 2 || (q - 1) % (2 * u64(d)) != 0) raise(Errc::congruence_violation, "q must be 1 mod 2d");
    const u64 root = isqrt(q);
    const bool by_divisibility = (root + 1) % d == 0;

    bool by_scan = true;
    const auto sub = F.subfield_elements(F.s() / 2);
    for (std::size_t i = 0; i < sub.size() && by_scan; ++i)
        for (std::size_t k = 0; k < sub.size(); ++k) {
            if (i == k) continue;
            if (!is_dth_power(F, F.sub(sub[i], sub[k]), d)) {
                by_scan = false;
                break;
            }
        }
    if (by_scan != by_divisibility) raise(Errc::internal, "subfield clique criteria disagree");
    return by_divisibility;
}

std::string CayleyGraph::manifest_json() const {
    std::ostringstream os;
    os << "{\"field\":\"" << field_.descriptor() << "\",\"kind\":\""
       << (kind_ == GraphKind::gp ? "gp" : "peisert") << "\",\"d\":" << d_
       << ",\"generator\":" << field_.generator();
    if (kind_ == GraphKind::peisert)
        os << ",\"b_selection\":\"" << (b_selection_ == PeisertBSelection::b0_b3 ? "B0uB3" : "B1uB2") << "\"";
    os << "}";
    return os.str();
}

std::string CayleyGraph::dimacs() const {
    std::ostringstream os;
    os << "p edge " << order() << ' ' << edge_count() << '\n';
    const u32 q = static_cast<u32>(order());
    for (Elem u = 0; u < q; ++u)
        for (u32 v = adj_[u].next(u + 1); v < q; v = adj_[u].next(v + 1))
            os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

std::string CayleyGraph::edge_list_json() const {
    std::ostringstream os;
    os << "{\"manifest\":" << manifest_json() << ",\"n\":" << order() << ",\"edges\":[";
    const u32 q = static_cast<u32>(order());
    bool first = true;
    for (Elem u = 0; u < q; ++u)
        for (u32 v = adj_[u].next(u + 1); v < q; v = adj_[u].next(v + 1)) {
            if (!first) os << ',';
            first = false;
            os << '[' << u << ',' << v << ']';
        }
    os << "]}";
    return os.str();
}

void export_graph(const CayleyGraph& g, ExportFormat fmt, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::io_failure, "cannot open " + path);
    out << (fmt == ExportFormat::dimacs ? g.dimacs() : g.edge_list_json());
    if (!out) raise(Errc::io_failure, "write failed for " + path);
}

} // namespace paleylab
