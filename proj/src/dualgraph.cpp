#include "complements/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "complements/boundary.hpp"
#include "complements/curve.hpp"
#include "complements/errors.hpp"

namespace complements::dualgraph {

DualGraph::DualGraph(std::vector<Vertex> vertices,
                     std::vector<std::pair<std::string, std::string>> edges)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DomainError("dual graph has no vertices");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].weight < 1)
            throw DomainError("vertex '" + vertices_[i].id + "' has weight < 1");
        if (!index.emplace(vertices_[i].id, i).second)
            throw DomainError("duplicate vertex id '" + vertices_[i].id + "'");
    }
    adjacency_.assign(vertices_.size(), {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [s, t] : edges) {
        auto a = index.find(s), b = index.find(t);
        if (a == index.end() || b == index.end())
            throw DomainError("edge " + s + "-" + t + " names an unknown vertex");
        if (a->second == b->second) throw DomainError("loop at vertex '" + s + "'");
        auto key = std::minmax(a->second, b->second);
        if (!seen.insert(key).second) throw DomainError("repeated edge " + s + "-" + t);
        edges_.push_back(key);
        adjacency_[a->second].push_back(b->second);
        adjacency_[b->second].push_back(a->second);
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

    std::vector<bool> reached(vertices_.size(), false);
    std::vector<std::size_t> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adjacency_[v])
            if (!reached[w]) reached[w] = true, stack.push_back(w);
    }
    if (std::find(reached.begin(), reached.end(), false) != reached.end())
        throw DomainError("dual graph is not connected");
}

std::size_t DualGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return i;
    throw DomainError("no vertex with id '" + id + "'");
}

IntMatrix DualGraph::intersection_matrix() const {
    IntMatrix m(size(), std::vector<Integer>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i) m[i][i] = -vertices_[i].weight;
    for (const auto& [a, b] : edges_) m[a][b] = m[b][a] = 1;
    return m;
}

bool DualGraph::is_chain() const {
    if (edges_.size() + 1 != size()) return false;
    return std::all_of(adjacency_.begin(), adjacency_.end(),
                       [](const auto& adj) { return adj.size() <= 2; });
}

std::vector<DualGraph> DualGraph::components_without(const std::vector<std::string>& removed) const {
    std::vector<bool> gone(size(), false);
    for (const auto& id : removed) gone[index_of(id)] = true;
    std::vector<bool> reached(size(), false);
    std::vector<DualGraph> out;
    for (std::size_t start = 0; start < size(); ++start) {
        if (gone[start] || reached[start]) continue;
        std::vector<std::size_t> members, stack{start};
        reached[start] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (auto w : adjacency_[v])
                if (!gone[w] && !reached[w]) reached[w] = true, stack.push_back(w);
        }
        std::sort(members.begin(), members.end());
        std::vector<Vertex> vs;
        for (auto v : members) vs.push_back(vertices_[v]);
        std::vector<std::pair<std::string, std::string>> es;
        for (const auto& [a, b] : edges_)
            if (std::binary_search(members.begin(), members.end(), a) &&
                std::binary_search(members.begin(), members.end(), b))
                es.emplace_back(vertices_[a].id, vertices_[b].id);
        out.emplace_back(std::move(vs), std::move(es));
    }
    return out;
}

Integer determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer chain_determinant(const std::vector<long>& weights) {
    Integer before = 1, current = 1;
    bool first = true;
    for (long w : weights) {
        Integer next = first ? Integer(w) : Integer(w * current - before);
        before = current;
        current = next;
        first = false;
    }
    return current;
}

bool is_negative_definite(const DualGraph& g) {
    // Without pivoting, the k-th Bareiss pivot of -M is its k-th leading
    // principal minor.
    IntMatrix m = g.intersection_matrix();
    for (auto& row : m)
        for (auto& x : row) x = -x;
    const std::size_t n = m.size();
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return true;
}

std::vector<Rational> discrepancies(const DualGraph& g) {
    if (!is_negative_definite(g))
        throw DomainError("intersection matrix is not negative definite");
    const std::size_t n = g.size();
    const IntMatrix im = g.intersection_matrix();
    // Augmented system, symmetric matrix so rows and columns coincide.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(im[i][j]);
        a[i][n] = Rational(g.vertices()[i].weight - 2);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (a[pivot][k].sign() == 0) ++pivot;
        std::swap(a[k], a[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].sign() == 0) continue;
            Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j <= n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
    return out;
}

bool is_klt(const std::vector<Rational>& discrepancies) {
    return std::all_of(discrepancies.begin(), discrepancies.end(),
                       [](const Rational& a) { return a > Rational(-1); });
}

bool is_lc(const std::vector<Rational>& discrepancies) {
    return std::all_of(discrepancies.begin(), discrepancies.end(),
                       [](const Rational& a) { return a >= Rational(-1); });
}

std::string DuValType::name() const {
    const char* letter = family == DuValFamily::A ? "A" : family == DuValFamily::D ? "D" : "E";
    return letter + std::to_string(rank);
}

namespace {

/// Lengths of the legs hanging off a branch vertex, ascending.
std::vector<std::size_t> leg_lengths(const DualGraph& g, std::size_t center) {
    std::vector<std::size_t> legs;
    for (auto start : g.neighbors(center)) {
        std::size_t length = 1, prev = center, cur = start;
        while (g.degree(cur) == 2) {
            auto next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
            ++length;
        }
        if (g.degree(cur) != 1) return {};
        legs.push_back(length);
    }
    std::sort(legs.begin(), legs.end());
    return legs;
}

std::optional<std::size_t> branch_vertex(const DualGraph& g) {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.degree(i) < 3) continue;
        if (!found || g.vertices()[i].id < g.vertices()[*found].id) found = i;
    }
    return found;
}

}  // namespace

DuValType duval_type(const DualGraph& g) {
    auto a = discrepancies(g);
    if (!std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() == 0; }))
        throw DomainError("not DuVal: some discrepancy is nonzero");
    const int n = static_cast<int>(g.size());
    if (g.is_chain()) return {DuValFamily::A, n};
    auto center = branch_vertex(g);
    if (center && g.edges().size() + 1 == g.size() && g.degree(*center) == 3) {
        auto legs = leg_lengths(g, *center);
        if (legs.size() == 3) {
            if (legs[0] == 1 && legs[1] == 1) return {DuValFamily::D, n};
            if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4)
                return {DuValFamily::E, n};
        }
    }
    throw std::logic_error("negative definite weight-2 graph of non-ADE shape");
}

std::vector<long> central_branch_collection(const DualGraph& g, const std::string& center) {
    std::vector<long> out;
    for (const auto& branch : g.components_without({center})) {
        if (!is_negative_definite(branch))
            throw DomainError("branch at '" + branch.vertices().front().id +
                              "' is not negative definite");
        IntMatrix m = branch.intersection_matrix();
        for (auto& row : m)
            for (auto& x : row) x = -x;
        out.push_back(determinant(std::move(m)).get_si());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_plt_center(const DualGraph& g, const std::string& center) {
    const std::size_t c = g.index_of(center);
    for (const auto& branch : g.components_without({center})) {
        if (!branch.is_chain()) return false;
        for (std::size_t i = 0; i < branch.size(); ++i) {
            std::size_t original = g.index_of(branch.vertices()[i].id);
            const auto& adj = g.neighbors(c);
            if (std::find(adj.begin(), adj.end(), original) != adj.end() && branch.degree(i) > 1)
                return false;
        }
    }
    return true;
}

std::string canonical_center(const DualGraph& g) {
    if (auto b = branch_vertex(g)) return g.vertices()[*b].id;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g.degree(i) != 2) continue;
        bool next_to_end = std::any_of(g.neighbors(i).begin(), g.neighbors(i).end(),
                                       [&](std::size_t w) { return g.degree(w) == 1; });
        if (next_to_end && (!best || g.vertices()[i].id < g.vertices()[*best].id)) best = i;
    }
    if (!best) {
        best = 0;
        for (std::size_t i = 1; i < g.size(); ++i)
            if (g.vertices()[i].id < g.vertices()[*best].id) best = i;
    }
    return g.vertices()[*best].id;
}

DuValReport classify_exceptional_duval(const DualGraph& g, std::optional<std::string> center) {
    DuValReport report{duval_type(g), center.value_or(canonical_center(g)), {}, false, 0};
    if (!is_plt_center(g, report.center))
        throw DomainError("'" + report.center + "' is not a plt blow-up center");
    report.collection = central_branch_collection(g, report.center);
    const Boundary on_center = Boundary::from_standard_indices(report.collection);
    report.exceptional = curve::is_exceptional(on_center);
    if (report.exceptional != report.type.exceptional())
        throw std::logic_error("shape and branch collection disagree on exceptionality for " +
                               report.type.name());
    report.compl_index = curve::minimal_complement(on_center).n;
    return report;
}

DualGraph duval_graph(DuValFamily family, int rank) {
    auto id = [](int k) { return "E" + std::to_string(k); };
    std::vector<Vertex> vs;
    std::vector<std::pair<std::string, std::string>> es;
    auto chain = [&](int from, int to) {
        for (int k = from; k < to; ++k) es.emplace_back(id(k), id(k + 1));
    };
    switch (family) {
    case DuValFamily::A:
        if (rank < 1) throw DomainError("A_n needs n >= 1");
        chain(1, rank);
        break;
    case DuValFamily::D:
        // E1, E2 are the short legs at E3; E3..En is the long arm.
        if (rank < 4) throw DomainError("D_n needs n >= 4");
        es.emplace_back(id(1), id(3));
        es.emplace_back(id(2), id(3));
        chain(3, rank);
        break;
    case DuValFamily::E:
        // E1 is the short leg at E4; E2-E3-E4-E5-... is the main chain.
        if (rank < 6 || rank > 8) throw DomainError("E_n needs 6 <= n <= 8");
        es.emplace_back(id(1), id(4));
        chain(2, rank);
        break;
    }
    for (int k = 1; k <= rank; ++k) vs.push_back({id(k), 2});
    return DualGraph(std::move(vs), std::move(es));
}

DualGraph fibration_fiber_graph(long b) {
    if (b < 2) throw DomainError("fibration example needs b >= 2");
    std::vector<Vertex> vs{{"L1", 2}, {"L2", 2}, {"C", b}, {"R", 2}, {"B", 1}, {"T", 3}};
    std::vector<std::pair<std::string, std::string>> es{
        {"L1", "L2"}, {"L2", "C"}, {"C", "R"}, {"R", "B"}, {"C", "T"}};
    std::string prev = "B";
    for (long k = 1; k <= b - 2; ++k) {
        std::string id = "Q" + std::to_string(k);
        vs.push_back({id, k == 1 ? 3 : 2});
        es.emplace_back(prev, id);
        prev = id;
    }
    return DualGraph(std::move(vs), std::move(es));
}

}  // namespace complements::dualgraph
