#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complements/rational.hpp"

namespace complements::dualgraph {

using IntMatrix = std::vector<std::vector<Integer>>;

/// An exceptional rational curve with self-intersection -weight.
struct Vertex {
    std::string id;
    long weight = 2;
};

/// Weighted dual graph of a configuration of smooth rational curves.
///
/// Connected and simple. The intersection matrix has -weight_i on the
/// diagonal and 1 for every edge.
class DualGraph {
public:
    DualGraph(std::vector<Vertex> vertices, std::vector<std::pair<std::string, std::string>> edges);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_[i]; }
    std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

    /// Index of the vertex with this id; DomainError when absent.
    std::size_t index_of(const std::string& id) const;

    IntMatrix intersection_matrix() const;

    bool is_chain() const;

    /// Connected components of the graph with the given vertices removed,
    /// ordered by their smallest original vertex index.
    std::vector<DualGraph> components_without(const std::vector<std::string>& removed) const;

private:
    DualGraph() = default;

    std::vector<Vertex> vertices_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Fraction-free (Bareiss) determinant.
Integer determinant(IntMatrix m);

/// Determinant of -M for a chain with the given weights, by the
/// continuant recurrence det_k = w_k det_{k-1} - det_{k-2}.
Integer chain_determinant(const std::vector<long>& weights);

/// Every leading principal minor of -M is positive.
bool is_negative_definite(const DualGraph& g);

/// The unique a with sum_i a_i (E_i . E_j) = -2 - E_j^2 for every j, i.e.
/// K_Y = f^*K_X + sum a_i E_i. DomainError when not negative definite.
std::vector<Rational> discrepancies(const DualGraph& g);

bool is_klt(const std::vector<Rational>& discrepancies);
bool is_lc(const std::vector<Rational>& discrepancies);

enum class DuValFamily { A, D, E };

struct DuValType {
    DuValFamily family;
    int rank;

    std::string name() const;
    bool exceptional() const { return family == DuValFamily::E; }
    friend bool operator==(const DuValType&, const DuValType&) = default;
};

/// ADE type read off the graph shape. DomainError ("not DuVal") unless all
/// discrepancies vanish.
DuValType duval_type(const DualGraph& g);

/// Indices m_i = det(-M_i) of the branches left after removing `center`,
/// sorted ascending. These give the different (1 - 1/m_i) on the central
/// curve when each branch is a chain.
std::vector<long> central_branch_collection(const DualGraph& g, const std::string& center);

/// Extracting `center` alone is a plt blow-up: each branch is a chain
/// attached to the center at one of its ends.
bool is_plt_center(const DualGraph& g, const std::string& center);

/// The branch vertex if there is one; for chains the lowest-id interior
/// vertex next to an end, or the lowest id when there is no interior vertex.
std::string canonical_center(const DualGraph& g);

struct DuValReport {
    DuValType type;
    std::string center;
    std::vector<long> collection;
    bool exceptional = false;
    /// Minimal complement index of the branch collection on P^1.
    long compl_index = 0;
};

/// Exceptionality of a DuVal point by both the shape (E_6, E_7, E_8) and
/// the branch collection on P^1; a disagreement is a logic_error.
DuValReport classify_exceptional_duval(const DualGraph& g,
                                       std::optional<std::string> center = std::nullopt);

/// All-weight-2 ADE graph; vertex ids "E1".."En".
DualGraph duval_graph(DuValFamily family, int rank);

/// Central fiber of a P^1-fibration over a curve, parameter b >= 2. The
/// (-1)-curve has id "B"; removing it leaves the contracted subgraphs.
DualGraph fibration_fiber_graph(long b);

}  // namespace complements::dualgraph
