/*
 * graph.hpp
 *
 * Undirected labeled multigraph. Vertices are dense local indices; each one
 * carries a CharacterId from a NameTable that may be shared by every graph
 * of a corpus, so slices of the same corpus agree on character identity.
 */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace castnet {

using CharacterId = std::uint32_t;
using Vertex = std::uint32_t;
using Count = std::uint64_t;
using CommunityId = std::uint32_t;

/// Trims surrounding whitespace and collapses internal whitespace runs to a
/// single space. Case is preserved.
std::string normalize_name(std::string_view raw);

/// Interning table: character name <-> dense CharacterId.
class NameTable {
public:
    CharacterId intern(std::string_view name);
    std::optional<CharacterId> find(std::string_view name) const;
    const std::string& name(CharacterId id) const { return names_.at(id); }
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, CharacterId> ids_;
};

class MultiGraph {
public:
    using Adjacency = std::map<Vertex, Count>;

    /// Graph with a private name table.
    MultiGraph();
    explicit MultiGraph(std::shared_ptr<NameTable> names);

    /// Records one interaction between two named characters. Names are
    /// normalized first; a == b throws DataError.
    void add_interaction(std::string_view a, std::string_view b);

    /// Returns the vertex for a name, creating it on first sight.
    Vertex add_vertex(std::string_view name);
    void add_edge(Vertex u, Vertex v, Count multiplicity = 1);

    std::size_t order() const noexcept { return characters_.size(); }
    Count edge_total() const noexcept { return edge_total_; }
    bool empty() const noexcept { return characters_.empty(); }

    std::optional<Vertex> find(std::string_view name) const;
    /// Throws DataError for unknown names.
    Vertex vertex(std::string_view name) const;
    CharacterId character(Vertex v) const { return characters_.at(v); }
    const std::string& label(Vertex v) const { return names_->name(characters_.at(v)); }

    /// Sum of multiplicities over incident edges.
    Count degree(Vertex v) const;
    Count degree(std::string_view name) const { return degree(vertex(name)); }

    Count multiplicity(Vertex u, Vertex v) const;
    /// Absent names yield 0.
    Count edge_multiplicity(std::string_view a, std::string_view b) const;

    const Adjacency& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t simple_degree(Vertex v) const { return adjacency_.at(v).size(); }

    const std::shared_ptr<NameTable>& names() const noexcept { return names_; }

    /// Visits each undirected edge once as (u, v, multiplicity) with u < v.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (Vertex u = 0; u < adjacency_.size(); ++u) {
            for (const auto& [v, w] : adjacency_[u]) {
                if (u < v) f(u, v, w);
            }
        }
    }

private:
    std::shared_ptr<NameTable> names_;
    std::vector<CharacterId> characters_;
    std::unordered_map<CharacterId, Vertex> local_;
    std::vector<Adjacency> adjacency_;
    Count edge_total_ = 0;
};

/// Vertex union by name, multiplicities summed. The result uses the name
/// table of the first graph (or a fresh one for an empty list).
MultiGraph merge(std::span<const MultiGraph* const> graphs);
MultiGraph merge(const std::vector<MultiGraph>& graphs);

/// Read-only CSR view with all multiplicities collapsed to 1.
class SimpleView {
public:
    explicit SimpleView(const MultiGraph& g);

    std::size_t order() const noexcept { return offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }
    std::span<const Vertex> neighbors(Vertex v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Connected component index per vertex, numbered in order of the lowest
/// vertex they contain.
std::vector<std::uint32_t> connected_components(const SimpleView& view);

/// Assignment of every vertex to exactly one community. Community ids are
/// renumbered to 0..k-1 in order of first appearance.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::span<const std::size_t> labels);
    explicit Partition(const std::vector<std::size_t>& labels)
        : Partition(std::span<const std::size_t>(labels)) {}

    static Partition singletons(std::size_t n);
    static Partition single(std::size_t n);

    std::size_t size() const noexcept { return assignment_.size(); }
    std::size_t community_count() const noexcept { return count_; }
    CommunityId community(Vertex v) const { return assignment_.at(v); }
    std::span<const CommunityId> assignment() const noexcept { return assignment_; }
    std::vector<std::vector<Vertex>> communities() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<CommunityId> assignment_;
    std::size_t count_ = 0;
};

} // namespace castnet
