/*
 * graph.cpp
 */

#include "castnet/graph.hpp"

#include <algorithm>
#include <cctype>

#include "castnet/errors.hpp"

namespace castnet {

std::string normalize_name(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

CharacterId NameTable::intern(std::string_view name) {
    std::string key(name);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    auto id = static_cast<CharacterId>(names_.size());
    names_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
}

std::optional<CharacterId> NameTable::find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    return std::nullopt;
}

MultiGraph::MultiGraph() : names_(std::make_shared<NameTable>()) {}

MultiGraph::MultiGraph(std::shared_ptr<NameTable> names) : names_(std::move(names)) {
    if (!names_) names_ = std::make_shared<NameTable>();
}

Vertex MultiGraph::add_vertex(std::string_view name) {
    const std::string normalized = normalize_name(name);
    if (normalized.empty()) throw DataError("empty character name");
    const CharacterId id = names_->intern(normalized);
    if (auto it = local_.find(id); it != local_.end()) return it->second;
    const auto v = static_cast<Vertex>(characters_.size());
    characters_.push_back(id);
    local_.emplace(id, v);
    adjacency_.emplace_back();
    return v;
}

void MultiGraph::add_edge(Vertex u, Vertex v, Count multiplicity) {
    if (u >= order() || v >= order()) throw DataError("edge endpoint out of range");
    if (u == v) throw DataError("self-interaction of '" + label(u) + "'");
    if (multiplicity == 0) return;
    adjacency_[u][v] += multiplicity;
    adjacency_[v][u] += multiplicity;
    edge_total_ += multiplicity;
}

void MultiGraph::add_interaction(std::string_view a, std::string_view b) {
    const std::string na = normalize_name(a);
    const std::string nb = normalize_name(b);
    if (na == nb) throw DataError("self-interaction of '" + na + "'");
    const Vertex u = add_vertex(na);
    const Vertex v = add_vertex(nb);
    add_edge(u, v, 1);
}

std::optional<Vertex> MultiGraph::find(std::string_view name) const {
    auto id = names_->find(normalize_name(name));
    if (!id) return std::nullopt;
    if (auto it = local_.find(*id); it != local_.end()) return it->second;
    return std::nullopt;
}

Vertex MultiGraph::vertex(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw DataError("unknown character '" + std::string(name) + "'");
}

Count MultiGraph::degree(Vertex v) const {
    if (v >= order()) throw DataError("unknown vertex " + std::to_string(v));
    Count d = 0;
    for (const auto& [_, w] : adjacency_[v]) d += w;
    return d;
}

Count MultiGraph::multiplicity(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return 0;
    const auto& adj = adjacency_[u];
    auto it = adj.find(v);
    return it == adj.end() ? 0 : it->second;
}

Count MultiGraph::edge_multiplicity(std::string_view a, std::string_view b) const {
    auto u = find(a);
    auto v = find(b);
    if (!u || !v) return 0;
    return multiplicity(*u, *v);
}

MultiGraph merge(std::span<const MultiGraph* const> graphs) {
    MultiGraph out(graphs.empty() ? nullptr : graphs.front()->names());
    for (const MultiGraph* g : graphs) {
        std::vector<Vertex> map(g->order());
        for (Vertex v = 0; v < g->order(); ++v) map[v] = out.add_vertex(g->label(v));
        g->for_each_edge([&](Vertex u, Vertex v, Count w) { out.add_edge(map[u], map[v], w); });
    }
    return out;
}

MultiGraph merge(const std::vector<MultiGraph>& graphs) {
    std::vector<const MultiGraph*> ptrs;
    ptrs.reserve(graphs.size());
    for (const auto& g : graphs) ptrs.push_back(&g);
    return merge(std::span<const MultiGraph* const>(ptrs));
}

SimpleView::SimpleView(const MultiGraph& g) {
    offsets_.reserve(g.order() + 1);
    offsets_.push_back(0);
    for (Vertex v = 0; v < g.order(); ++v) {
        for (const auto& [u, _] : g.neighbors(v)) targets_.push_back(u);
        offsets_.push_back(targets_.size());
    }
}

bool SimpleView::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::uint32_t> connected_components(const SimpleView& view) {
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> comp(view.order(), unset);
    std::vector<Vertex> stack;
    std::uint32_t next = 0;
    for (Vertex s = 0; s < view.order(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : view.neighbors(v)) {
                if (comp[u] == unset) {
                    comp[u] = next;
                    stack.push_back(u);
                }
            }
        }
        ++next;
    }
    return comp;
}

Partition::Partition(std::span<const std::size_t> labels) {
    assignment_.resize(labels.size());
    std::unordered_map<std::size_t, CommunityId> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.try_emplace(labels[i], static_cast<CommunityId>(remap.size()));
        assignment_[i] = it->second;
    }
    count_ = remap.size();
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    return Partition(labels);
}

Partition Partition::single(std::size_t n) {
    return Partition(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<Vertex>> Partition::communities() const {
    std::vector<std::vector<Vertex>> out(count_);
    for (Vertex v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

} // namespace castnet
