/*
 * fixtures.cpp
 */

#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "castnet/ingest.hpp"

namespace castnet::fixtures {

std::string vertex_name(std::size_t i) { return "v" + std::to_string(i); }

MultiGraph empty_graph(std::size_t n) {
    MultiGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(vertex_name(i));
    return g;
}

MultiGraph complete(std::size_t n) {
    MultiGraph g = empty_graph(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

MultiGraph star(std::size_t n) {
    MultiGraph g = empty_graph(n);
    for (Vertex i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

MultiGraph path(std::size_t n) {
    MultiGraph g = empty_graph(n);
    for (Vertex i = 1; i < n; ++i) g.add_edge(i - 1, i);
    return g;
}

MultiGraph cycle(std::size_t n) {
    MultiGraph g = path(n);
    g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

MultiGraph barbell(std::size_t k) {
    MultiGraph g = disjoint_cliques(2, k);
    g.add_edge(static_cast<Vertex>(k - 1), static_cast<Vertex>(k));
    return g;
}

MultiGraph disjoint_cliques(std::size_t count, std::size_t k) {
    MultiGraph g = empty_graph(count * k);
    for (std::size_t c = 0; c < count; ++c)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) g.add_edge(Vertex(c * k + i), Vertex(c * k + j));
    return g;
}

MultiGraph cocktail_party(std::size_t n) {
    MultiGraph g = empty_graph(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (!(i % 2 == 0 && j == i + 1)) g.add_edge(i, j);
    return g;
}

MultiGraph random_graph(std::size_t n, double p, Count max_multiplicity, Seed seed) {
    Rng rng(seed);
    MultiGraph g = empty_graph(n);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (rng.uniform() < p) g.add_edge(i, j, 1 + rng.below(max_multiplicity));
    return g;
}

MultiGraph planted(std::size_t groups, std::size_t size, double p_in, double p_out, Count max_multiplicity,
                   Seed seed) {
    Rng rng(seed);
    MultiGraph g = empty_graph(groups * size);
    for (Vertex i = 0; i < g.order(); ++i)
        for (Vertex j = i + 1; j < g.order(); ++j) {
            const double p = i / size == j / size ? p_in : p_out;
            if (rng.uniform() < p) g.add_edge(i, j, 1 + rng.below(max_multiplicity));
        }
    return g;
}

TempDir::TempDir() {
    static std::atomic<int> counter{0};
    const auto base = std::filesystem::temp_directory_path();
    for (;;) {
        path_ = base / ("castnet-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        if (std::filesystem::create_directory(path_)) break;
    }
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::size_t write_synthetic_corpus(const std::filesystem::path& dir, int seasons, int episodes_per_season,
                                   Seed seed) {
    static const char* main_cast[] = {"Monica", "Chandler", "Ross", "Rachel", "Joey", "Phoebe"};
    Rng rng(seed);
    std::size_t lines = 0;
    int guest = 0;
    for (int s = 1; s <= seasons; ++s) {
        for (int e = 1; e <= episodes_per_season; ++e) {
            std::ostringstream text;
            text << "# synthetic episode " << EpisodeKey{s, e}.str() << '\n';
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    const auto reps = rng.below(4);
                    for (std::uint64_t r = 0; r < reps; ++r, ++lines) {
                        text << main_cast[i] << '\t' << main_cast[j] << '\n';
                    }
                }
            // Recurring characters, one per season plus a shared pool.
            const std::string recurring[] = {"Gunther", "Janice", "Recurring S" + std::to_string(s)};
            for (const auto& r : recurring) {
                if (rng.uniform() < 0.5) continue;
                const auto reps = 1 + rng.below(3);
                for (std::uint64_t k = 0; k < reps; ++k, ++lines) {
                    text << r << '\t' << main_cast[rng.below(6)] << '\n';
                }
            }
            // One-off guests talking to a friend and sometimes each other.
            const auto guests = 1 + rng.below(3);
            std::string previous;
            for (std::uint64_t k = 0; k < guests; ++k) {
                const std::string name = "Guest " + std::to_string(++guest);
                text << name << '\t' << main_cast[rng.below(6)] << '\n';
                ++lines;
                if (!previous.empty() && rng.uniform() < 0.5) {
                    text << name << '\t' << previous << '\n';
                    ++lines;
                }
                previous = name;
            }
            write_file(dir / EpisodeKey{s, e}.file_name(), text.str());
        }
    }
    return lines;
}

} // namespace castnet::fixtures
