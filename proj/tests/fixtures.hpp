/*
 * fixtures.hpp
 *
 * Graph generators and an on-disk synthetic corpus for tests.
 */

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "castnet/graph.hpp"
#include "castnet/random.hpp"

namespace castnet::fixtures {

std::string vertex_name(std::size_t i);

/// Vertices "v0".."v{n-1}" are created up front, so vertex i is named v{i}.
MultiGraph empty_graph(std::size_t n);
MultiGraph complete(std::size_t n);
MultiGraph star(std::size_t n);   // vertex 0 is the centre
MultiGraph path(std::size_t n);
MultiGraph cycle(std::size_t n);
/// Two K_k joined by one bridge between vertex k-1 and vertex k.
MultiGraph barbell(std::size_t k);
/// `count` disjoint copies of K_k.
MultiGraph disjoint_cliques(std::size_t count, std::size_t k);
/// K_n minus the perfect matching {2i, 2i+1}.
MultiGraph cocktail_party(std::size_t n);

/// G(n, p) with multiplicities uniform in [1, max_multiplicity].
MultiGraph random_graph(std::size_t n, double p, Count max_multiplicity, Seed seed);

/// Planted partition: `groups` groups of `size`, intra edge probability
/// p_in, inter p_out, random multiplicities.
MultiGraph planted(std::size_t groups, std::size_t size, double p_in, double p_out, Count max_multiplicity,
                   Seed seed);

/// Owns a fresh directory under the system temp dir; removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

void write_file(const std::filesystem::path& path, const std::string& text);

/// Writes a small sitcom-like corpus: six main characters interacting
/// heavily every episode, a pool of recurring characters and one-off guests.
/// Returns the number of interaction lines written.
std::size_t write_synthetic_corpus(const std::filesystem::path& dir, int seasons, int episodes_per_season,
                                   Seed seed);

} // namespace castnet::fixtures
