/*
 * ingest.hpp
 *
 * Episode interaction files -> Corpus, and named temporal slices over it.
 *
 * File format: one file per episode named sSSeEE.txt. Each data line holds
 * two character names separated by a tab (configurable). '#' starts a
 * comment; blank lines are ignored. Every data line is one interaction.
 */

#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "castnet/graph.hpp"

namespace castnet {

struct EpisodeKey {
    int season = 0;
    int episode = 0;

    auto operator<=>(const EpisodeKey&) const = default;

    /// "s1e18"
    std::string str() const;
    /// "s01e18.txt"
    std::string file_name() const;
    /// Accepts "sXeY" with optional zero padding, case-insensitive 's'/'e'.
    static std::optional<EpisodeKey> parse(std::string_view text);
};

struct ParseOptions {
    char separator = '\t';
};

/// Collects non-fatal diagnostics (e.g. empty episode files).
using Warnings = std::vector<std::string>;

/// Parses one episode file. Errors carry "file:line".
MultiGraph parse_file(const std::filesystem::path& path,
                      std::shared_ptr<NameTable> names,
                      const ParseOptions& options = {},
                      Warnings* warnings = nullptr);

/// Parses already-loaded text; `source` names it in diagnostics.
MultiGraph parse_text(std::string_view text, std::string_view source,
                      std::shared_ptr<NameTable> names,
                      const ParseOptions& options = {},
                      Warnings* warnings = nullptr);

/// Episode order, built-in slices "the6", "firsts", "lasts", plus any
/// configured slices.
class Corpus {
public:
    Corpus();

    void add_episode(EpisodeKey key, MultiGraph graph);
    const std::map<EpisodeKey, MultiGraph>& episodes() const noexcept { return episodes_; }
    const MultiGraph& episode(EpisodeKey key) const;
    bool contains(EpisodeKey key) const { return episodes_.contains(key); }
    std::size_t size() const noexcept { return episodes_.size(); }

    const std::shared_ptr<NameTable>& names() const noexcept { return names_; }

    /// Registers (or replaces) a named slice. Every episode must exist.
    void define_slice(const std::string& name, std::vector<EpisodeKey> episodes);
    const std::map<std::string, std::vector<EpisodeKey>>& slices() const noexcept { return slices_; }

    /// Recomputes "firsts", "lasts" and, when all its episodes are present,
    /// "the6".
    void register_builtin_slices();

    /// Stable 64-bit FNV-1a digest of the episode keys and their edge lists,
    /// rendered as 16 hex digits.
    std::string hash() const;

private:
    std::shared_ptr<NameTable> names_;
    std::map<EpisodeKey, MultiGraph> episodes_;
    std::map<std::string, std::vector<EpisodeKey>> slices_;
};

/// Episodes that revolve around the six friends.
const std::vector<EpisodeKey>& six_friends_episodes();

/// Loads every *.txt in `dir` whose stem is an episode key.
Corpus load_corpus(const std::filesystem::path& dir,
                   const ParseOptions& options = {},
                   Warnings* warnings = nullptr);

/// Slice selector. Text forms:
///   AE | all          every episode
///   s7                one season
///   s1-s4 | s1--s4    inclusive season range
///   s1e18             one episode
///   a,b,c             union of the above
///   name              a registered slice
class SliceSpec {
public:
    static SliceSpec parse(std::string_view text);

    const std::string& text() const noexcept { return text_; }

    /// Sorted, duplicate-free episode list. Throws DataError when the
    /// selection is empty or names a missing episode, UsageError when a
    /// name is not a registered slice.
    std::vector<EpisodeKey> resolve(const Corpus& corpus) const;

private:
    std::string text_;
};

/// Merge of the selected episode graphs.
MultiGraph slice(const Corpus& corpus, const SliceSpec& spec);
MultiGraph slice(const Corpus& corpus, std::string_view spec);

/// Number of distinct seasons among the episodes a spec selects.
std::size_t season_count(const Corpus& corpus, const SliceSpec& spec);

/// Reads "name = item, item, ..." lines (items in SliceSpec syntax) and
/// registers each as a slice on the corpus.
void load_slices_config(Corpus& corpus, const std::filesystem::path& path);
void parse_slices_config(Corpus& corpus, std::string_view text, std::string_view source);

} // namespace castnet
