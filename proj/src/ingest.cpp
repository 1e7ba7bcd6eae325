/*
 * ingest.cpp
 */

#include "castnet/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "castnet/errors.hpp"

namespace castnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::optional<int> parse_int(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;

void fnv_feed(std::uint64_t& h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= fnv_prime;
    }
    h ^= 0xff;  // field terminator
    h *= fnv_prime;
}

} // namespace

std::string EpisodeKey::str() const {
    return "s" + std::to_string(season) + "e" + std::to_string(episode);
}

std::string EpisodeKey::file_name() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "s%02de%02d.txt", season, episode);
    return buf;
}

std::optional<EpisodeKey> EpisodeKey::parse(std::string_view text) {
    if (text.size() < 4 || (text[0] != 's' && text[0] != 'S')) return std::nullopt;
    text.remove_prefix(1);
    auto e = text.find_first_of("eE");
    if (e == std::string_view::npos) return std::nullopt;
    auto season = parse_int(text.substr(0, e));
    auto episode = parse_int(text.substr(e + 1));
    if (!season || !episode) return std::nullopt;
    if (*season < 1 || *season > 10 || *episode < 1) return std::nullopt;
    return EpisodeKey{*season, *episode};
}

MultiGraph parse_text(std::string_view text, std::string_view source,
                      std::shared_ptr<NameTable> names, const ParseOptions& options,
                      Warnings* warnings) {
    MultiGraph g(std::move(names));
    std::size_t line_no = 0;
    std::size_t data_lines = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        auto fields = split(line, options.separator);
        if (fields.size() != 2 || trim(fields[0]).empty() || trim(fields[1]).empty()) {
            throw DataError(where + ": expected exactly two names, got '" + std::string(line) + "'");
        }
        try {
            g.add_interaction(fields[0], fields[1]);
        } catch (const DataError& e) {
            throw DataError(where + ": " + e.what());
        }
        ++data_lines;
        if (end == text.size()) break;
    }
    if (data_lines == 0 && warnings) warnings->push_back(std::string(source) + ": no interactions");
    return g;
}

MultiGraph parse_file(const std::filesystem::path& path, std::shared_ptr<NameTable> names,
                      const ParseOptions& options, Warnings* warnings) {
    const std::string text = read_file(path);
    return parse_text(text, path.filename().string(), std::move(names), options, warnings);
}

Corpus::Corpus() : names_(std::make_shared<NameTable>()) {}

void Corpus::add_episode(EpisodeKey key, MultiGraph graph) {
    if (episodes_.contains(key)) throw DataError("duplicate episode " + key.str());
    if (graph.names() != names_) {
        MultiGraph rebased(names_);
        for (Vertex v = 0; v < graph.order(); ++v) rebased.add_vertex(graph.label(v));
        graph.for_each_edge([&](Vertex u, Vertex v, Count w) { rebased.add_edge(u, v, w); });
        graph = std::move(rebased);
    }
    episodes_.emplace(key, std::move(graph));
}

const MultiGraph& Corpus::episode(EpisodeKey key) const {
    auto it = episodes_.find(key);
    if (it == episodes_.end()) throw DataError("episode " + key.str() + " not in corpus");
    return it->second;
}

void Corpus::define_slice(const std::string& name, std::vector<EpisodeKey> episodes) {
    for (const auto& key : episodes) {
        if (!contains(key)) throw DataError("slice '" + name + "' references missing episode " + key.str());
    }
    std::sort(episodes.begin(), episodes.end());
    episodes.erase(std::unique(episodes.begin(), episodes.end()), episodes.end());
    if (episodes.empty()) throw DataError("slice '" + name + "' is empty");
    slices_[name] = std::move(episodes);
}

const std::vector<EpisodeKey>& six_friends_episodes() {
    static const std::vector<EpisodeKey> keys = {
        {1, 18}, {2, 3},  {3, 2},  {3, 9},  {3, 16}, {3, 17}, {4, 1},  {4, 12}, {5, 14}, {6, 6},
        {6, 9},  {7, 1},  {7, 8},  {7, 14}, {8, 4},  {8, 9},  {9, 18}, {10, 4}, {10, 10}, {10, 16},
    };
    return keys;
}

void Corpus::register_builtin_slices() {
    slices_.erase("firsts");
    slices_.erase("lasts");
    slices_.erase("the6");
    if (episodes_.empty()) return;
    std::map<int, std::pair<EpisodeKey, EpisodeKey>> bounds;
    for (const auto& [key, _] : episodes_) {
        auto [it, inserted] = bounds.try_emplace(key.season, key, key);
        if (!inserted) it->second.second = key;
    }
    std::vector<EpisodeKey> firsts, lasts;
    for (const auto& [_, fl] : bounds) {
        firsts.push_back(fl.first);
        lasts.push_back(fl.second);
    }
    define_slice("firsts", firsts);
    define_slice("lasts", lasts);
    const auto& six = six_friends_episodes();
    if (std::all_of(six.begin(), six.end(), [&](const EpisodeKey& k) { return contains(k); })) {
        define_slice("the6", six);
    }
}

std::string Corpus::hash() const {
    std::uint64_t h = fnv_offset;
    for (const auto& [key, g] : episodes_) {
        fnv_feed(h, key.str());
        std::vector<std::tuple<std::string, std::string, Count>> edges;
        g.for_each_edge([&](Vertex u, Vertex v, Count w) {
            auto a = g.label(u), b = g.label(v);
            if (b < a) std::swap(a, b);
            edges.emplace_back(std::move(a), std::move(b), w);
        });
        std::sort(edges.begin(), edges.end());
        for (const auto& [a, b, w] : edges) {
            fnv_feed(h, a);
            fnv_feed(h, b);
            fnv_feed(h, std::to_string(w));
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Corpus load_corpus(const std::filesystem::path& dir, const ParseOptions& options, Warnings* warnings) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw DataError("corpus directory '" + dir.string() + "' not found");
    std::map<EpisodeKey, fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        const std::string stem = entry.path().stem().string();
        auto key = EpisodeKey::parse(stem);
        if (!key) throw DataError("unparseable episode file name '" + entry.path().filename().string() + "'");
        auto [it, inserted] = files.emplace(*key, entry.path());
        if (!inserted) {
            throw DataError("duplicate episode " + key->str() + ": '" + it->second.filename().string() +
                            "' and '" + entry.path().filename().string() + "'");
        }
    }
    Corpus corpus;
    for (const auto& [key, path] : files) {
        corpus.add_episode(key, parse_file(path, corpus.names(), options, warnings));
    }
    corpus.register_builtin_slices();
    return corpus;
}

SliceSpec SliceSpec::parse(std::string_view text) {
    SliceSpec spec;
    spec.text_ = std::string(trim(text));
    if (spec.text_.empty()) throw UsageError("empty slice specification");
    return spec;
}

namespace {

std::optional<int> parse_season(std::string_view s) {
    if (s.size() < 2 || (s[0] != 's' && s[0] != 'S')) return std::nullopt;
    auto n = parse_int(s.substr(1));
    if (!n || *n < 1 || *n > 10) return std::nullopt;
    return n;
}

void resolve_item(const Corpus& corpus, std::string_view item, std::vector<EpisodeKey>& out) {
    item = trim(item);
    if (item.empty()) throw UsageError("empty slice item");
    const std::string name(item);
    if (auto it = corpus.slices().find(name); it != corpus.slices().end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
    }
    if (name == "AE" || name == "all") {
        for (const auto& [key, _] : corpus.episodes()) out.push_back(key);
        return;
    }
    if (auto key = EpisodeKey::parse(item)) {
        if (!corpus.contains(*key)) throw DataError("episode " + key->str() + " not in corpus");
        out.push_back(*key);
        return;
    }
    std::optional<int> lo, hi;
    if (auto dash = item.find('-'); dash != std::string_view::npos) {
        std::string_view rest = item.substr(dash);
        while (!rest.empty() && rest.front() == '-') rest.remove_prefix(1);
        lo = parse_season(item.substr(0, dash));
        hi = parse_season(rest);
        if (!lo || !hi || *lo > *hi) throw UsageError("bad season range '" + name + "'");
    } else if (auto s = parse_season(item)) {
        lo = hi = s;
    }
    if (lo) {
        for (const auto& [key, _] : corpus.episodes()) {
            if (key.season >= *lo && key.season <= *hi) out.push_back(key);
        }
        return;
    }
    if (name == "the6") {
        std::string missing;
        for (const auto& k : six_friends_episodes()) {
            if (!corpus.contains(k)) missing += " " + k.str();
        }
        throw DataError("slice 'the6' needs episodes missing from the corpus:" + missing);
    }
    throw UsageError("unknown slice '" + name + "'");
}

} // namespace

std::vector<EpisodeKey> SliceSpec::resolve(const Corpus& corpus) const {
    std::vector<EpisodeKey> keys;
    for (auto item : split(text_, ',')) resolve_item(corpus, item, keys);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    if (keys.empty()) throw DataError("slice '" + text_ + "' selects no episodes");
    return keys;
}

MultiGraph slice(const Corpus& corpus, const SliceSpec& spec) {
    std::vector<const MultiGraph*> graphs;
    for (const auto& key : spec.resolve(corpus)) graphs.push_back(&corpus.episode(key));
    MultiGraph out = merge(std::span<const MultiGraph* const>(graphs));
    return out;
}

MultiGraph slice(const Corpus& corpus, std::string_view spec) {
    return slice(corpus, SliceSpec::parse(spec));
}

std::size_t season_count(const Corpus& corpus, const SliceSpec& spec) {
    std::set<int> seasons;
    for (const auto& key : spec.resolve(corpus)) seasons.insert(key.season);
    return seasons.size();
}

void parse_slices_config(Corpus& corpus, std::string_view text, std::string_view source) {
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        auto eq = line.find('=');
        if (eq == std::string_view::npos) throw DataError(where + ": expected 'name = episodes'");
        std::string name(trim(line.substr(0, eq)));
        std::string_view value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
            value = trim(value.substr(1, value.size() - 2));
        }
        if (name.empty()) throw DataError(where + ": missing slice name");
        std::string items;
        for (auto item : split(value, ',')) {
            item = trim(item);
            if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
            if (!items.empty()) items += ',';
            items += item;
        }
        try {
            corpus.define_slice(name, SliceSpec::parse(items).resolve(corpus));
        } catch (const Error& e) {
            throw DataError(where + ": " + e.what());
        }
    }
}

void load_slices_config(Corpus& corpus, const std::filesystem::path& path) {
    parse_slices_config(corpus, read_file(path), path.filename().string());
}

} // namespace castnet
