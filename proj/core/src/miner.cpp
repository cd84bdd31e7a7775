#include "cospec/miner.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "cospec/cospectrality.hpp"
#include "cospec/graph6.hpp"
#include "cospec/json_io.hpp"

namespace cospec {

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_graphs: order must be in [1, 7]");
    std::vector<Graph> reps = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        for (const Graph& g : reps) {
            const int masks = 1 << (k - 1);
            for (int mask = 0; mask < masks; ++mask) {
                BitVec b(static_cast<std::size_t>(k - 1));
                for (int i = 0; i < k - 1; ++i) b[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                seen.insert(upper_bits(canonical_form(overgraph(g, b))));
            }
        }
        reps.clear();
        reps.reserve(seen.size());
        for (std::uint64_t bits : seen) reps.push_back(from_upper_bits(k, bits));
    }
    return reps;
}

CatalogSource CatalogSource::internal(int n) {
    CatalogSource s;
    s.order_ = n;
    s.graphs_ = enumerate_graphs(n);
    return s;
}

CatalogSource CatalogSource::from_file(const std::string& path) {
    CatalogSource s;
    s.graphs_ = read_graph6_file(path);
    if (!s.graphs_.empty()) {
        s.order_ = s.graphs_.front().order();
        for (const Graph& g : s.graphs_)
            if (g.order() != s.order_) {
                s.order_ = -1;
                break;
            }
    }
    return s;
}

namespace {

std::vector<std::uint64_t> deck_key(const Graph& g) {
    std::vector<std::uint64_t> key;
    key.reserve(static_cast<std::size_t>(g.order()));
    for (const Graph& card : deck(g)) key.push_back(upper_bits(card));
    return key;
}

} // namespace

const std::map<std::vector<std::uint64_t>, std::vector<int>>& CatalogSource::deck_index() const {
    if (!deck_built_) {
        for (int i = 0; i < static_cast<int>(graphs_.size()); ++i)
            deck_index_[deck_key(graphs_[static_cast<std::size_t>(i)])].push_back(i);
        deck_built_ = true;
    }
    return deck_index_;
}

std::string to_string(MateLevel level) {
    switch (level) {
        case MateLevel::cospectral: return "cospectral";
        case MateLevel::generalized: return "generalized";
        case MateLevel::rooted: return "rooted";
    }
    return "?";
}

MateLevel mate_level_from_string(const std::string& s) {
    if (s == "cospectral") return MateLevel::cospectral;
    if (s == "generalized") return MateLevel::generalized;
    if (s == "rooted") return MateLevel::rooted;
    throw std::invalid_argument("unknown mate level: " + s);
}

namespace {

using PolyKey = std::vector<BigInt>;

PolyKey key_of(const IntPoly& p) { return p.coeffs; }

struct RootedInstance {
    int graph_index;
    int root;
    std::uint64_t canon;
};

} // namespace

std::vector<MateRecord> find_mates(const CatalogSource& source, MateLevel level) {
    const std::vector<Graph>& graphs = source.graphs();
    std::vector<MateRecord> records;

    if (level == MateLevel::cospectral || level == MateLevel::generalized) {
        std::map<std::vector<PolyKey>, std::vector<int>> buckets;
        std::vector<IntPoly> polys(graphs.size());
        for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
            const Graph& g = graphs[static_cast<std::size_t>(i)];
            polys[static_cast<std::size_t>(i)] = charpoly_exact(g);
            std::vector<PolyKey> key = {key_of(polys[static_cast<std::size_t>(i)])};
            if (level == MateLevel::generalized) key.push_back(key_of(charpoly_exact(complement(g))));
            buckets[std::move(key)].push_back(i);
        }
        for (const auto& [key, members] : buckets) {
            if (members.size() < 2) continue;
            for (std::size_t x = 0; x < members.size(); ++x) {
                for (std::size_t y = x + 1; y < members.size(); ++y) {
                    const Graph& a = graphs[static_cast<std::size_t>(members[x])];
                    const Graph& b = graphs[static_cast<std::size_t>(members[y])];
                    if (a.order() <= 10 && canonical_form(a) == canonical_form(b)) continue;
                    MateRecord rec;
                    rec.g6_a = encode_graph6(a);
                    rec.g6_b = encode_graph6(b);
                    rec.level = level;
                    rec.charpoly = polys[static_cast<std::size_t>(members[x])];
                    if (rec.g6_b < rec.g6_a) std::swap(rec.g6_a, rec.g6_b);
                    records.push_back(std::move(rec));
                }
            }
        }
    } else {
        // Rooted: instances are (graph, root) classes up to rooted
        // isomorphism, keyed by the four-polynomial signature.
        std::map<std::vector<PolyKey>, std::vector<RootedInstance>> buckets;
        for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
            const Graph& g = graphs[static_cast<std::size_t>(i)];
            const IntPoly chi = charpoly_exact(g);
            const IntPoly chi_c = charpoly_exact(complement(g));
            std::set<std::uint64_t> seen_roots;
            for (int v = 0; v < g.order(); ++v) {
                const RootedGraph rg{g, v};
                const std::uint64_t canon = rooted_canonical_bits(rg);
                if (!seen_roots.insert(canon).second) continue;
                const Graph card = delete_vertex(g, v);
                std::vector<PolyKey> key = {key_of(chi), key_of(chi_c), key_of(charpoly_exact(card)),
                                            key_of(charpoly_exact(complement(card)))};
                buckets[std::move(key)].push_back({i, v, canon});
            }
        }
        for (const auto& [key, members] : buckets) {
            if (members.size() < 2) continue;
            for (std::size_t x = 0; x < members.size(); ++x) {
                for (std::size_t y = x + 1; y < members.size(); ++y) {
                    if (members[x].canon == members[y].canon) continue;
                    const auto& a = members[x];
                    const auto& b = members[y];
                    MateRecord rec;
                    rec.g6_a = encode_graph6(graphs[static_cast<std::size_t>(a.graph_index)]);
                    rec.root_a = a.root;
                    rec.g6_b = encode_graph6(graphs[static_cast<std::size_t>(b.graph_index)]);
                    rec.root_b = b.root;
                    rec.level = MateLevel::rooted;
                    rec.charpoly = charpoly_exact(graphs[static_cast<std::size_t>(a.graph_index)]);
                    if (std::tie(rec.g6_b, rec.root_b) < std::tie(rec.g6_a, rec.root_a)) {
                        std::swap(rec.g6_a, rec.g6_b);
                        std::swap(rec.root_a, rec.root_b);
                    }
                    records.push_back(std::move(rec));
                }
            }
        }
    }

    std::sort(records.begin(), records.end(), [](const MateRecord& a, const MateRecord& b) {
        return std::tie(a.g6_a, a.g6_b, a.root_a, a.root_b) < std::tie(b.g6_a, b.g6_b, b.root_a, b.root_b);
    });
    return records;
}

bool verify_record(const MateRecord& rec) {
    const Graph a = decode_graph6(rec.g6_a);
    const Graph b = decode_graph6(rec.g6_b);
    if (charpoly_exact(a) != rec.charpoly) return false;
    switch (rec.level) {
        case MateLevel::cospectral: return is_cospectral(a, b);
        case MateLevel::generalized: return is_generalized_cospectral(a, b);
        case MateLevel::rooted:
            if (rec.root_a < 0 || rec.root_b < 0) return false;
            return is_rooted_generalized_cospectral(RootedGraph{a, rec.root_a}, RootedGraph{b, rec.root_b})
                .rooted_generalized;
    }
    return false;
}

std::vector<Graph> reconstruction_oracle(const Graph& g, const CatalogSource& source) {
    if (g.order() != source.order())
        throw std::invalid_argument("reconstruction_oracle: graph order does not match the catalog");
    const auto& index = source.deck_index();
    const auto it = index.find(deck_key(g));
    std::vector<Graph> result;
    if (it == index.end()) return result;
    for (int i : it->second) result.push_back(source.graphs()[static_cast<std::size_t>(i)]);
    return result;
}

void persist_records(const std::vector<MateRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (const MateRecord& rec : records) out << mate_record_to_json(rec).dump() << '\n';
    if (!out) throw std::runtime_error("write failure: " + path);
}

std::vector<MateRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<MateRecord> records;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        MateRecord rec;
        try {
            rec = mate_record_from_json(nlohmann::json::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!verify_record(rec))
            throw std::runtime_error("line " + std::to_string(lineno) + ": record fails re-verification");
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace cospec
