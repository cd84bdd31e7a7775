#pragma once

#include <map>
#include <string>
#include <vector>

#include "cospec/exact.hpp"
#include "cospec/graph.hpp"

namespace cospec {

// One representative per isomorphism class, ordered by packed adjacency
// bits; 1 <= n <= 7.
std::vector<Graph> enumerate_graphs(int n);

// A catalog of graphs to mine: either the internal exhaustive enumeration
// or a graph6 file. Deck keys are materialized once on first oracle use.
class CatalogSource {
public:
    static CatalogSource internal(int n);
    static CatalogSource from_file(const std::string& path);

    int order() const { return order_; } // -1 when the file mixes orders
    const std::vector<Graph>& graphs() const { return graphs_; }

    // deck multiset (sorted canonical upper bits) -> catalog indices
    const std::map<std::vector<std::uint64_t>, std::vector<int>>& deck_index() const;

private:
    int order_ = -1;
    std::vector<Graph> graphs_;
    mutable std::map<std::vector<std::uint64_t>, std::vector<int>> deck_index_;
    mutable bool deck_built_ = false;
};

enum class MateLevel { cospectral, generalized, rooted };

std::string to_string(MateLevel level);
MateLevel mate_level_from_string(const std::string& s);

struct MateRecord {
    std::string g6_a, g6_b;
    MateLevel level = MateLevel::cospectral;
    int root_a = -1, root_b = -1; // rooted level only
    IntPoly charpoly;             // shared characteristic polynomial

    bool operator==(const MateRecord&) const = default;
};

// Exhaustive mate discovery at the requested level. Pairs are grouped by
// exact polynomial fingerprints, deduplicated up to (rooted) isomorphism,
// and emitted sorted by (g6_a, g6_b, root_a, root_b).
std::vector<MateRecord> find_mates(const CatalogSource& source, MateLevel level);

// Re-verifies one record's claim from its graphs alone.
bool verify_record(const MateRecord& rec);

// All catalog graphs with the same deck multiset as g (g's class included).
std::vector<Graph> reconstruction_oracle(const Graph& g, const CatalogSource& source);

// JSON-lines persistence; load re-verifies every record and reports the
// offending line number on failure.
void persist_records(const std::vector<MateRecord>& records, const std::string& path);
std::vector<MateRecord> load_records(const std::string& path);

} // namespace cospec
