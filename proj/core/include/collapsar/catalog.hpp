#ifndef COLLAPSAR_CATALOG_HPP
#define COLLAPSAR_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "collapsar/collapse.hpp"
#include "collapsar/complex.hpp"

namespace collapsar {

enum class ObstructionFamily { DunceHat, SawBlade2, SawBlade3, SawBlade4, Unknown };

std::string family_name(ObstructionFamily f);

/// One contractible non-collapsible 2-complex from the shipped catalog.
struct ObstructionEntry {
    std::string name;  // e.g. "sawblade-I-1", "duncehat-18-07"
    ObstructionFamily family = ObstructionFamily::Unknown;
    std::vector<Tri> triangles;

    TwoComplex to_complex() const;
};

/// The 19 saw-blade complexes and 61 dunce hats with 8 vertices and 18
/// triangles, deduplicated by canonical form. A checksum over the raw data
/// guards against transcription damage (throws ValidationError on mismatch).
const std::vector<ObstructionEntry>& load_catalog();

/// Per-check verification report for a candidate obstruction complex.
struct ObstructionReport {
    bool euler_ok = false;       // chi = 1
    bool betti_ok = false;       // F2 betti (1,0,0)
    bool greedy_stuck = false;   // non-collapsible under `greedy_seeds` orders
    bool histogram_ok = false;   // edge degrees exactly {2:21, 3:4}
    bool cycle_ok = false;       // the degree-3 edges form one closed 4-cycle
    bool size_bounds_ok = false; // obstruction_size_bounds both hold
    std::string detail;

    bool pass() const {
        return euler_ok && betti_ok && greedy_stuck && histogram_ok && cycle_ok && size_bounds_ok;
    }
};

ObstructionReport verify_obstruction(const TwoComplex& tc, int greedy_seeds = 1000);

/// Result of searching for an injective simplicial embedding of a 2-complex
/// pattern into the 2-skeleton of a host complex.
struct EmbeddingResult {
    bool found = false;
    std::map<int, int> vertex_map;  // pattern vertex -> host vertex
};

/// Backtracking over injective vertex assignments, pattern vertices ordered
/// by decreasing degree, pruning on host 1-skeleton edges and on every
/// pattern triangle as soon as its image is determined. Deterministic first
/// result (host candidates in ascending label order).
EmbeddingResult find_embedding(const TwoComplex& pattern, const Complex3& host);

/// All embeddings up to `limit` (0 = unlimited), in search order.
std::vector<EmbeddingResult> find_embeddings(const TwoComplex& pattern, const Complex3& host,
                                             std::size_t limit);

/// Catalog sweep over a host sphere. Extendable collapsibility is certified
/// only when the small-size criterion applies (v < 8 or n < 16); for larger
/// hosts a clean scan means only that no 18-triangle obstruction from the
/// catalog embeds, since the 17-triangle obstructions are not shipped.
struct ScanReport {
    std::vector<std::pair<std::string, EmbeddingResult>> results;
    bool any_found = false;
    bool certified_extendably_collapsible = false;
    std::string basis;

    std::string to_json_text() const;
};

ScanReport scan_for_obstructions(const Complex3& host);

}  // namespace collapsar

#endif
