#ifndef COLLAPSAR_ANNEAL_HPP
#define COLLAPSAR_ANNEAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "collapsar/complex.hpp"

namespace collapsar {

enum class MoveKind { Move14, Move23, Move32, Move41 };

std::string move_kind_name(MoveKind k);

/// A bistellar move located by the face it acts on: a facet (1-4), an
/// interior triangle (2-3), a degree-3 edge (3-2) or a degree-4 vertex (4-1).
/// Vertex labels refer to the complex the move is applied to.
struct MoveSpec {
    MoveKind kind = MoveKind::Move14;
    std::vector<int> face;
};

/// Every legal move on `c`:
///  * 1-4 at each facet (always legal);
///  * 2-3 at each triangle whose two opposite vertices are not yet joined
///    by an edge;
///  * 3-2 at each degree-3 edge whose link triangle is not already a face;
///  * 4-1 at each degree-4 vertex whose replacement tetrahedron is absent,
///    provided the result keeps at least 5 vertices.
std::vector<MoveSpec> legal_moves(const Complex3& c);

/// Applies the move, returning a fresh normalized complex. Throws MoveError
/// naming the violated condition if the move is illegal.
Complex3 apply_move(const Complex3& c, const MoveSpec& m);

/// Like apply_move, but also reports the inverse move in the labels of the
/// returned complex (useful for replay and move-algebra checks).
struct MoveOutcome {
    Complex3 complex;
    MoveSpec inverse;
};
MoveOutcome apply_move_ex(const Complex3& c, const MoveSpec& m);

struct AnnealConfig {
    enum class Direction { Minimize, Maximize };
    Direction direction = Direction::Minimize;
    std::uint64_t max_moves = 10000;  // proposal count
    double initial_temperature = 1.0;
    double cooling_factor = 0.99;  // applied per accepted move
    std::uint64_t reheat_period = 500;  // accepted moves between temperature resets
    std::uint64_t seed = 0;
    /// Fraction of accepted moves whose result is re-validated as a closed
    /// 3-manifold (always every move in debug builds).
    double validation_rate = 0.01;

    void validate() const;
};

struct AnnealResult {
    Complex3 best_complex;
    mpq_class best_variance;

    struct LoggedMove {
        std::uint64_t step;  // proposal index
        MoveSpec move;
        mpq_class variance;  // edge variance after the move
    };
    std::vector<LoggedMove> move_log;        // accepted moves
    std::vector<mpq_class> variance_trace;   // best-so-far after each proposal

    /// CSV: step,kind,location,variance_num,variance_den
    std::string move_log_csv() const;
    /// CSV: step,variance_num,variance_den (best-so-far)
    std::string trace_csv() const;
};

/// Metropolis walk over bistellar moves with the exact rational edge variance
/// as objective (sign flipped for Direction::Maximize): geometric cooling per
/// accepted move, temperature reset every reheat_period accepted moves.
/// Seed-deterministic.
AnnealResult anneal_edge_variance(const Complex3& c, const AnnealConfig& cfg);

}  // namespace collapsar

#endif
