#ifndef PRODMATCH_SHIFTING_HPP
#define PRODMATCH_SHIFTING_HPP

#include <utility>
#include <vector>

#include "prodmatch/family.hpp"

namespace prodmatch {

struct ShiftStep {
    Vertex a;
    Vertex b;
    std::size_t moved = 0; // edges rewritten by this application
};

struct ShiftLog {
    std::vector<ShiftStep> steps; // effective steps only (moved > 0)
    int passes = 0;               // full sweeps over all adjacent pairs
};

/// One compression S_ab, a strictly below b in the same part: every edge
/// containing b but not a is rewritten to (F \ {b}) u {a} unless the rewrite
/// is already present. Size-preserving.
Family shift_once(const Family& family, Vertex a, Vertex b);

/// Sweeps the adjacent pairs (v_{i,j}, v_{i,j+1}) of every part, repeating
/// until one full pass changes nothing. The result is fixed by every
/// comparable shift. The sweep order is fixed for determinism; no canonicity
/// across other orders is claimed.
std::pair<Family, ShiftLog> shift_to_fixpoint(const Family& family);

/// Same sweep, applied in lockstep: each (a,b) step rewrites every family of
/// the tuple before the next step. Preserves rainbow-matching-freeness.
std::pair<FamilyTuple, ShiftLog> shift_tuple_to_fixpoint(const FamilyTuple& tuple);

/// True iff S_ab(F) = F for every comparable pair a < b.
bool is_shifted(const Family& family);

/// True iff A <= B (edge dominance) and B in F imply A in F.
bool is_downward_closed(const Family& family);

} // namespace prodmatch

#endif
