#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcline/ort.hpp"
#include "arcline/region.hpp"

namespace arcline {

// Condition (i): a crossing pair forces the four companion arcs it spans.
// Condition (ii): a left-only fountain a and right-only fountain b force (a,b).
// Together they characterize the ort-closed sets.

enum class CheckMode { Exact, Windowed };

struct ConditionIVerdict {
    bool holds;
    bool window_checked;  // decided on a margin window rather than the whole set
    std::optional<std::pair<Arc, Arc>> pair;  // crossing pair lacking a companion
    std::optional<Arc> missing;
};

struct ConditionIIVerdict {
    bool holds;
    std::optional<Arc> missing;
};

// Exact mode requires a finite region. Windowed mode checks all pairs inside
// [-M, M], M = max constant of the normalized region + 8.
ConditionIVerdict check_condition_i(const ArcRegion& r, CheckMode mode);
ConditionIIVerdict check_condition_ii(const ArcRegion& r);

bool is_ort_closed(const ArcRegion& r);
bool is_precovering(const ArcRegion& r);    // right fountains subset of left fountains
bool is_preenveloping(const ArcRegion& r);  // mirror dual
bool is_torsion_class(const ArcRegion& r);  // ort-closed and precovering

// X^perp and ^perp(X): shifted orts, so that Hom vanishes in the stated direction.
ArcRegion right_perp(const ArcRegion& r);
ArcRegion left_perp(const ArcRegion& r);

enum class TStructureKind { Zero, All, HalfLine, Not };
struct TStructure {
    TStructureKind kind;
    coord_t line = 0;  // meaningful for HalfLine only

    friend bool operator==(const TStructure&, const TStructure&) = default;
};
std::string to_string(const TStructure& t);

enum class CoTStructureKind { Zero, All, Not };
std::string to_string(CoTStructureKind k);

// Shift-closed torsion classes are Zero, All or a lower half plane; anything
// else would contradict a theorem and raises theorem_violation.
TStructure classify_t_structure(const ArcRegion& r);
CoTStructureKind classify_co_t_structure(const ArcRegion& r);

// Minimal right approximation of the arc x out of r, as the finite set of
// component arcs. Requires is_precovering(r); throws precondition_error otherwise.
std::vector<Arc> precover_construct(const ArcRegion& r, const Arc& x);
std::vector<Arc> preenvelope_construct(const ArcRegion& r, const Arc& x);

struct ClassificationReport {
    FountainProfile fountains;
    bool locally_finite;
    ConditionIVerdict condition_i;
    ConditionIIVerdict condition_ii;
    bool ort_closed;
    bool precovering;
    bool preenveloping;
    bool torsion_class;
    TStructure t_structure;
    CoTStructureKind co_t_structure;
    std::size_t canonical_parts;
};

ClassificationReport classify_region(const ArcRegion& r);

}  // namespace arcline
