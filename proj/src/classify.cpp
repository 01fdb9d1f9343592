#include "arcline/classify.hpp"

#include <algorithm>
#include <set>

#include "arcline/errors.hpp"

namespace arcline {

namespace {

// companions forced when (a,b) and (c,d) cross with a < c < b < d
std::vector<Arc> companions(coord_t a, coord_t c, coord_t b, coord_t d) {
    std::vector<Arc> out;
    for (auto [p, q] : {std::pair{a, c}, {c, b}, {b, d}, {a, d}})
        if (q - p >= 2) out.emplace_back(p, q);
    return out;
}

ConditionIVerdict check_i_over(const ArcRegion& r, const std::vector<Arc>& arcs, bool windowed) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i + 1; j < arcs.size(); ++j) {
            const Arc &x = arcs[i], &y = arcs[j];
            if (!cross(x, y)) continue;
            const Arc& l = x.m < y.m ? x : y;
            const Arc& rgt = x.m < y.m ? y : x;
            for (const Arc& c : companions(l.m, rgt.m, l.n, rgt.n)) {
                if (!member(r, c)) return {false, windowed, std::pair{x, y}, c};
            }
        }
    }
    return {true, windowed, std::nullopt, std::nullopt};
}

}  // namespace

ConditionIVerdict check_condition_i(const ArcRegion& r, CheckMode mode) {
    if (mode == CheckMode::Exact) {
        if (!is_finite(r))
            throw precondition_error("exact condition (i) check needs a finite region");
        return check_i_over(r, enumerate_all(r), false);
    }
    coord_t margin = max_abs_constant(normalize(r)) + 8;
    return check_i_over(r, enumerate_window(r, Window(-margin, margin)), true);
}

ConditionIIVerdict check_condition_ii(const ArcRegion& r) {
    FountainProfile fp = fountains(r);
    IntervalSet left_only = difference(fp.left, fp.right);
    IntervalSet right_only = difference(fp.right, fp.left);
    std::vector<Trapezoid> required;
    for (const auto& li : left_only.parts())
        for (const auto& ri : right_only.parts()) required.emplace_back(li, ri);
    ArcRegion missing = difference(ArcRegion(std::move(required)), r);
    if (is_empty(missing)) return {true, std::nullopt};
    return {false, sample_arc(missing)};
}

bool is_ort_closed(const ArcRegion& r) { return equals(closure(r), r); }

bool is_precovering(const ArcRegion& r) {
    FountainProfile fp = fountains(r);
    return is_subset(fp.right, fp.left);
}

bool is_preenveloping(const ArcRegion& r) {
    FountainProfile fp = fountains(r);
    return is_subset(fp.left, fp.right);
}

bool is_torsion_class(const ArcRegion& r) { return is_ort_closed(r) && is_precovering(r); }

ArcRegion right_perp(const ArcRegion& r) { return shift_region(ort(r), 1); }

ArcRegion left_perp(const ArcRegion& r) { return shift_region(ort(r), -1); }

std::string to_string(const TStructure& t) {
    switch (t.kind) {
        case TStructureKind::Zero: return "Zero";
        case TStructureKind::All: return "All";
        case TStructureKind::HalfLine: return "HalfLine(" + std::to_string(t.line) + ")";
        case TStructureKind::Not: return "Not";
    }
    return "Not";
}

std::string to_string(CoTStructureKind k) {
    switch (k) {
        case CoTStructureKind::Zero: return "Zero";
        case CoTStructureKind::All: return "All";
        case CoTStructureKind::Not: return "Not";
    }
    return "Not";
}

TStructure classify_t_structure(const ArcRegion& r) {
    if (!is_torsion_class(r) || !is_subset(shift_region(r, 1), r)) return {TStructureKind::Not};
    if (is_empty(r)) return {TStructureKind::Zero};
    if (equals(r, ArcRegion::all())) return {TStructureKind::All};

    // what remains must be a lower half plane
    coord_t top = kNegInf;
    const ArcRegion canon = normalize(r);
    for (const auto& t : canon.parts())
        top = std::max(top, std::min(t.ni.hi, sat_add(t.mi.hi, t.dhi)));
    if (!finite(top) || !equals(r, lower_region(top)))
        throw theorem_violation("shift-closed torsion class is not Zero/All/half-line");
    return {TStructureKind::HalfLine, top};
}

CoTStructureKind classify_co_t_structure(const ArcRegion& r) {
    if (!is_torsion_class(r) || !is_subset(shift_region(r, -1), r)) return CoTStructureKind::Not;
    if (is_empty(r)) return CoTStructureKind::Zero;
    if (!equals(r, ArcRegion::all()))
        throw theorem_violation("nonzero co-shift-closed torsion class must be everything");
    return CoTStructureKind::All;
}

std::vector<Arc> precover_construct(const ArcRegion& r, const Arc& x) {
    if (!is_precovering(r)) {
        FountainProfile fp = fountains(r);
        IntervalSet bad = difference(fp.right, fp.left);
        coord_t w = finite(bad.parts().front().lo) ? bad.parts().front().lo
                                                   : std::min<coord_t>(bad.parts().front().hi, 0);
        throw precondition_error("not precovering: right fountain " + std::to_string(w) +
                                 " is not a left fountain");
    }

    std::set<Arc> out;
    // one arc per backward line: the longest (p,c) with p <= x.m, i.e. p maximal
    for (coord_t c = x.m + 2; c <= x.n; ++c) {
        if (auto p = max_left_endpoint(r, c, x.m)) out.insert(Arc(*p, c));
    }

    // sources strictly ahead of x: all of them if finitely many, else one arc on
    // the outermost right-fountain line patches the rest through its fountain
    ArcRegion forward = intersect(
        r, ArcRegion::single(Trapezoid(IntInterval(x.m + 2, x.n), IntInterval::at_least(x.n + 2))));
    if (is_finite(forward)) {
        for (const Arc& a : enumerate_all(forward)) out.insert(a);
    } else {
        IntervalSet rf = intersect(fountains(r).right, IntervalSet({IntInterval(x.m + 2, x.n)}));
        coord_t cstar = rf.parts().back().hi;  // bounded above by x.n
        auto p = max_left_endpoint(r, cstar, x.m);
        if (!p)
            throw theorem_violation("fountain line lost its left half");
        out.insert(Arc(*p, cstar));
    }
    return {out.begin(), out.end()};
}

std::vector<Arc> preenvelope_construct(const ArcRegion& r, const Arc& x) {
    std::vector<Arc> mirrored = precover_construct(mirror_region(r), mirror_arc(x));
    std::vector<Arc> out;
    out.reserve(mirrored.size());
    for (const Arc& a : mirrored) out.push_back(mirror_arc(a));
    std::sort(out.begin(), out.end());
    return out;
}

ClassificationReport classify_region(const ArcRegion& r) {
    ClassificationReport rep{
        .fountains = fountains(r),
        .locally_finite = is_locally_finite(r),
        .condition_i = check_condition_i(r, is_finite(r) ? CheckMode::Exact : CheckMode::Windowed),
        .condition_ii = check_condition_ii(r),
        .ort_closed = is_ort_closed(r),
        .precovering = is_precovering(r),
        .preenveloping = is_preenveloping(r),
        .torsion_class = false,
        .t_structure = {TStructureKind::Not},
        .co_t_structure = CoTStructureKind::Not,
        .canonical_parts = normalize(r).parts().size(),
    };
    rep.torsion_class = rep.ort_closed && rep.precovering;
    rep.t_structure = classify_t_structure(r);
    rep.co_t_structure = classify_co_t_structure(r);
    return rep;
}

}  // namespace arcline
