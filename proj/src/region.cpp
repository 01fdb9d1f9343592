#include "arcline/region.hpp"

#include <algorithm>
#include <set>

#include "arcline/errors.hpp"

namespace arcline {

Trapezoid::Trapezoid(IntInterval mi_, IntInterval ni_, coord_t dlo_, coord_t dhi_)
    : mi(mi_), ni(ni_), dlo(dlo_), dhi(dhi_) {
    if (dlo < 2) throw std::invalid_argument("trapezoid band must stay inside n - m >= 2");
    if (dlo > dhi) throw std::invalid_argument("trapezoid band is inverted");
}

IntInterval Trapezoid::m_range() const {
    // fold the n-interval and the band into bounds on m
    coord_t lo = std::max(mi.lo, sat_sub(ni.lo, dhi));
    coord_t hi = std::min(mi.hi, sat_sub(ni.hi, dlo));
    return {lo, hi};
}

bool Trapezoid::contains(const Arc& a) const {
    return mi.contains(a.m) && ni.contains(a.n) && a.n - a.m >= dlo &&
           (dhi >= kPosInf || a.n - a.m <= dhi);
}

ArcRegion::ArcRegion(std::vector<Trapezoid> parts) : parts_(std::move(parts)) {
    std::erase_if(parts_, [](const Trapezoid& t) { return !t.feasible(); });
}

ArcRegion ArcRegion::all() {
    return single(Trapezoid(IntInterval::all(), IntInterval::all()));
}

ArcRegion ArcRegion::of_arcs(const std::vector<Arc>& arcs) {
    std::vector<Trapezoid> parts;
    parts.reserve(arcs.size());
    for (const Arc& a : arcs)
        parts.emplace_back(IntInterval::at(a.m), IntInterval::at(a.n));
    return ArcRegion(std::move(parts));
}

bool member(const ArcRegion& r, const Arc& a) {
    for (const auto& t : r.parts())
        if (t.contains(a)) return true;
    return false;
}

namespace {

// Constructs a part only when it denotes something; keeps ctor invariants intact.
std::optional<Trapezoid> make_part(IntInterval mi, IntInterval ni, coord_t dlo, coord_t dhi) {
    dlo = std::max<coord_t>(dlo, 2);
    if (dlo > dhi || mi.empty() || ni.empty()) return std::nullopt;
    Trapezoid t(mi, ni, dlo, dhi);
    if (!t.feasible()) return std::nullopt;
    return t;
}

bool covered_by(const Trapezoid& a, const Trapezoid& b) {
    // componentwise containment; sufficient, not necessary
    return b.mi.lo <= a.mi.lo && a.mi.hi <= b.mi.hi && b.ni.lo <= a.ni.lo &&
           a.ni.hi <= b.ni.hi && b.dlo <= a.dlo && a.dhi <= b.dhi;
}

std::vector<Trapezoid> absorb(std::vector<Trapezoid> parts) {
    std::vector<char> dead(parts.size(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size() && !dead[i]; ++j) {
            if (i == j || dead[j]) continue;
            if (covered_by(parts[i], parts[j]) && (j < i || !covered_by(parts[j], parts[i])))
                dead[i] = 1;
        }
    }
    std::vector<Trapezoid> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!dead[i]) out.push_back(parts[i]);
    return out;
}

/*
 * Strip sweep. The m axis is cut at every value where the structure of a
 * region's vertical n-sections can change: liveness bounds of each part and
 * every crossing of a constant n-bound with a diagonal one (plus a +-1 guard
 * band so adjacency decisions are also strip-constant). Inside one strip each
 * live part contributes one n-interval whose endpoints are a fixed form —
 * either a constant or m + c — and the relative order of all endpoint forms is
 * constant across the strip, so decisions made at one representative m hold
 * throughout. Everything exact downstream (normalize, complement, equality)
 * reduces to this.
 */
struct NBound {
    bool diag;  // value is m + c when set, plain c otherwise
    coord_t c;
};

struct Span {
    NBound lo, hi;
    coord_t lo_val, hi_val;  // evaluated at the strip representative
};

struct Strip {
    coord_t mlo, mhi;
    std::vector<Span> spans;  // disjoint, sorted upward, merged
};

std::vector<Strip> strip_profile(const std::vector<Trapezoid>& parts_in) {
    std::vector<Trapezoid> parts = absorb(parts_in);

    std::set<coord_t> bps;
    auto mark = [&](coord_t v) {
        if (finite(v)) {
            bps.insert(v - 1);
            bps.insert(v);
            bps.insert(v + 1);
        }
    };
    std::set<coord_t> consts, diags;
    for (const auto& t : parts) {
        IntInterval er = t.m_range();
        mark(er.lo);
        mark(er.hi);
        mark(t.mi.lo);
        mark(t.mi.hi);
        if (finite(t.ni.lo)) consts.insert(t.ni.lo);
        if (finite(t.ni.hi)) consts.insert(t.ni.hi);
        diags.insert(t.dlo);
        if (finite(t.dhi)) diags.insert(t.dhi);
    }
    for (coord_t c : consts)
        for (coord_t g : diags) mark(c - g);

    std::vector<Strip> strips;
    if (bps.empty()) {
        strips.push_back({kNegInf, kPosInf, {}});
    } else {
        std::vector<coord_t> b(bps.begin(), bps.end());
        strips.push_back({kNegInf, b.front() - 1, {}});
        for (std::size_t i = 0; i < b.size(); ++i) {
            strips.push_back({b[i], b[i], {}});
            coord_t next = (i + 1 < b.size()) ? b[i + 1] : kPosInf;
            if (b[i] + 1 <= next - 1 && i + 1 < b.size()) strips.push_back({b[i] + 1, next - 1, {}});
        }
        strips.push_back({b.back() + 1, kPosInf, {}});
    }

    for (auto& s : strips) {
        coord_t rep = finite(s.mlo) ? s.mlo : (finite(s.mhi) ? s.mhi : 0);
        std::vector<Span> spans;
        for (const auto& t : parts) {
            IntInterval er = t.m_range();
            if (std::max(er.lo, s.mlo) > std::min(er.hi, s.mhi)) continue;
            // lower bound: max(ni.lo, m + dlo)
            NBound lo{};
            if (t.ni.lo >= sat_add(rep, t.dlo))
                lo = {false, t.ni.lo};
            else
                lo = {true, t.dlo};
            // upper bound: min(ni.hi, m + dhi); both infinite degrades to a constant +inf
            NBound hi{};
            coord_t diag_hi = sat_add(rep, t.dhi);
            if (t.ni.hi <= diag_hi)
                hi = {false, t.ni.hi};
            else
                hi = {true, t.dhi};
            Span sp{lo, hi, lo.diag ? sat_add(rep, lo.c) : lo.c, hi.diag ? sat_add(rep, hi.c) : hi.c};
            spans.push_back(sp);
        }
        std::sort(spans.begin(), spans.end(), [](const Span& a, const Span& b) {
            return a.lo_val != b.lo_val ? a.lo_val < b.lo_val : a.hi_val < b.hi_val;
        });
        for (const auto& sp : spans) {
            if (!s.spans.empty() && sp.lo_val <= sat_add(s.spans.back().hi_val, 1)) {
                if (sp.hi_val > s.spans.back().hi_val) {
                    s.spans.back().hi = sp.hi;
                    s.spans.back().hi_val = sp.hi_val;
                }
            } else {
                s.spans.push_back(sp);
            }
        }
    }
    return strips;
}

void emit_span(std::vector<Trapezoid>& out, const Strip& s, const Span& sp) {
    auto t = make_part(IntInterval(s.mlo, s.mhi),
                       IntInterval(sp.lo.diag ? kNegInf : sp.lo.c, sp.hi.diag ? kPosInf : sp.hi.c),
                       sp.lo.diag ? sp.lo.c : 2, sp.hi.diag ? sp.hi.c : kPosInf);
    if (t) out.push_back(*t);
}

// Runs the per-strip emitter and fuses runs of adjacent strips whose emitted
// parts agree in everything but the m-interval, so e.g. a half-plane comes out
// as one trapezoid instead of one sliver per strip.
template <class EmitStrip>
std::vector<Trapezoid> sweep_merge(const std::vector<Trapezoid>& parts, EmitStrip&& emit) {
    std::vector<Trapezoid> out;
    std::size_t run_begin = 0;
    std::size_t run_count = 0;
    bool have_run = false;
    coord_t run_mhi = 0;
    for (const auto& s : strip_profile(parts)) {
        std::vector<Trapezoid> cur;
        emit(s, cur);
        bool fuse = have_run && run_count == cur.size() && finite(run_mhi) &&
                    run_mhi + 1 == s.mlo;
        for (std::size_t i = 0; fuse && i < cur.size(); ++i) {
            const Trapezoid &a = out[run_begin + i], &b = cur[i];
            fuse = a.ni == b.ni && a.dlo == b.dlo && a.dhi == b.dhi;
        }
        if (fuse) {
            for (std::size_t i = 0; i < cur.size(); ++i) out[run_begin + i].mi.hi = s.mhi;
            run_mhi = s.mhi;
        } else if (!cur.empty()) {
            run_begin = out.size();
            run_count = cur.size();
            out.insert(out.end(), cur.begin(), cur.end());
            have_run = true;
            run_mhi = s.mhi;
        } else {
            have_run = false;
        }
    }
    return out;
}

}  // namespace

ArcRegion normalize(const ArcRegion& r) {
    return ArcRegion(sweep_merge(r.parts(), [](const Strip& s, std::vector<Trapezoid>& out) {
        for (const auto& sp : s.spans) emit_span(out, s, sp);
    }));
}

ArcRegion complement(const ArcRegion& r) {
    return ArcRegion(sweep_merge(r.parts(), [](const Strip& s, std::vector<Trapezoid>& out) {
        IntInterval strip(s.mlo, s.mhi);
        // below the first span (always bounded below by the universe diagonal)
        if (s.spans.empty()) {
            if (auto t = make_part(strip, IntInterval::all(), 2, kPosInf)) out.push_back(*t);
            return;
        }
        {
            const NBound& first = s.spans.front().lo;
            auto t = first.diag ? make_part(strip, IntInterval::all(), 2, first.c - 1)
                                : make_part(strip, IntInterval::at_most(first.c - 1), 2, kPosInf);
            if (t) out.push_back(*t);
        }
        for (std::size_t i = 0; i + 1 < s.spans.size(); ++i) {
            const NBound& above = s.spans[i].hi;
            const NBound& below = s.spans[i + 1].lo;
            auto t = make_part(
                IntInterval(strip),
                IntInterval(above.diag ? kNegInf : above.c + 1, below.diag ? kPosInf : below.c - 1),
                above.diag ? above.c + 1 : 2, below.diag ? below.c - 1 : kPosInf);
            if (t) out.push_back(*t);
        }
        {
            const NBound& last = s.spans.back().hi;
            if (!last.diag && last.c >= kPosInf) {
                // span already reaches +inf; nothing above it
            } else {
                auto t = last.diag ? make_part(strip, IntInterval::all(), last.c + 1, kPosInf)
                                   : make_part(strip, IntInterval::at_least(last.c + 1), 2, kPosInf);
                if (t) out.push_back(*t);
            }
        }
    }));
}

ArcRegion union_of(const ArcRegion& r, const ArcRegion& s) {
    std::vector<Trapezoid> parts = r.parts();
    parts.insert(parts.end(), s.parts().begin(), s.parts().end());
    return ArcRegion(std::move(parts));
}

ArcRegion intersect(const ArcRegion& r, const ArcRegion& s) {
    std::vector<Trapezoid> out;
    for (const auto& a : r.parts()) {
        for (const auto& b : s.parts()) {
            auto t = make_part(intersect(a.mi, b.mi), intersect(a.ni, b.ni),
                               std::max(a.dlo, b.dlo), std::min(a.dhi, b.dhi));
            if (t) out.push_back(*t);
        }
    }
    return ArcRegion(std::move(out));
}

ArcRegion difference(const ArcRegion& r, const ArcRegion& s) {
    return intersect(r, complement(s));
}

bool is_empty(const ArcRegion& r) { return r.parts().empty(); }

bool is_subset(const ArcRegion& r, const ArcRegion& s) { return is_empty(difference(r, s)); }

bool equals(const ArcRegion& r, const ArcRegion& s) {
    return is_subset(r, s) && is_subset(s, r);
}

ArcRegion shift_region(const ArcRegion& r, coord_t k) {
    std::vector<Trapezoid> out;
    out.reserve(r.parts().size());
    for (const auto& t : r.parts())
        out.emplace_back(t.mi.shifted(-k), t.ni.shifted(-k), t.dlo, t.dhi);
    return ArcRegion(std::move(out));
}

ArcRegion mirror_region(const ArcRegion& r) {
    std::vector<Trapezoid> out;
    out.reserve(r.parts().size());
    for (const auto& t : r.parts())
        out.emplace_back(t.ni.negated(), t.mi.negated(), t.dlo, t.dhi);
    return ArcRegion(std::move(out));
}

std::vector<Arc> enumerate_window(const ArcRegion& r, const Window& w) {
    std::set<Arc> seen;
    for (const auto& t : r.parts()) {
        IntInterval er = t.m_range();
        coord_t mlo = std::max(er.lo, w.lo);
        coord_t mhi = std::min({er.hi, w.hi - 2, sat_sub(w.hi, t.dlo)});
        for (coord_t m = mlo; m <= mhi; ++m) {
            coord_t nlo = std::max({t.ni.lo, sat_add(m, t.dlo), m + 2});
            coord_t nhi = std::min({t.ni.hi, sat_add(m, t.dhi), w.hi});
            for (coord_t n = nlo; n <= nhi; ++n) seen.insert(Arc(m, n));
        }
    }
    return {seen.begin(), seen.end()};
}

bool is_finite(const ArcRegion& r) {
    for (const auto& t : r.parts()) {
        IntInterval er = t.m_range();
        if (!finite(er.lo) || !finite(er.hi)) return false;
        if (!finite(t.ni.hi) && !finite(t.dhi)) return false;
    }
    return true;
}

std::vector<Arc> enumerate_all(const ArcRegion& r, std::size_t cap) {
    if (!is_finite(r)) throw precondition_error("cannot enumerate an infinite region");
    std::set<Arc> seen;
    for (const auto& t : r.parts()) {
        IntInterval er = t.m_range();
        for (coord_t m = er.lo; m <= er.hi; ++m) {
            coord_t nlo = std::max(t.ni.lo, sat_add(m, t.dlo));
            coord_t nhi = std::min(t.ni.hi, sat_add(m, t.dhi));
            for (coord_t n = nlo; n <= nhi; ++n) {
                seen.insert(Arc(m, n));
                if (seen.size() > cap) throw precondition_error("region too large to enumerate");
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<Arc> sample_arc(const ArcRegion& r) {
    if (r.parts().empty()) return std::nullopt;
    const Trapezoid& t = r.parts().front();
    IntInterval er = t.m_range();
    coord_t m = std::min(std::max<coord_t>(0, er.lo), er.hi);
    coord_t n = std::max(t.ni.lo, sat_add(m, t.dlo));
    return Arc(m, n);
}

coord_t max_abs_constant(const ArcRegion& r) {
    coord_t best = 2;
    auto consider = [&](coord_t v) {
        if (finite(v)) best = std::max(best, v < 0 ? -v : v);
    };
    for (const auto& t : r.parts()) {
        consider(t.mi.lo);
        consider(t.mi.hi);
        consider(t.ni.lo);
        consider(t.ni.hi);
        consider(t.dlo);
        consider(t.dhi);
    }
    return best;
}

ArcRegion lower_region(coord_t b) {
    return ArcRegion::single(Trapezoid(IntInterval::all(), IntInterval::at_most(b)));
}

ArcRegion upper_region(coord_t a) {
    return ArcRegion::single(Trapezoid(IntInterval::at_least(a), IntInterval::all()));
}

ArcRegion hammock_from(const Arc& x) {
    return ArcRegion({
        Trapezoid(IntInterval(x.m, x.n - 2), IntInterval::at_least(x.n)),
        Trapezoid(IntInterval::at_most(x.m - 2), IntInterval(x.m, x.n - 2)),
    });
}

ArcRegion hammock_to(const Arc& x) {
    return ArcRegion({
        Trapezoid(IntInterval::at_most(x.m), IntInterval(x.m + 2, x.n)),
        Trapezoid(IntInterval(x.m + 2, x.n), IntInterval::at_least(x.n + 2)),
    });
}

std::optional<coord_t> max_left_endpoint(const ArcRegion& r, coord_t c, coord_t pmax) {
    std::optional<coord_t> best;
    for (const auto& t : r.parts()) {
        if (!t.ni.contains(c)) continue;
        coord_t hi = std::min({t.mi.hi, c - t.dlo, pmax});
        coord_t lo = std::max(t.mi.lo, sat_sub(c, t.dhi));
        if (lo > hi) continue;
        if (!best || hi > *best) best = hi;
    }
    return best;
}

}  // namespace arcline
