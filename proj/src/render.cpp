#include "arcline/render.hpp"

#include <algorithm>
#include <sstream>

#include "arcline/errors.hpp"
#include "arcline/ort.hpp"

namespace arcline {

namespace {

constexpr coord_t kAsciiLimit = 200;

struct Marks {
    std::vector<coord_t> left, right;  // fountain labels inside the window
};

Marks window_marks(const ArcRegion& r, const Window& w) {
    FountainProfile fp = fountains(r);
    Marks m;
    for (coord_t e = w.lo; e <= w.hi; ++e) {
        if (fp.left.contains(e)) m.left.push_back(e);
        if (fp.right.contains(e)) m.right.push_back(e);
    }
    return m;
}

std::string joined(const std::vector<coord_t>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vs[i]);
    }
    return s;
}

}  // namespace

std::string render_ascii(const ArcRegion& r, const Window& w) {
    if (w.hi - w.lo + 1 > kAsciiLimit)
        throw precondition_error("window too wide for ascii rendering (limit 200 integers)");

    std::size_t label_w = 1;
    for (coord_t i = w.lo; i <= w.hi; ++i)
        label_w = std::max(label_w, std::to_string(i).size());
    const std::size_t field = label_w + 2;
    auto anchor = [&](coord_t i) {
        return static_cast<std::size_t>(i - w.lo) * field + label_w - 1;
    };
    const std::size_t width = anchor(w.hi) + 1;

    std::vector<Arc> arcs = enumerate_window(r, w);
    Marks marks = window_marks(r, w);

    coord_t rows = 0;
    for (const Arc& a : arcs) rows = std::max(rows, a.n - a.m - 1);
    for (coord_t e : marks.left) rows = std::max(rows, e - w.lo + 1);
    for (coord_t e : marks.right) rows = std::max(rows, w.hi - e + 1);

    // grid[0] is the row just above the axis
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(width, ' '));
    auto put = [&](coord_t row, std::size_t col, char c) {
        grid[static_cast<std::size_t>(row - 1)][col] = c;
    };

    for (const Arc& a : arcs) {
        coord_t h = a.n - a.m - 1;
        std::size_t ca = anchor(a.m), cb = anchor(a.n);
        put(h, ca, '.');
        put(h, cb, '.');
        for (std::size_t c = ca + 1; c < cb; ++c) put(h, c, '-');
        for (coord_t row = 1; row < h; ++row) {
            put(row, ca, '|');
            put(row, cb, '|');
        }
    }
    for (coord_t e : marks.left) {
        coord_t h = e - w.lo + 1;
        std::size_t ce = anchor(e);
        for (std::size_t c = 0; c < ce; ++c) put(h, c, '~');
        put(h, ce, '.');
        for (coord_t row = 1; row < h; ++row) put(row, ce, '|');
    }
    for (coord_t e : marks.right) {
        coord_t h = w.hi - e + 1;
        std::size_t ce = anchor(e);
        for (std::size_t c = ce + 1; c < width; ++c) put(h, c, '~');
        put(h, ce, '.');
        for (coord_t row = 1; row < h; ++row) put(row, ce, '|');
    }

    std::string ticks(width, '-');
    for (coord_t i = w.lo; i <= w.hi; ++i) ticks[anchor(i)] = '+';

    std::string labels(width, ' ');
    for (coord_t i = w.lo; i <= w.hi; ++i) {
        std::string t = std::to_string(i);
        std::size_t end = anchor(i) + 1;
        labels.replace(end - t.size(), t.size(), t);
    }

    std::string out;
    auto emit = [&](std::string line) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    };
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) emit(*it);
    emit(ticks);
    emit(labels);
    if (!marks.left.empty()) emit("left fountains: " + joined(marks.left));
    if (!marks.right.empty()) emit("right fountains: " + joined(marks.right));
    return out;
}

std::string render_svg(const ArcRegion& r, const Window& w) {
    const coord_t span = w.hi - w.lo;
    const coord_t step = 30;
    const coord_t margin = 70;
    auto x = [&](coord_t i) { return margin + (i - w.lo) * step; };
    const coord_t baseline = step * (span + 2) / 2 + 20;
    const coord_t width = 2 * margin + span * step;
    const coord_t height = baseline + 70;

    std::vector<Arc> arcs = enumerate_window(r, w);
    Marks marks = window_marks(r, w);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "  <line x1=\"" << x(w.lo) - 20 << "\" y1=\"" << baseline << "\" x2=\"" << x(w.hi) + 20
        << "\" y2=\"" << baseline << "\" stroke=\"#444\"/>\n";
    for (coord_t i = w.lo; i <= w.hi; ++i) {
        svg << "  <line x1=\"" << x(i) << "\" y1=\"" << baseline - 4 << "\" x2=\"" << x(i)
            << "\" y2=\"" << baseline + 4 << "\" stroke=\"#444\"/>\n";
        svg << "  <text x=\"" << x(i) << "\" y=\"" << baseline + 22
            << "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"middle\">" << i
            << "</text>\n";
    }
    auto cap = [&](coord_t a, coord_t b, const char* extra) {
        coord_t rad = (b - a) * step / 2;
        svg << "  <path d=\"M " << x(a) << " " << baseline << " A " << rad << " " << rad
            << " 0 0 1 " << x(b) << " " << baseline << "\" fill=\"none\" stroke=\"#1a6fb4\""
            << extra << "/>\n";
    };
    for (const Arc& a : arcs) cap(a.m, a.n, " stroke-width=\"1.5\"");
    for (coord_t e : marks.left) cap(w.lo - 2, e, " stroke-dasharray=\"6 4\"");
    for (coord_t e : marks.right) cap(e, w.hi + 2, " stroke-dasharray=\"6 4\"");
    coord_t note_y = baseline + 42;
    if (!marks.left.empty()) {
        svg << "  <text x=\"" << margin - 50 << "\" y=\"" << note_y
            << "\" font-family=\"monospace\" font-size=\"13\">left fountains: "
            << joined(marks.left) << "</text>\n";
        note_y += 18;
    }
    if (!marks.right.empty()) {
        svg << "  <text x=\"" << margin - 50 << "\" y=\"" << note_y
            << "\" font-family=\"monospace\" font-size=\"13\">right fountains: "
            << joined(marks.right) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace arcline
