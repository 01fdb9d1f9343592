#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "arcline/classify.hpp"
#include "arcline/dsl.hpp"
#include "arcline/errors.hpp"
#include "arcline/oracle.hpp"
#include "arcline/ort.hpp"
#include "arcline/render.hpp"
#include "arcline/report.hpp"

using namespace arcline;

namespace {

std::string region_source(const std::string& given) {
    if (!given.empty() && given[0] == '@') {
        std::ifstream in(given.substr(1));
        if (!in) throw parse_error("cannot read region file '" + given.substr(1) + "'", 0, 0);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return given;
}

Arc parse_object(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto want = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c)
            throw parse_error(std::string("expected '") + c + "' in object arc", 1,
                              static_cast<int>(i) + 1);
        ++i;
    };
    auto integer = [&]() {
        skip();
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(text.substr(i), &used);
        } catch (const std::exception&) {
            throw parse_error("expected an integer in object arc", 1, static_cast<int>(i) + 1);
        }
        i += used;
        return v;
    };
    want('(');
    long long m = integer();
    want(',');
    long long n = integer();
    want(')');
    skip();
    if (i != text.size())
        throw parse_error("trailing characters after object arc", 1, static_cast<int>(i) + 1);
    try {
        return Arc(m, n);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 1, 1);
    }
}

Window parse_window(const std::string& text) {
    auto dots = text.find("..", 1);  // skip a leading '-'
    if (dots == std::string::npos) throw parse_error("window must look like LO..HI", 1, 1);
    try {
        long long lo = std::stoll(text.substr(0, dots));
        long long hi = std::stoll(text.substr(dots + 2));
        return Window(lo, hi);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad window '") + text + "': " + e.what(), 1, 1);
    } catch (const std::out_of_range&) {
        throw parse_error("window bounds out of range", 1, 1);
    }
}

void print_report(const Report& rep, const std::string& format) {
    std::cout << (format == "json" ? rep.json() : rep.text());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for arc configurations on the integer line"};
    app.require_subcommand(1);

    std::string region_text;
    std::string report_format = "text";
    std::string render_format = "ascii";
    std::string window_text = "-8..8";
    std::string object_text;
    std::uint64_t seed = 1;
    long long cases = 100;
    long long margin = 0;

    auto add_region = [&](CLI::App* sub) {
        sub->add_option("--region", region_text, "region in the arc DSL, or @file")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", report_format, "report format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* c_classify = app.add_subcommand("classify", "full classification report for a region");
    add_region(c_classify);
    add_format(c_classify);

    auto* c_ort = app.add_subcommand("ort", "arcs crossing nothing in the region");
    add_region(c_ort);
    auto* c_closure = app.add_subcommand("closure", "ort applied twice: the ort-closed hull");
    add_region(c_closure);
    auto* c_coaisle = app.add_subcommand("coaisle", "second member of the region's torsion pair");
    add_region(c_coaisle);

    auto* c_precover = app.add_subcommand("precover", "right approximation of an arc");
    add_region(c_precover);
    c_precover->add_option("--object", object_text, "target arc \"(m,n)\"")->required();
    auto* c_preenvelope = app.add_subcommand("preenvelope", "left approximation of an arc");
    add_region(c_preenvelope);
    c_preenvelope->add_option("--object", object_text, "target arc \"(m,n)\"")->required();

    auto* c_check = app.add_subcommand("check", "exercise the operator laws on a region");
    add_region(c_check);
    add_format(c_check);

    auto* c_render = app.add_subcommand("render", "draw the region on a number line");
    add_region(c_render);
    c_render->add_option("--window", window_text, "label range LO..HI");
    c_render->add_option("--format", render_format, "picture format")
        ->check(CLI::IsMember({"ascii", "svg"}));

    auto* c_oracle = app.add_subcommand("oracle", "differential test: symbolic engine vs brute force");
    c_oracle->add_option("--seed", seed, "base seed for the generated cases");
    c_oracle->add_option("--cases", cases, "cases per suite");
    c_oracle->add_option("--window", window_text, "comparison window LO..HI");
    c_oracle->add_option("--margin", margin, "extra brute-force margin (raised to the bound)");
    add_format(c_oracle);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        auto region = [&] { return parse_region(region_source(region_text)); };

        if (c_classify->parsed()) {
            print_report(to_report(classify_region(region())), report_format);
        } else if (c_ort->parsed()) {
            std::cout << print_region(ort(region())) << "\n";
        } else if (c_closure->parsed()) {
            std::cout << print_region(closure(region())) << "\n";
        } else if (c_coaisle->parsed()) {
            std::cout << print_region(right_perp(region())) << "\n";
        } else if (c_precover->parsed() || c_preenvelope->parsed()) {
            Arc x = parse_object(object_text);
            ArcRegion r = region();
            auto arcs = c_precover->parsed() ? precover_construct(r, x) : preenvelope_construct(r, x);
            for (const Arc& a : arcs) std::cout << to_string(a) << "\n";
        } else if (c_check->parsed()) {
            ArcRegion r = region();
            ArcRegion o1 = ort(r), o2 = ort(o1), o3 = ort(o2);
            Report rep;
            bool all_ok = true;
            auto law = [&](const char* name, bool ok) {
                rep.add(name, ok ? "ok" : "violated");
                all_ok = all_ok && ok;
            };
            law("ort_cube_equals_ort", equals(o3, o1));
            law("closure_extensive", is_subset(r, o2));
            law("closure_idempotent", equals(ort(o3), o2));
            law("suspension_commutes_with_ort", equals(ort(shift_region(r, 1)), shift_region(o1, 1)));
            law("perp_composition_is_closure", equals(left_perp(right_perp(r)), o2));
            law("mirror_involution", equals(mirror_region(mirror_region(r)), r));
            law("complement_involution", equals(complement(complement(r)), r));
            print_report(rep, report_format);
            if (!all_ok) {
                std::cerr << "internal error: an operator law failed on this region\n";
                return 3;
            }
        } else if (c_render->parsed()) {
            Window w = parse_window(window_text);
            ArcRegion r = region();
            std::cout << (render_format == "svg" ? render_svg(r, w) : render_ascii(r, w));
        } else if (c_oracle->parsed()) {
            OracleConfig cfg{parse_window(window_text), margin, seed, cases};
            AgreementSummary sum = agreement_report(cfg);
            print_report(to_report(sum), report_format);
            if (!sum.passed()) {
                std::cerr << "internal error: symbolic engine disagrees with the oracle\n";
                return 3;
            }
        }
        return 0;
    } catch (const parse_error& e) {
        std::cerr << "parse error";
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
        std::cerr << ": " << e.what() << "\n";
        if (e.expected.size() > 1) {
            std::cerr << "expected one of:";
            for (const auto& t : e.expected) std::cerr << " " << t;
            std::cerr << "\n";
        }
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const theorem_violation& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
