#include "cpf/cli.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "cpf/json_io.hpp"
#include "cpf/potential.hpp"

namespace cpf::cli {

using nlohmann::json;

namespace {

std::vector<std::string> axis_names(std::size_t mu) {
    std::vector<std::string> names;
    names.reserve(mu + 1);
    for (std::size_t i = 1; i <= mu; ++i) names.push_back("t" + std::to_string(i));
    names.emplace_back("x");
    return names;
}

ColoredBraid parse_closed(const Invocation& inv) {
    ColoredBraid b = ColoredBraid::parse(inv.braid, inv.colors);
    if (!b.is_closed())
        throw std::invalid_argument(
            "braid is not closed-colorable: top colors differ from bottom colors");
    return b;
}

int run_compute(const Invocation& inv, std::ostream& out) {
    const ColoredBraid b = parse_closed(inv);
    const Potential p = potential_function(b);
    switch (inv.format) {
        case Format::text:
            out << "∇ = " << p.to_text() << "\n";
            break;
        case Format::json:
            out << json{{"braid", braid_to_json(b)}, {"potential", potential_to_json(p)}}.dump()
                << "\n";
            break;
        case Format::latex:
            if (p.kind == PotentialKind::knot_fraction)
                out << "\\nabla = \\frac{" << p.value.to_latex() << "}{t_{" << p.knot_color
                    << "} - t_{" << p.knot_color << "}^{-1}}\n";
            else
                out << "\\nabla = " << p.value.to_latex() << "\n";
            break;
    }
    return 0;
}

int run_axis(const Invocation& inv, std::ostream& out) {
    const ColoredBraid b = parse_closed(inv);
    const LaurentPoly p = axis_potential(b);
    const auto names = axis_names(static_cast<std::size_t>(b.color_count()));
    switch (inv.format) {
        case Format::text:
            out << "∇ = " << p.to_text(names) << "\n";
            break;
        case Format::json:
            out << json{{"braid", braid_to_json(b)}, {"axis_potential", laurent_to_json(p)}}.dump()
                << "\n";
            break;
        case Format::latex:
            out << "\\nabla = " << p.to_latex(names) << "\n";
            break;
    }
    return 0;
}

int run_verify(const Invocation& inv, std::ostream& out) {
    std::vector<verify::CheckReport> reports;
    if (inv.checks.empty()) {
        reports = verify::run_all(inv.config);
    } else {
        for (const auto& name : inv.checks) reports.push_back(verify::run_check(name, inv.config));
    }
    bool all_passed = true;
    json checks = json::array();
    for (const auto& r : reports) {
        all_passed = all_passed && r.passed();
        checks.push_back(report_to_json(r));
    }
    out << json{{"seed", inv.config.seed}, {"checks", std::move(checks)}, {"passed", all_passed}}
               .dump()
        << "\n";
    return all_passed ? 0 : 1;
}

int run_batch(std::istream& in, std::ostream& out) {
    std::string line;
    bool any_error = false;
    while (std::getline(in, line)) {
        if (std::ranges::all_of(line, [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            continue;
        json result;
        try {
            const json task = json::parse(line);
            const std::string braid = task.at("braid").get<std::string>();
            const std::string colors = task.at("colors").get<std::string>();
            ColoredBraid b = ColoredBraid::parse(braid, colors);
            if (!b.is_closed())
                throw std::invalid_argument("braid is not closed-colorable");
            result = {{"braid", braid},
                      {"colors", colors},
                      {"potential", potential_to_json(potential_function(b))}};
        } catch (const std::exception& e) {
            result = {{"error", e.what()}, {"line", line}};
            any_error = true;
        }
        out << result.dump() << "\n";
    }
    return any_error ? 1 : 0;
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "latex") return Format::latex;
    throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

int run(const Invocation& inv, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (inv.command) {
            case Invocation::Command::compute:
                return run_compute(inv, out);
            case Invocation::Command::axis:
                return run_axis(inv, out);
            case Invocation::Command::verify:
                return run_verify(inv, out);
            case Invocation::Command::batch:
                return run_batch(in, out);
        }
    } catch (const NotDivisibleError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cpf::cli
