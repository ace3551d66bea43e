#include "cpf/json_io.hpp"

namespace cpf {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", c.str()}, {"exp", e}});
    return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const json& j) {
    const auto nvars = j.at("nvars").get<std::size_t>();
    LaurentPoly p(nvars);
    for (const auto& term : j.at("terms")) {
        const Coeff c(term.at("coeff").get<std::string>());
        auto e = term.at("exp").get<ExponentVec>();
        p += LaurentPoly::monomial(nvars, std::move(e), c);
    }
    return p;
}

json gassner_to_json(const GassnerMatrix& g) {
    json entries = json::array();
    for (std::size_t r = 0; r < g.mat.rows(); ++r)
        for (std::size_t c = 0; c < g.mat.cols(); ++c) entries.push_back(laurent_to_json(g.mat.at(r, c)));
    return {{"size", g.mat.rows()},
            {"source", g.source.colors},
            {"target", g.target.colors},
            {"entries", std::move(entries)}};
}

json potential_to_json(const Potential& p) {
    return {{"components", p.components},
            {"kind", p.kind == PotentialKind::polynomial ? "polynomial" : "knot_fraction"},
            {"value", laurent_to_json(p.value)},
            {"denominator", p.denominator_text()}};
}

json braid_to_json(const ColoredBraid& b) {
    std::vector<int> word;
    word.reserve(b.word().size());
    for (const Crossing& x : b.word()) word.push_back(x.sign * x.index);
    std::vector<int> perm;
    perm.reserve(b.perm().size());
    for (int p : b.perm()) perm.push_back(p + 1);
    json out{{"word", std::move(word)},
             {"bottom", b.bottom().colors},
             {"top", b.top().colors},
             {"perm", std::move(perm)}};
    if (b.is_closed()) out["components"] = closure_info(b).component_count();
    return out;
}

json report_to_json(const verify::CheckReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"seed", f.seed},
                            {"input", f.input},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    return {{"name", r.name},
            {"trials", r.trials},
            {"failures", std::move(failures)},
            {"passed", r.passed()}};
}

}  // namespace cpf
