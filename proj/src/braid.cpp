#include "cpf/braid.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cpf {

ColorSeq::ColorSeq(std::vector<int> cols) : colors(std::move(cols)) {
    if (colors.empty()) throw std::invalid_argument("empty color list");
    int max_color = 0;
    for (int c : colors) {
        if (c < 1) throw std::invalid_argument("colors must be positive integers");
        max_color = std::max(max_color, c);
    }
    std::vector<bool> seen(static_cast<std::size_t>(max_color) + 1, false);
    for (int c : colors) seen[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= max_color; ++c)
        if (!seen[static_cast<std::size_t>(c)])
            throw std::invalid_argument("coloring is not surjective: color " +
                                        std::to_string(c) + " is missing");
    mu = max_color;
}

ColoredBraid::ColoredBraid(ColorSeq bottom, std::vector<Crossing> word)
    : bottom_(std::move(bottom)), word_(std::move(word)) {
    const int n = strand_count();
    for (const Crossing& x : word_) {
        if (x.sign != 1 && x.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        if (x.index < 1 || x.index >= n)
            throw std::invalid_argument("crossing index " + std::to_string(x.index) +
                                        " out of range for " + std::to_string(n) + " strands");
    }
    trace_.reserve(word_.size() + 1);
    trace_.push_back(bottom_.colors);
    std::vector<int> positions(static_cast<std::size_t>(n));
    std::iota(positions.begin(), positions.end(), 0);
    for (const Crossing& x : word_) {
        std::vector<int> next = trace_.back();
        std::swap(next[static_cast<std::size_t>(x.index - 1)],
                  next[static_cast<std::size_t>(x.index)]);
        trace_.push_back(std::move(next));
        std::swap(positions[static_cast<std::size_t>(x.index - 1)],
                  positions[static_cast<std::size_t>(x.index)]);
    }
    top_ = ColorSeq(trace_.back());
    perm_.assign(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p) perm_[static_cast<std::size_t>(positions[static_cast<std::size_t>(p)])] = p;
}

ColoredBraid ColoredBraid::parse(std::string_view braid_text, std::string_view colors_text) {
    std::vector<int> colors;
    {
        std::string token;
        std::istringstream is{std::string(colors_text)};
        while (std::getline(is, token, ',')) {
            const auto first = token.find_first_not_of(" \t");
            const auto last = token.find_last_not_of(" \t");
            if (first == std::string::npos)
                throw std::invalid_argument("empty color entry in '" + std::string(colors_text) + "'");
            token = token.substr(first, last - first + 1);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size() || value < 1)
                throw std::invalid_argument("bad color token '" + token + "'");
            colors.push_back(value);
        }
        if (colors.empty()) throw std::invalid_argument("empty color list");
    }

    std::vector<Crossing> word;
    {
        std::istringstream is{std::string(braid_text)};
        std::string token;
        while (is >> token) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc() || ptr != token.data() + token.size())
                throw std::invalid_argument("bad braid token '" + token + "'");
            if (value == 0)
                throw std::invalid_argument("bad braid token '0': generator index must be nonzero");
            word.push_back(Crossing{std::abs(value), value > 0 ? 1 : -1});
        }
    }
    return ColoredBraid(ColorSeq(std::move(colors)), std::move(word));
}

const std::vector<int>& ColoredBraid::state_before(std::size_t j) const {
    assert(j < trace_.size());
    return trace_[j];
}

std::string ColoredBraid::word_text() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < word_.size(); ++j) {
        if (j) os << ' ';
        os << word_[j].sign * word_[j].index;
    }
    return os.str();
}

std::string ColoredBraid::colors_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < bottom_.colors.size(); ++i) {
        if (i) os << ',';
        os << bottom_.colors[i];
    }
    return os.str();
}

ColoredBraid compose(const ColoredBraid& a, const ColoredBraid& b) {
    if (a.top() != b.bottom())
        throw std::invalid_argument("composition boundary colors do not match");
    std::vector<Crossing> word = a.word();
    word.insert(word.end(), b.word().begin(), b.word().end());
    return ColoredBraid(a.bottom(), std::move(word));
}

ColoredBraid include_strand(const ColoredBraid& a, int new_color) {
    if (new_color < 1) throw std::invalid_argument("colors must be positive integers");
    std::vector<int> cols = a.bottom().colors;
    cols.push_back(new_color);
    return ColoredBraid(ColorSeq(std::move(cols)), a.word());
}

LaurentPoly monomial_weight(const ColoredBraid& b) {
    const std::size_t mu = static_cast<std::size_t>(b.color_count());
    ExponentVec exps(mu, 0);
    for (std::size_t j = 0; j < b.word().size(); ++j) {
        const Crossing& x = b.word()[j];
        const auto& state = b.state_before(j);
        const int over = x.sign > 0 ? state[static_cast<std::size_t>(x.index - 1)]
                                    : state[static_cast<std::size_t>(x.index)];
        exps[static_cast<std::size_t>(over - 1)] -= x.sign;
    }
    return LaurentPoly::monomial(mu, std::move(exps), 1);
}

std::vector<int> ClosureInfo::axis_linking() const {
    std::vector<int> out;
    out.reserve(components.size());
    for (const auto& comp : components) out.push_back(comp.axis_linking);
    return out;
}

ClosureInfo closure_info(const ColoredBraid& b) {
    if (!b.is_closed())
        throw std::invalid_argument("closure_info requires a closed-colorable braid");
    const int n = b.strand_count();
    const auto& perm = b.perm();
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    ClosureInfo info;
    for (int start = 0; start < n; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ClosureComponent comp;
        comp.color = b.bottom().colors[static_cast<std::size_t>(start)];
        int cur = start;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            comp.strands.push_back(cur + 1);
            assert(b.bottom().colors[static_cast<std::size_t>(cur)] == comp.color &&
                   "mixed colors in one closure component");
            cur = perm[static_cast<std::size_t>(cur)];
        } while (cur != start);
        std::sort(comp.strands.begin(), comp.strands.end());
        comp.axis_linking = static_cast<int>(comp.strands.size());
        info.components.push_back(std::move(comp));
    }
    return info;
}

}  // namespace cpf
