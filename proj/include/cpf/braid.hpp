// Colored braid words: parsing, color propagation, composition, strand
// inclusion, closure analysis and the crossing-weight monomial.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpf/laurent.hpp"

namespace cpf {

/// Colors of the n strand endpoints at one boundary, values in {1..mu}.
/// Every color in {1..mu} must occur at least once.
struct ColorSeq {
    std::vector<int> colors;
    int mu = 0;

    ColorSeq() = default;
    explicit ColorSeq(std::vector<int> cols);

    std::size_t size() const { return colors.size(); }
    bool operator==(const ColorSeq&) const = default;
};

/// One letter sigma_index^sign of a braid word, 1 <= index <= n-1.
struct Crossing {
    int index = 1;
    int sign = 1;
    bool operator==(const Crossing&) const = default;
};

/// A word of signed generators together with the color sequence at the word's
/// source boundary ("bottom"). Reading the word left to right walks from the
/// bottom to the top boundary; the per-letter color states and the strand
/// permutation are derived at construction and cached.
class ColoredBraid {
public:
    ColoredBraid(ColorSeq bottom, std::vector<Crossing> word);

    /// Parses whitespace-separated nonzero integers (sign = crossing sign,
    /// magnitude = generator index) plus a comma-separated color list.
    static ColoredBraid parse(std::string_view braid_text, std::string_view colors_text);

    int strand_count() const { return static_cast<int>(bottom_.size()); }
    int color_count() const { return bottom_.mu; }
    const std::vector<Crossing>& word() const { return word_; }
    const ColorSeq& bottom() const { return bottom_; }
    const ColorSeq& top() const { return top_; }
    /// Colors at the source of letter j (j == word().size() gives the top).
    const std::vector<int>& state_before(std::size_t j) const;
    /// perm()[i] is the 0-based top position of the strand entering bottom
    /// position i; equals the composition of the letters' transpositions.
    const std::vector<int>& perm() const { return perm_; }
    bool is_closed() const { return top_ == bottom_; }

    std::string word_text() const;
    std::string colors_text() const;
    bool operator==(const ColoredBraid&) const = default;

private:
    ColorSeq bottom_;
    std::vector<Crossing> word_;
    std::vector<std::vector<int>> trace_;
    ColorSeq top_;
    std::vector<int> perm_;
};

/// Concatenation a then b; requires a.top() == b.bottom().
ColoredBraid compose(const ColoredBraid& a, const ColoredBraid& b);

/// Disjoint union with one trivial strand of the given color appended.
ColoredBraid include_strand(const ColoredBraid& a, int new_color);

/// The crossing-weight monomial: the product over letters of t_b^{-sign}
/// where b is the color of the over-crossing strand (position index for a
/// positive letter, position index+1 for a negative one). Multiplicative
/// under composition.
LaurentPoly monomial_weight(const ColoredBraid& b);

struct ClosureComponent {
    std::vector<int> strands;  // 1-based bottom positions, ascending
    int color = 0;
    int axis_linking = 0;  // linking number with the braid axis = strand count
};

struct ClosureInfo {
    std::vector<ClosureComponent> components;
    int component_count() const { return static_cast<int>(components.size()); }
    std::vector<int> axis_linking() const;
};

/// Cycle decomposition of the closure of a (c,c)-braid.
ClosureInfo closure_info(const ColoredBraid& b);

}  // namespace cpf
