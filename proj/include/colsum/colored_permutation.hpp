#pragma once

#include <string>
#include <vector>

#include "colsum/partition.hpp"

namespace colsum {

// (z_1..z_n; sigma) in G(r,1,n), letters 0-based. Acting on coloured letters,
// (z; sigma) sends letter i of colour c to letter sigma(i) of colour c + z_{sigma(i)},
// which gives the product rule (z; s)(z'; s') = (z + z' o s^{-1}; s s').
class ColoredPermutation {
public:
    ColoredPermutation(int r, std::vector<int> colors, std::vector<int> perm);
    static ColoredPermutation identity(int r, int n);

    int r() const noexcept { return r_; }
    int n() const noexcept { return static_cast<int>(perm_.size()); }
    const std::vector<int>& colors() const noexcept { return colors_; }
    const std::vector<int>& perm() const noexcept { return perm_; }

    ColoredPermutation operator*(const ColoredPermutation& o) const;
    ColoredPermutation inverse() const;
    // Negate every colour.
    ColoredPermutation bar() const;
    ColoredPermutation square() const { return *this * *this; }
    ColoredPermutation abs_square() const { return *this * bar(); }
    ColoredPermutation conjugate_by(const ColoredPermutation& g) const { return g * *this * g.inverse(); }

    // Each sigma-cycle gets the colour sum of its letters.
    RPartiteType cycle_type() const;
    int color_sum() const noexcept;
    bool is_identity() const noexcept;

    std::string to_string() const;

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    int r_;
    std::vector<int> colors_;
    std::vector<int> perm_;
};

}  // namespace colsum
