#include "colsum/colored_permutation.hpp"

#include <stdexcept>

namespace colsum {

ColoredPermutation::ColoredPermutation(int r, std::vector<int> colors, std::vector<int> perm)
    : r_(r), colors_(std::move(colors)), perm_(std::move(perm)) {
    if (r < 1) throw std::invalid_argument("colour modulus must be >= 1");
    if (colors_.size() != perm_.size()) throw std::invalid_argument("colour and permutation lengths differ");
    std::vector<bool> seen(perm_.size(), false);
    for (int v : perm_) {
        if (v < 0 || v >= n() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("image array is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int c : colors_)
        if (c < 0 || c >= r_) throw std::invalid_argument("colour outside [0, r)");
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    return ColoredPermutation(r, std::vector<int>(static_cast<std::size_t>(n), 0), std::move(perm));
}

ColoredPermutation ColoredPermutation::operator*(const ColoredPermutation& o) const {
    if (o.r_ != r_ || o.n() != n()) throw std::invalid_argument("multiplying elements of different groups");
    const int m = n();
    std::vector<int> inv(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) inv[perm_[i]] = i;
    std::vector<int> colors(static_cast<std::size_t>(m)), perm(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        colors[j] = (colors_[j] + o.colors_[inv[j]]) % r_;
        perm[j] = perm_[o.perm_[j]];
    }
    return ColoredPermutation(r_, std::move(colors), std::move(perm));
}

ColoredPermutation ColoredPermutation::inverse() const {
    const int m = n();
    std::vector<int> colors(static_cast<std::size_t>(m)), perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        perm[perm_[i]] = i;
        colors[i] = (r_ - colors_[perm_[i]]) % r_;
    }
    return ColoredPermutation(r_, std::move(colors), std::move(perm));
}

ColoredPermutation ColoredPermutation::bar() const {
    std::vector<int> colors(colors_.size());
    for (std::size_t i = 0; i < colors_.size(); ++i) colors[i] = (r_ - colors_[i]) % r_;
    return ColoredPermutation(r_, std::move(colors), perm_);
}

RPartiteType ColoredPermutation::cycle_type() const {
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(r_));
    std::vector<bool> seen(perm_.size(), false);
    for (int start = 0; start < n(); ++start) {
        if (seen[start]) continue;
        int len = 0, color = 0;
        for (int i = start; !seen[i]; i = perm_[i]) {
            seen[i] = true;
            ++len;
            color = (color + colors_[i]) % r_;
        }
        parts[static_cast<std::size_t>(color)].push_back(len);
    }
    std::vector<Partition> comps;
    comps.reserve(parts.size());
    for (auto& p : parts) comps.push_back(Partition::from_unsorted(std::move(p)));
    return RPartiteType(r_, std::move(comps));
}

int ColoredPermutation::color_sum() const noexcept {
    int s = 0;
    for (int c : colors_) s = (s + c) % r_;
    return s;
}

bool ColoredPermutation::is_identity() const noexcept {
    for (int i = 0; i < n(); ++i)
        if (perm_[i] != i || colors_[i] != 0) return false;
    return true;
}

std::string ColoredPermutation::to_string() const {
    std::string out = "(";
    for (int i = 0; i < n(); ++i) out += (i ? "," : "") + std::to_string(colors_[i]);
    out += ";";
    for (int i = 0; i < n(); ++i) out += (i ? "," : "") + std::to_string(perm_[i] + 1);
    return out + ")";
}

}  // namespace colsum
