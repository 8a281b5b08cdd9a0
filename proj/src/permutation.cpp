#include "edgespec/permutation.hpp"

#include <numeric>

#include "edgespec/errors.hpp"

namespace edgespec {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            throw MalformedInput("image sequence is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(Edge e, int n) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) throw MalformedInput("transposition indices out of range");
    Permutation p = identity(n);
    std::swap(p.images_[e.u], p.images_[e.v]);
    return p;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (size() != rhs.size()) throw MalformedInput("composing permutations of different sizes");
    std::vector<int> img(images_.size());
    for (size_t x = 0; x < img.size(); ++x) img[x] = images_[rhs.images_[x]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (size_t x = 0; x < img.size(); ++x) img[images_[x]] = static_cast<int>(x);
    return Permutation(std::move(img));
}

Permutation word_product(std::span<const Edge> word, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    // appending tau on the right swaps the entries at its two indices
    for (const Edge& e : word) {
        if (e.u < 0 || e.v >= n || e.u >= e.v) throw MalformedInput("word edge out of range");
        std::swap(img[e.u], img[e.v]);
    }
    return Permutation(std::move(img));
}

int CycleType::fixed_points() const {
    auto it = counts.find(1);
    return it == counts.end() ? 0 : it->second;
}

int CycleType::two_cycles() const {
    auto it = counts.find(2);
    return it == counts.end() ? 0 : it->second;
}

CycleType cycle_type(const Permutation& p) {
    CycleType ct;
    ct.n = p.size();
    std::vector<bool> seen(p.size(), false);
    for (int start = 0; start < p.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int x = start; !seen[x]; x = p(x)) {
            seen[x] = true;
            ++len;
        }
        ++ct.counts[len];
    }
    return ct;
}

}  // namespace edgespec
