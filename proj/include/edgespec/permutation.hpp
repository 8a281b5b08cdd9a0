#pragma once

#include <map>
#include <span>
#include <vector>

#include "edgespec/graph.hpp"

namespace edgespec {

// Bijection of {0..n-1}. Composition convention: (s.compose(t))(x) = s(t(x)),
// so in a product the rightmost factor acts first.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);  // validates bijectivity
    static Permutation identity(int n);
    static Permutation transposition(Edge e, int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// tau_{e_1} ... tau_{e_r}, rightmost transposition applied first.
Permutation word_product(std::span<const Edge> word, int n);

struct CycleType {
    std::map<int, int> counts;  // cycle length -> multiplicity
    int n = 0;

    int fixed_points() const;  // c_1
    int two_cycles() const;    // c_2

    bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);

}  // namespace edgespec
