#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace waring {

/// A permutation of {1, ..., d} in one-line notation.
class Perm {
   public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int d);
    static Perm transposition(int d, int a, int b);
    /// Builds a permutation from disjoint cycles, e.g. {{1, 2, 3}} for (1 2 3).
    static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    std::span<const int> images() const noexcept { return images_; }

    int sign() const;
    bool is_identity() const;
    Perm inverse() const;

    /// (a * b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b);
    friend auto operator<=>(const Perm&, const Perm&) = default;
    friend bool operator==(const Perm&, const Perm&) = default;

    std::string to_string() const;

   private:
    std::vector<int> images_;
};

/// All of S_d in lexicographic order of the one-line notation.
std::vector<Perm> all_permutations(int d);

}  // namespace waring
