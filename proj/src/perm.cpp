#include "waring/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "waring/errors.hpp"

namespace waring {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    const int d = size();
    std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
    for (const int v : images_) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v)]) throw DomainError("Perm: not a bijection on [1,d]");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Perm Perm::identity(int d) {
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    return Perm(std::move(images));
}

Perm Perm::transposition(int d, int a, int b) {
    return from_cycles(d, {{a, b}});
}

Perm Perm::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    for (const auto& cycle : cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int from = cycle[k];
            const int to = cycle[(k + 1) % cycle.size()];
            if (from < 1 || from > d) throw DomainError("Perm::from_cycles: entry out of range");
            images[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Perm(std::move(images));
}

int Perm::sign() const {
    std::vector<bool> visited(images_.size(), false);
    int transpositions = 0;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) continue;
        std::size_t len = 0;
        for (std::size_t i = start; !visited[i]; i = static_cast<std::size_t>(images_[i] - 1)) {
            visited[i] = true;
            ++len;
        }
        transpositions += static_cast<int>(len) - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

bool Perm::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw DomainError("Perm: composing permutations of different degree");
    std::vector<int> out(a.images_.size());
    for (int i = 1; i <= a.size(); ++i) out[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Perm(std::move(out));
}

std::string Perm::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < images_.size(); ++i) out << (i ? "," : "") << images_[i];
    out << "]";
    return out.str();
}

std::vector<Perm> all_permutations(int d) {
    if (d < 0) throw DomainError("all_permutations: negative degree");
    std::vector<Perm> out;
    std::vector<int> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace waring
