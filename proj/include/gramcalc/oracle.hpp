#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gramcalc/bigint.hpp"
#include "gramcalc/polynomial.hpp"

namespace gramcalc {

// Statistics of a permutation of [n] read with padded boundary zeros
// sigma_0 = sigma_{n+1} = 0, so every one of the n+1 adjacent pairs is
// either an ascent or a descent and des + asc = n + 1.
struct PermutationStats {
    int n = 0;
    int des = 0;
    int asc = 0;
};

// Statistics of a Stirling permutation of the multiset {1,1,...,n,n}, read
// with padded boundary zeros; each of the 2n+1 adjacent pairs is an ascent,
// a descent, or a plateau, so des + asc + plat = 2n + 1.
struct StirlingStats {
    int n = 0;
    int des = 0;
    int asc = 0;
    int plat = 0;
};

inline PermutationStats permutation_stats(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    auto at = [&](int i) { return (i <= 0 || i > n) ? 0 : sigma[static_cast<std::size_t>(i) - 1]; };
    PermutationStats s;
    s.n = n;
    for (int i = 0; i <= n; ++i) {
        if (at(i) > at(i + 1)) ++s.des;
        if (at(i) < at(i + 1)) ++s.asc;
    }
    return s;
}

// A double descent is a position 1 <= i <= n-1 with
// sigma_i > sigma_{i+1} > sigma_{i+2}; the trailing padded zero participates
// (i = n-1 compares against sigma_{n+1} = 0).
inline bool has_double_descent(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    auto at = [&](int i) { return (i <= 0 || i > n) ? 0 : sigma[static_cast<std::size_t>(i) - 1]; };
    for (int i = 1; i + 1 <= n; ++i)
        if (at(i) > at(i + 1) && at(i + 1) > at(i + 2)) return true;
    return false;
}

inline StirlingStats stirling_stats(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    if (len % 2 != 0) throw std::domain_error("stirling_stats: word length must be even");
    const int n = len / 2;
    auto at = [&](int i) { return (i <= 0 || i > len) ? 0 : word[static_cast<std::size_t>(i) - 1]; };
    StirlingStats s;
    s.n = n;
    for (int i = 0; i <= len; ++i) {
        if (at(i) > at(i + 1)) ++s.des;
        else if (at(i) < at(i + 1)) ++s.asc;
        else ++s.plat;
    }
    return s;
}

// Each letter of 1..n appears exactly twice and everything between the two
// copies of j is larger than j.
inline bool is_stirling_word(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    if (len % 2 != 0) return false;
    const int n = len / 2;
    std::map<int, std::pair<int, int>> span;  // letter -> (first, last) index
    for (int i = 0; i < len; ++i) {
        int v = word[static_cast<std::size_t>(i)];
        if (v < 1 || v > n) return false;
        auto it = span.find(v);
        if (it == span.end())
            span.emplace(v, std::make_pair(i, -1));
        else if (it->second.second == -1)
            it->second.second = i;
        else
            return false;
    }
    if (static_cast<int>(span.size()) != n) return false;
    for (const auto& [v, fl] : span) {
        if (fl.second == -1) return false;
        for (int i = fl.first + 1; i < fl.second; ++i)
            if (word[static_cast<std::size_t>(i)] <= v) return false;
    }
    return true;
}

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_permutation: n must be >= 1");
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        fn(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Every Stirling permutation of [n]_2 arises exactly once by inserting the
// adjacent pair "j j" into one of the 2j-1 gaps of a Stirling permutation
// of [n-1]_2, so |Q_n| = (2n-1)!!.
inline void for_each_stirling_word(int n,
                                   const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_stirling_word: n must be >= 1");
    std::vector<int> word = {1, 1};
    auto rec = [&](auto&& self, int j) -> void {
        if (j > n) {
            fn(word);
            return;
        }
        for (std::size_t pos = 0; pos <= word.size(); ++pos) {
            word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos), 2, j);
            self(self, j + 1);
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(pos),
                       word.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
        }
    };
    rec(rec, 2);
}

// Joint (des, asc) distribution over S_n as a polynomial in x, y; the
// boundary-pair identity des + asc = n + 1 is asserted along the way.
inline Polynomial permutation_distribution(int n) {
    std::map<Monomial, BigInt> terms;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        PermutationStats s = permutation_stats(sigma);
        if (s.des + s.asc != s.n + 1)
            throw std::logic_error("permutation_distribution: des + asc != n + 1");
        terms[Monomial::from_exponents({{"x", s.des}, {"y", s.asc}})] += 1;
    });
    return Polynomial::from_terms(std::move(terms), {"x", "y"});
}

// Descent histogram over permutations of [n] with no double descent.
inline std::map<int, BigInt> no_double_descent_counts(int n) {
    std::map<int, BigInt> hist;
    for_each_permutation(n, [&](const std::vector<int>& sigma) {
        if (has_double_descent(sigma)) return;
        hist[permutation_stats(sigma).des] += 1;
    });
    return hist;
}

// Joint (des, asc, plat) distribution over Q_n as a polynomial in x, y, z;
// validity and the boundary-pair identity are asserted along the way.
inline Polynomial stirling_distribution(int n) {
    std::map<Monomial, BigInt> terms;
    for_each_stirling_word(n, [&](const std::vector<int>& word) {
        if (!is_stirling_word(word))
            throw std::logic_error("stirling_distribution: enumeration left the class");
        StirlingStats s = stirling_stats(word);
        if (s.des + s.asc + s.plat != 2 * s.n + 1)
            throw std::logic_error("stirling_distribution: des + asc + plat != 2n + 1");
        terms[Monomial::from_exponents({{"x", s.des}, {"y", s.asc}, {"z", s.plat}})] += 1;
    });
    return Polynomial::from_terms(std::move(terms), {"x", "y", "z"});
}

// Descent histogram over Q_n (the x-marginal of stirling_distribution).
inline std::map<int, BigInt> second_order_numbers(int n) {
    std::map<int, BigInt> hist;
    for_each_stirling_word(n, [&](const std::vector<int>& word) {
        hist[stirling_stats(word).des] += 1;
    });
    return hist;
}

// Rooted tree on labels 1..size with root 1, stored as ordered child lists.
// Labels increase along every root-to-leaf path when built through add_leaf
// or validated by from_children.  Child order is significant ("plane"); the
// non-plane enumeration simply never varies it.
class PlaneTree {
public:
    static PlaneTree single() {
        PlaneTree t;
        t.children_.resize(2);
        return t;
    }

    // children[0] is unused; children[v] lists v's children in order.
    static PlaneTree from_children(std::vector<std::vector<int>> children) {
        if (children.size() < 2)
            throw std::invalid_argument("PlaneTree: need at least the root vertex");
        const int n = static_cast<int>(children.size()) - 1;
        std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) {
            for (int c : children[static_cast<std::size_t>(v)]) {
                if (c < 2 || c > n) throw std::invalid_argument("PlaneTree: child label out of range");
                if (parent[static_cast<std::size_t>(c)] != 0)
                    throw std::invalid_argument("PlaneTree: vertex has two parents");
                if (c <= v) throw std::invalid_argument("PlaneTree: labels must increase downward");
                parent[static_cast<std::size_t>(c)] = v;
            }
        }
        for (int v = 2; v <= n; ++v)
            if (parent[static_cast<std::size_t>(v)] == 0)
                throw std::invalid_argument("PlaneTree: disconnected vertex");
        PlaneTree t;
        t.children_ = std::move(children);
        return t;
    }

    int size() const { return static_cast<int>(children_.size()) - 1; }

    const std::vector<int>& children(int v) const {
        check_vertex(v);
        return children_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(children_[static_cast<std::size_t>(v)].size());
    }

    // Attaches the next label (size()+1) as a child of `parent` at `position`.
    void add_leaf(int parent, int position) {
        check_vertex(parent);
        auto& kids = children_[static_cast<std::size_t>(parent)];
        if (position < 0 || position > static_cast<int>(kids.size()))
            throw std::out_of_range("PlaneTree::add_leaf: position");
        kids.insert(kids.begin() + position, size() + 1);
        children_.emplace_back();
    }

    // Reverses add_leaf(parent, position) for the most recently added label.
    void pop_leaf(int parent, int position) {
        check_vertex(parent);
        auto& kids = children_[static_cast<std::size_t>(parent)];
        if (position < 0 || position >= static_cast<int>(kids.size()) ||
            kids[static_cast<std::size_t>(position)] != size() ||
            !children_.back().empty())
            throw std::logic_error("PlaneTree::pop_leaf: not the last added leaf");
        kids.erase(kids.begin() + position);
        children_.pop_back();
    }

    int leaf_count() const {
        int k = 0;
        for (int v = 1; v <= size(); ++v)
            if (degree(v) == 0) ++k;
        return k;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 1; v <= size(); ++v) d = std::max(d, degree(v));
        return d;
    }

    // (i, j, k) = (#degree-2 vertices, #degree-1 vertices, #leaves).
    std::array<int, 3> degree_profile() const {
        std::array<int, 3> p = {0, 0, 0};
        for (int v = 1; v <= size(); ++v) {
            switch (degree(v)) {
                case 0: ++p[2]; break;
                case 1: ++p[1]; break;
                case 2: ++p[0]; break;
                default: break;
            }
        }
        return p;
    }

    friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

private:
    void check_vertex(int v) const {
        if (v < 1 || v > size()) throw std::out_of_range("PlaneTree: vertex label");
    }

    std::vector<std::vector<int>> children_;
};

// Visits every increasing tree on [n] with vertex out-degrees at most
// degree_bound, exactly once, by attaching labels 2..n in turn.  A vertex of
// degree d below the bound offers d+1 ordered slots in the plane case and a
// single slot otherwise.
inline void for_each_tree(int n, int degree_bound, bool plane,
                          const std::function<void(const PlaneTree&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_tree: n must be >= 1");
    if (degree_bound < 1) throw std::domain_error("for_each_tree: degree bound must be >= 1");
    PlaneTree t = PlaneTree::single();
    auto rec = [&](auto&& self) -> void {
        if (t.size() == n) {
            fn(t);
            return;
        }
        const int m = t.size();
        for (int p = 1; p <= m; ++p) {
            int d = t.degree(p);
            if (d >= degree_bound) continue;
            if (plane) {
                for (int pos = 0; pos <= d; ++pos) {
                    t.add_leaf(p, pos);
                    self(self);
                    t.pop_leaf(p, pos);
                }
            } else {
                t.add_leaf(p, d);
                self(self);
                t.pop_leaf(p, d);
            }
        }
    };
    rec(rec);
}

inline std::vector<PlaneTree> enumerate_trees(int n, int degree_bound, bool plane) {
    std::vector<PlaneTree> out;
    for_each_tree(n, degree_bound, plane, [&](const PlaneTree& t) { out.push_back(t); });
    return out;
}

inline std::map<int, BigInt> tree_leaf_histogram(int n, int degree_bound, bool plane) {
    std::map<int, BigInt> hist;
    for_each_tree(n, degree_bound, plane,
                  [&](const PlaneTree& t) { hist[t.leaf_count()] += 1; });
    return hist;
}

// Profile histogram over plane increasing trees on [n] with degree bound 3;
// the edge identity 3*f3 + 2*i + j = n - 1 is asserted along the way.
inline std::map<std::array<int, 3>, BigInt> tree_profile_histogram(int n) {
    std::map<std::array<int, 3>, BigInt> hist;
    for_each_tree(n, 3, true, [&](const PlaneTree& t) {
        auto p = t.degree_profile();
        const int f3 = n - p[0] - p[1] - p[2];
        if (3 * f3 + 2 * p[0] + p[1] != n - 1)
            throw std::logic_error("tree_profile_histogram: degree sum is off");
        hist[p] += 1;
    });
    return hist;
}

enum class TreeLabeling {
    gamma,      // leaf -> u, degree 1 -> v, degree 2 -> 1 (bound 2)
    elementary  // leaf -> w, degree 1 -> v, degree 2 -> u, degree 3 -> 1 (bound 3)
};

inline Polynomial tree_weight(const PlaneTree& t, TreeLabeling labeling) {
    auto p = t.degree_profile();
    switch (labeling) {
        case TreeLabeling::gamma:
            if (t.max_degree() > 2)
                throw std::domain_error("tree_weight: gamma labeling needs degree bound 2");
            return Polynomial::term(
                Monomial::from_exponents({{"u", p[2]}, {"v", p[1]}}), 1)
                .with_variable_order({"u", "v"});
        case TreeLabeling::elementary:
            if (t.max_degree() > 3)
                throw std::domain_error("tree_weight: elementary labeling needs degree bound 3");
            return Polynomial::term(
                Monomial::from_exponents({{"u", p[0]}, {"v", p[1]}, {"w", p[2]}}), 1)
                .with_variable_order({"u", "v", "w"});
    }
    throw std::logic_error("tree_weight: unknown labeling");
}

// E_n as a tree sum: x^{leaves} y^{degree-one vertices} over increasing
// non-plane 0-1-2 trees on [n].
inline Polynomial andre_distribution(int n) {
    std::map<Monomial, BigInt> terms;
    for_each_tree(n, 2, false, [&](const PlaneTree& t) {
        auto p = t.degree_profile();
        terms[Monomial::from_exponents({{"x", p[2]}, {"y", p[1]}})] += 1;
    });
    return Polynomial::from_terms(std::move(terms), {"x", "y"});
}

// Sum of x/y vertex labelings of a 0-1-2 tree: leaves contribute xy, degree-2
// vertices 1, and each degree-1 vertex independently x or y, which collapses
// to (xy)^{leaves} (x+y)^{degree-one count}.  Both the closed form and the
// explicit 2^{f1}-term sum are computed and compared.
inline Polynomial class_weight_sum(const PlaneTree& t) {
    if (t.max_degree() > 2)
        throw std::domain_error("class_weight_sum: tree exceeds degree bound 2");
    auto p = t.degree_profile();
    const Polynomial x = Polynomial::variable("x");
    const Polynomial y = Polynomial::variable("y");
    Polynomial closed =
        (x * y).pow(p[2]) * (x + y).pow(p[1]);
    Polynomial explicit_sum;
    const int f1 = p[1];
    if (f1 > 62) throw std::domain_error("class_weight_sum: too many degree-one vertices");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f1); ++mask) {
        int xs = 0;
        for (int b = 0; b < f1; ++b)
            if (mask & (std::uint64_t{1} << b)) ++xs;
        explicit_sum += Polynomial::term(
            Monomial::from_exponents({{"x", p[2] + xs}, {"y", p[2] + f1 - xs}}), 1);
    }
    if (!(explicit_sum == closed))
        throw std::logic_error("class_weight_sum: labeling sum disagrees with closed form");
    return closed.with_variable_order({"x", "y"});
}

}  // namespace gramcalc
