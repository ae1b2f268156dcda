#pragma once

#include <charex/errors.hpp>
#include <charex/rational.hpp>

#include <iterator>
#include <span>
#include <vector>

namespace charex {

// Degree guard for composition-based operations. |W_{n,m}| = C(m+n-1, n-1)
// grows fast in m; callers that genuinely need deeper scans pass an explicit
// cap instead of silently paying for it.
inline constexpr int kDefaultDegreeCap = 64;

// Weak composition: non-negative integer parts with a fixed sum.
class Composition {
public:
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int degree() const { return degree_; }
    std::size_t size() const { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }

private:
    friend class CompositionRange;
    Composition() : degree_(0) {}

    std::vector<int> parts_;
    int degree_;
};

// Streams W_{n,m} = { (k_1..k_n) : k_j >= 0, sum = m } exactly once each,
// from (m,0,...,0) down to (0,...,0,m) in decreasing lexicographic order.
class CompositionRange {
public:
    CompositionRange(int n, int m, int degree_cap = kDefaultDegreeCap);

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Composition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Composition*;
        using reference = const Composition&;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) { auto copy = *this; ++*this; return copy; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return it.done_;
        }

    private:
        friend class CompositionRange;
        iterator(int n, int m);

        Composition current_;
        bool done_ = false;
    };

    iterator begin() const { return iterator(n_, m_); }
    std::default_sentinel_t end() const { return {}; }

    // |W_{n,m}| without enumeration.
    BigInt count() const;

    int parts() const { return n_; }
    int degree() const { return m_; }

private:
    int n_;
    int m_;
};

CompositionRange compositions(int n, int m, int degree_cap = kDefaultDegreeCap);

BigInt factorial(int m);
BigInt binomial(long long n, long long k);

// m! / (k_1! ... k_n!)
BigInt multinomial(const Composition& c);

// p_m(mu) = sum_k mu_k^m; p_0 = n.
Rational power_sum(std::span<const Rational> mu, int m, int degree_cap = kDefaultDegreeCap);

// h_m(mu) = sum over W_{n,m} of prod_j mu_j^{k_j}, by direct enumeration of
// the compositions; h_0 = 1. The Newton recurrence is deliberately not used
// here (it serves as an independent oracle in the tests).
Rational complete_homogeneous(std::span<const Rational> mu, int m,
                              int degree_cap = kDefaultDegreeCap);

}  // namespace charex
