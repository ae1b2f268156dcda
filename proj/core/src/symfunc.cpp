#include <charex/symfunc.hpp>

#include <numeric>

namespace charex {

namespace {

void check_degree(int m, int degree_cap) {
    if (m < 0) throw ValidationError("degree must be non-negative");
    if (m > degree_cap) throw DegreeCapError(m, degree_cap);
}

void check_mu(std::span<const Rational> mu) {
    if (mu.empty()) throw ValidationError("mu must be non-empty");
}

// mu_j^k for j in [0,n), k in [0,m].
std::vector<std::vector<Rational>> power_table(std::span<const Rational> mu, int m) {
    std::vector<std::vector<Rational>> table(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) {
        table[j].reserve(m + 1);
        table[j].emplace_back(1);
        for (int k = 1; k <= m; ++k) table[j].push_back(table[j].back() * mu[j]);
    }
    return table;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValidationError("Composition: needs at least one part");
    long long sum = 0;
    for (int k : parts_) {
        if (k < 0) throw ValidationError("Composition: parts must be non-negative");
        sum += k;
    }
    degree_ = static_cast<int>(sum);
}

CompositionRange::iterator::iterator(int n, int m) {
    current_.parts_.assign(n, 0);
    current_.parts_[0] = m;
    current_.degree_ = m;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
    auto& k = current_.parts_;
    const int n = static_cast<int>(k.size());
    // Successor in decreasing lex order: take the rightmost positive part
    // before the last slot, move one unit past it and collapse the tail.
    int j = n - 2;
    while (j >= 0 && k[j] == 0) --j;
    if (j < 0) {
        done_ = true;
        return *this;
    }
    int tail = 1;  // the unit taken from k[j] plus everything right of j
    for (int i = j + 1; i < n; ++i) {
        tail += k[i];
        k[i] = 0;
    }
    k[j] -= 1;
    k[j + 1] = tail;
    return *this;
}

CompositionRange::CompositionRange(int n, int m, int degree_cap) : n_(n), m_(m) {
    if (n < 1) throw ValidationError("compositions: n must be >= 1");
    check_degree(m, degree_cap);
}

BigInt CompositionRange::count() const { return binomial(m_ + n_ - 1, n_ - 1); }

CompositionRange compositions(int n, int m, int degree_cap) {
    return CompositionRange(n, m, degree_cap);
}

BigInt factorial(int m) {
    if (m < 0) throw ValidationError("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: r holds C(n-k+i, i) after each step
    }
    return r;
}

BigInt multinomial(const Composition& c) {
    BigInt r = 1;
    long long used = 0;
    for (int k : c.parts()) {
        used += k;
        r *= binomial(used, k);
    }
    return r;
}

Rational power_sum(std::span<const Rational> mu, int m, int degree_cap) {
    check_mu(mu);
    check_degree(m, degree_cap);
    if (m == 0) return Rational(static_cast<long long>(mu.size()));
    Rational acc(0);
    for (const Rational& x : mu) acc += x.pow(m);
    return acc;
}

Rational complete_homogeneous(std::span<const Rational> mu, int m, int degree_cap) {
    check_mu(mu);
    check_degree(m, degree_cap);
    if (m == 0) return Rational(1);
    const int n = static_cast<int>(mu.size());
    const auto pow = power_table(mu, m);

    // Walks every composition of W_{n,m} (same tree as CompositionRange),
    // carrying the partial monomial so shared prefixes are multiplied once.
    Rational acc(0);
    auto recurse = [&](auto&& self, int j, int remaining, const Rational& partial) -> void {
        if (j == n - 1) {
            acc += partial * pow[j][remaining];
            return;
        }
        for (int k = remaining; k >= 0; --k) self(self, j + 1, remaining - k, partial * pow[j][k]);
    };
    recurse(recurse, 0, m, Rational(1));
    return acc;
}

}  // namespace charex
