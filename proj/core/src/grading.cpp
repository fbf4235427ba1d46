#include "algdeg/grading.hpp"

namespace algdeg {

WeightVector::WeightVector(std::vector<long long> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw DimensionTooSmall("weight vectors cannot be empty");
}

WeightVector WeightVector::constant(std::size_t n, long long w) {
    return WeightVector(std::vector<long long>(n, w));
}

long long WeightVector::at(std::size_t i) const {
    if (i < 1 || i > w_.size())
        throw IndexOutOfRange("weight index " + std::to_string(i) + " out of range");
    return w_[i - 1];
}

long long triple_weight(const WeightVector& q, const Triple& t) {
    return q.at(t.i) + q.at(t.j) - q.at(t.k);
}

TriplePartition partition(const WeightVector& q) {
    const std::size_t n = q.n();
    TriplePartition out;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                const Triple t{i, j, k};
                out.classes[triple_weight(q, t)].push_back(t);
            }
    return out;
}

VarId triple_var(const Triple& t, std::size_t n) {
    return static_cast<VarId>(index_of(t, n) - 1);
}

Triple var_triple(VarId v, std::size_t n) { return triple_of(v + 1, n); }

long long deg_restricted(const Monomial& f, std::size_t n, const std::set<Triple>& s) {
    long long d = 0;
    for (const auto& [v, e] : f.factors())
        if (s.count(var_triple(v, n))) d += e;
    return d;
}

long long deg_restricted(const Polynomial& f, std::size_t n, const std::set<Triple>& s) {
    auto [m, c] = f.sole_term();
    (void)c;
    return deg_restricted(m, n, s);
}

long long qadeg(const Monomial& f, const WeightVector& q) {
    const std::size_t n = q.n();
    long long total = 0;
    for (const auto& [v, e] : f.factors()) {
        const long long w = triple_weight(q, var_triple(v, n));
        if (w < 0) return 0;
        total += w * static_cast<long long>(e);
    }
    return total;
}

long long qadeg(const Polynomial& f, const WeightVector& q) {
    auto [m, c] = f.sole_term();
    (void)c;
    return qadeg(m, q);
}

StructureVector truncate(const StructureVector& lambda, const WeightVector& q) {
    const std::size_t n = lambda.n();
    if (q.n() != n)
        throw DimensionMismatch("weight vector length differs from dimension");
    StructureVector out(n, lambda.spec());
    for (std::size_t m = 1; m <= lambda.size(); ++m) {
        const Triple t = triple_of(m, n);
        if (triple_weight(q, t) <= 0) out.set_flat(m, lambda.at_flat(m));
    }
    return out;
}

bool hypothesis_holds(const StructureVector& lambda, const WeightVector& q) {
    const std::size_t n = lambda.n();
    if (q.n() != n)
        throw DimensionMismatch("weight vector length differs from dimension");
    for (std::size_t m = 1; m <= lambda.size(); ++m) {
        if (lambda.at_flat(m).is_zero()) continue;
        if (triple_weight(q, triple_of(m, n)) < 0) return false;
    }
    return true;
}

std::optional<WeightVector> search_weight_witness(const StructureVector& lambda,
                                                  const StructureVector& target,
                                                  long long bound) {
    if (bound < 1) throw PreconditionFailed("search bound must be >= 1");
    const std::size_t n = lambda.n();
    if (target.n() != n || target.spec() != lambda.spec())
        throw DimensionMismatch("target does not match the source vector");
    std::vector<long long> w(n, bound);
    for (;;) {
        const WeightVector q{w};
        if (hypothesis_holds(lambda, q) && truncate(lambda, q) == target) return q;
        // Next tuple: components run from +bound down to -bound.
        std::size_t pos = n;
        while (pos > 0 && w[pos - 1] == -bound) {
            w[pos - 1] = bound;
            --pos;
        }
        if (pos == 0) break;
        --w[pos - 1];
    }
    return std::nullopt;
}

} // namespace algdeg
