#pragma once

#include <map>
#include <optional>
#include <set>

#include "algdeg/polynomial.hpp"
#include "algdeg/structure_vector.hpp"

namespace algdeg {

/// An integer weight per basis vector; drives the triple partition and the
/// truncation below.
class WeightVector {
public:
    explicit WeightVector(std::vector<long long> weights);

    /// The constant weight vector (w, ..., w) of length n.
    static WeightVector constant(std::size_t n, long long w);

    std::size_t n() const { return w_.size(); }
    long long at(std::size_t i) const;
    const std::vector<long long>& weights() const { return w_; }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w_ == b.w_;
    }

private:
    std::vector<long long> w_;
};

/// q_i + q_j - q_k for the triple (i,j,k).
long long triple_weight(const WeightVector& q, const Triple& t);

/// The partition of all n^3 triples by their weight; classes are disjoint,
/// exhaustive, and only finitely many are nonempty.
struct TriplePartition {
    std::map<long long, std::vector<Triple>> classes;
};

TriplePartition partition(const WeightVector& q);

/// Indeterminate id for the triple (i,j,k): its 0-based flat position.
VarId triple_var(const Triple& t, std::size_t n);
Triple var_triple(VarId v, std::size_t n);

/// Degree of the monomial after setting every indeterminate outside S to 1.
long long deg_restricted(const Monomial& f, std::size_t n, const std::set<Triple>& s);
/// Same, but insists the polynomial is a single nonzero monomial.
long long deg_restricted(const Polynomial& f, std::size_t n, const std::set<Triple>& s);

/// Auxiliary degree of a monomial over the triple indeterminates: zero when
/// any factor lies in a negative-weight class, otherwise the weight-weighted
/// degree over the nonnegative classes.
long long qadeg(const Monomial& f, const WeightVector& q);
long long qadeg(const Polynomial& f, const WeightVector& q);

/// Keep the entries of nonpositive weight, zero the rest.
StructureVector truncate(const StructureVector& lambda, const WeightVector& q);

/// True iff lambda vanishes on every negative-weight class.  When this holds
/// the truncation is certified to lie in the orbit closure of lambda.
bool hypothesis_holds(const StructureVector& lambda, const WeightVector& q);

/// First weight vector in [-bound, bound]^n (components scanned from +bound
/// down to -bound, lexicographically) whose truncation hits the target with
/// the hypothesis satisfied.  An empty result is not evidence of
/// non-degeneration.
std::optional<WeightVector> search_weight_witness(const StructureVector& lambda,
                                                  const StructureVector& target,
                                                  long long bound);

} // namespace algdeg
