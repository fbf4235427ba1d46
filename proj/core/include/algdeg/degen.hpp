#pragma once

#include <optional>
#include <string>

#include "algdeg/action.hpp"
#include "algdeg/algebra.hpp"
#include "algdeg/grading.hpp"

namespace algdeg {

/// A degeneration certificate, or the reason none exists.
///
/// WitnessGrading / WitnessIdeal certify `to` in the orbit closure of `from`:
/// re-run the weight truncation on act(from, basis) and compare with `to`.
/// Blocked certifies non-degeneration by a violated monotone invariant or a
/// closed class containing `from` but not `to`.  Inconclusive is neither.
struct DegenerationVerdict {
    enum class Kind { WitnessGrading, WitnessIdeal, Blocked, Inconclusive };

    Kind kind;
    StructureVector from, to;
    std::optional<WeightVector> weights;
    std::optional<BasisChange> basis;
    std::size_t ideal_dim = 0;
    std::string blocked_condition;
    std::string blocked_from_value, blocked_to_value;

    /// Re-derive the certified target from the certificate payload alone.
    bool self_verify() const;
};

/// Necessary-condition screen: annihilator dimensions must not drop, the
/// product-span dimension must not grow, and membership in each closed class
/// (skew, Lie, metabelian, commutative, unimodular, the rho-closure P) must
/// carry over.  Returns Blocked naming the first violation, else Inconclusive.
DegenerationVerdict necessary_conditions(const StructureVector& lambda,
                                         const StructureVector& mu);

/// Everything degenerates to the zero structure: constant weights 1.
DegenerationVerdict witness_to_abelian(const StructureVector& lambda);

/// Adapt the basis to a given ideal and truncate: certifies degeneration to
/// the ideal summed with an abelian complement.  Throws NotAnIdeal when the
/// given vectors do not span an ideal.
DegenerationVerdict witness_ideal(const StructureVector& lambda,
                                  const std::vector<CoordinateVector>& ideal);

/// For squares in spans but some product outside: adapt a basis to a failing
/// pair and truncate with weights (1,1,2,...,2); the result is exactly eta.
DegenerationVerdict witness_to_heisenberg(const StructureVector& lambda);

/// For some square outside its line: adapt to a failing element and truncate
/// with weights (1,2,...,2); the result is exactly delta.
DegenerationVerdict witness_to_dn(const StructureVector& lambda);

struct EAlphaWitness {
    DegenerationVerdict verdict;
    FieldScalar alpha;
};

/// For non-skew structures with every product in the span of its factors:
/// normalize to an idempotent-led basis and truncate with weights
/// (0,1,...,1); the result is epsilon(alpha) and alpha is read off.
EAlphaWitness witness_to_e_alpha(const StructureVector& lambda);

enum class LabelKind { Abelian, R_n, H_n, D_n, E_n_alpha, NotLevelOne, Dim2Family };

/// Classifier outcome.  NotLevelOne carries a witness certificate when one is
/// constructible (it always is over Q; over tiny finite fields a pointwise
/// failing sample may not exist).
struct ClassificationLabel {
    LabelKind kind;
    std::optional<FieldScalar> alpha;            // E_n_alpha only
    std::optional<DegenerationVerdict> witness;  // NotLevelOne only
    std::string note;

    friend bool operator==(const ClassificationLabel& a, const ClassificationLabel& b) {
        return a.kind == b.kind && a.alpha == b.alpha;
    }
};

std::string label_name(LabelKind k);

/// Decide where lambda sits relative to the structures whose only proper
/// degeneration is the abelian one.
ClassificationLabel classify(const StructureVector& lambda);

} // namespace algdeg
