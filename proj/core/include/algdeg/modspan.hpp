#pragma once

#include "algdeg/action.hpp"
#include "algdeg/structure_vector.hpp"

namespace algdeg {

/// A subspace of the ambient n^3-space, kept as a reduced row echelon basis
/// of structure vectors (pivot positions ascending, pivot entries 1).
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t n, const FieldSpec& fs);

    std::size_t n() const { return n_; }
    const FieldSpec& spec() const { return spec_; }
    std::size_t ambient_dim() const { return n_ * n_ * n_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduce v against the basis and absorb the residual; true if dim grew.
    bool insert(const StructureVector& v);

    bool contains(const StructureVector& v) const;

    /// The residual of v after reduction (zero iff contained).
    StructureVector reduce(const StructureVector& v) const;

    const std::vector<StructureVector>& basis() const { return rows_; }

private:
    std::size_t n_;
    FieldSpec spec_;
    std::vector<StructureVector> rows_;  // RREF rows
    std::vector<std::size_t> pivots_;    // 1-based flat positions, parallel to rows_
};

/// Skew with entries vanishing off k in {i,j} and matching weights
/// lambda_iji = lambda_kjk; the closure of the rho orbit.
bool in_P(const StructureVector& lambda);

/// Skew with all adjoint traces zero; the span generated by eta.
bool in_U(const StructureVector& lambda);

/// Closed-form dimensions of the three subspaces (n >= 3).
std::size_t dim_P(std::size_t n);
std::size_t dim_U(std::size_t n);
std::size_t dim_Sk(std::size_t n);

/// The defining linear systems, one equation per row over the n^3 coordinates;
/// their solution spaces realize the same subspaces constructively.
FlatMatrix constraint_matrix_sk(std::size_t n, const FieldSpec& fs);
FlatMatrix constraint_matrix_p(std::size_t n, const FieldSpec& fs);
FlatMatrix constraint_matrix_u(std::size_t n, const FieldSpec& fs);

std::size_t solution_dim_sk(std::size_t n, const FieldSpec& fs);
std::size_t solution_dim_p(std::size_t n, const FieldSpec& fs);
std::size_t solution_dim_u(std::size_t n, const FieldSpec& fs);

/// The smallest subspace containing lambda and stable under every basis
/// change: saturate under permutations, transvections and diagonal
/// rescalings until the dimension stops growing.  Transvection curves have
/// degree <= 3 in the parameter and diagonal curves have exponents in
/// [-1, 2], so the sampled parameter sets span the full curves over Q; over
/// F_p the whole parameter range is used.  Guarded to n <= 6.
SubspaceBasis fg_span(const StructureVector& lambda);

/// Outcome of the module-structure analysis of the skew subspace.
struct CompositionReport {
    std::size_t n;
    FieldSpec spec;
    bool char_divides_n_minus_1;
    std::size_t dim_rho_span, dim_eta_span, dim_sk;
    std::size_t intersection_dim;
    bool rho_in_eta_span;
    bool rho_span_inside_eta_span;
    /// Case checks: a direct-sum decomposition when the characteristic does
    /// not divide n-1, a strict chain when it does.
    bool direct_sum_verified;
    bool chain_verified;
    bool verified() const {
        return char_divides_n_minus_1 ? chain_verified : direct_sum_verified;
    }
};

CompositionReport composition_branch(std::size_t n, const FieldSpec& fs);

} // namespace algdeg
