#pragma once

#include "algdeg/structure_vector.hpp"

namespace algdeg {
namespace catalog {

/// The zero vector: the abelian structure.  n >= 2.
StructureVector abelian(std::size_t n, const FieldSpec& fs);

/// The Lie structure with [v_i, v_n] = v_i = -[v_n, v_i] for i < n.  n >= 3.
StructureVector rho(std::size_t n, const FieldSpec& fs);

/// The Heisenberg-type Lie structure: entries (1,2,3) = 1, (2,1,3) = -1.
/// n >= 3.
StructureVector eta(std::size_t n, const FieldSpec& fs);

/// The commutative structure with (1,1,2) = 1 as its only entry.  n >= 2.
StructureVector delta(std::size_t n, const FieldSpec& fs);

/// The one-parameter family: (1,1,1) = 1, (1,i,i) = alpha and
/// (i,1,i) = 1 - alpha for i >= 2.  n >= 2.
StructureVector epsilon(std::size_t n, const FieldSpec& fs, const FieldScalar& alpha);

/// Spanning vectors of the traceless skew subspace: +1 at (r,s,t), -1 at
/// (s,r,t); requires r < s and t not in {r,s}.
StructureVector lambda_hat(std::size_t r, std::size_t s, std::size_t t, std::size_t n,
                           const FieldSpec& fs);

/// The companion spanning vectors: +1 at (r,s,s) and (t,r,t), -1 at (r,t,t)
/// and (s,r,s); requires s != t and r not in {s,t}.
StructureVector lambda_tilde(std::size_t r, std::size_t s, std::size_t t, std::size_t n,
                             const FieldSpec& fs);

/// The n = 2 skew family member (0, 0, beta, alpha, -beta, -alpha, 0, 0).
StructureVector k2_member(const FieldSpec& fs, const FieldScalar& alpha,
                          const FieldScalar& beta);

/// The orbit family of epsilon: [v_i,v_i] = beta_i v_i and
/// [v_i,v_j] = alpha beta_i v_j + (1-alpha) beta_j v_i for i != j.
StructureVector g_family(const FieldSpec& fs, const FieldScalar& alpha,
                         const std::vector<FieldScalar>& betas);

} // namespace catalog
} // namespace algdeg
