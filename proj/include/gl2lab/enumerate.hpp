#pragma once

// Fincke-Pohst lattice point enumeration on a positive definite Gram matrix,
// with an optional floating LLL pre-reduction. Dimensions here are at most 8,
// so plain double precision with a small safety slack is adequate; callers
// that need exactness re-filter the reported points with exact arithmetic.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

namespace gl2lab {

// Visit every integer vector x != 0 (up to the +-x symmetry: only one of
// {x, -x} is reported, the one whose first nonzero coordinate is positive)
// with x^T G x <= radius2. Throws BudgetExceeded when more than node_budget
// tree nodes are expanded. Returns number of reported vectors.
std::size_t fincke_pohst(const Eigen::MatrixXd& gram, double radius2,
                         std::uint64_t node_budget,
                         const std::function<void(const std::vector<long>&, double)>& visit);

// Visit every integer vector x with Q(x - tau) <= radius2 for an arbitrary
// real center tau in coefficient space (no symmetry dedup; zero included
// when in range). Returns the number of visited vectors.
std::size_t fincke_pohst_shifted(const Eigen::MatrixXd& gram, const Eigen::VectorXd& tau,
                                 double radius2, std::uint64_t node_budget,
                                 const std::function<void(const std::vector<long>&, double)>& visit);

// In-place floating LLL (delta = 0.99) on basis rows; returns the unimodular
// transform U with new_basis = U * old_basis.
Eigen::MatrixXd lll_reduce(Eigen::MatrixXd& basis, Eigen::MatrixXi* transform = nullptr);

}  // namespace gl2lab
