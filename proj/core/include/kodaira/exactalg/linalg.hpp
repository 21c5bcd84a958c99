#pragma once

#include "kodaira/exactalg/affine.hpp"
#include "kodaira/exactalg/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodaira {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& a);
int rank(RatMatrix a);

struct LinearSolution {
    RatVector particular;     // free variables set to 0
    RatMatrix kernel_basis;   // rows; one per free variable
};

// Exact solution set of a·x = b, or nullopt when inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatVector& b);

// Affine subspace of Q⁴ in canonical form: directions are the nonzero rows
// of a reduced echelon matrix, and the basepoint is zero on every pivot
// column. Equal subspaces therefore compare equal member-wise.
class AffineSubspace {
public:
    AffineSubspace(const Vec4<Rat>& point, const std::vector<Vec4<Rat>>& directions);

    int dimension() const { return static_cast<int>(directions_.size()); }
    const Vec4<Rat>& basepoint() const { return base_; }
    const std::vector<Vec4<Rat>>& directions() const { return directions_; }

    bool contains(const Vec4<Rat>& p) const;
    // Rows n with n·x = c for every x on the subspace; 4 - dimension rows.
    RatMatrix normal_rows() const;

    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
        return a.base_ == b.base_ && a.directions_ == b.directions_;
    }

    std::string str() const;

private:
    Vec4<Rat> base_;
    std::vector<Vec4<Rat>> directions_;
};

AffineSubspace image(const RatMap& f, const AffineSubspace& s);

// {x : f(x) = x}, or nullopt when empty.
std::optional<AffineSubspace> fixed_locus(const RatMap& f);

}  // namespace kodaira
