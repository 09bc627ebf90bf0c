#pragma once

#include "gfc/field.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace gfc {

// Sparse vector over F_p: (index, nonzero coefficient) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Elem>>;

SparseVec sparse_from_map(const std::map<std::size_t, Elem>& entries);
// a + c*b
SparseVec axpy(const PrimeField& F, const SparseVec& a, Elem c, const SparseVec& b);

// Incrementally maintained row echelon basis. Each stored row is monic at its
// pivot (its smallest index).
class SparseEchelon {
public:
    explicit SparseEchelon(PrimeField field) : F_(field) {}

    // Reduces v against the basis; returns the (possibly empty) remainder.
    SparseVec reduce(SparseVec v) const;
    // Adds v to the span; true iff v was independent of the current rows.
    bool insert(SparseVec v);
    std::size_t rank() const { return rows_.size(); }
    bool in_span(const SparseVec& v) const { return reduce(v).empty(); }

private:
    PrimeField F_;
    std::map<std::size_t, SparseVec> rows_;
};

std::size_t sparse_rank(const PrimeField& F, const std::vector<SparseVec>& vectors);

using DenseMatrix = std::vector<std::vector<Elem>>;

// Rank by Gaussian elimination on a copy.
std::size_t dense_rank(const PrimeField& F, DenseMatrix m);

} // namespace gfc
