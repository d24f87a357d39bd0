#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hybrid/hybrid_set.hpp"

namespace hybrid {

// The hybrid comparison relations: strict i << j means i is a member of the
// interval {0,1,..,j-1}; weak means i is a member of {1,2,..,j}. Both are
// antisymmetric and transitive but not reflexive; negative integers sit in
// their own reversed chain.
enum class HybridRelation { Strict, Weak };

bool hybrid_less(HybridRelation kind, long long i, long long j);

// A generalized linear partition: parts chained downward from `width`
// under the strict relation (d-partition) or the weak relation
// (n-partition). Negative widths admit negative parts.
struct GenPartition {
    std::vector<long long> parts;
    long long width = 0;
    HybridRelation kind = HybridRelation::Strict;

    long long sum() const;
    long long length() const { return static_cast<long long>(parts.size()); }

    bool operator==(const GenPartition& o) const = default;
};

// All chains width (>>) lambda_1 (>>) .. (>>) lambda_k under the chosen
// relation, optionally filtered by part sum; lexicographic on parts.
std::vector<GenPartition> enumerate_partitions(HybridRelation kind, long long width,
                                               long long length,
                                               std::optional<long long> sum = {});

using Cell = std::pair<long long, long long>;

// The Ferrers diagram: sum over rows i of the interval {(i,1)..(i,lambda_i)}
// of cells; rows with negative parts contribute negative-multiplicity cells.
// Cardinality equals |lambda|.
HybridSet<Cell> ferrers(const GenPartition& shape);

// A 0-1 filling: per row, the column holding the row's single 1. Rows of
// length zero admit no filling, so shapes containing one have no tableaux.
struct Tableau01 {
    GenPartition shape;
    std::vector<long long> ones;

    bool operator==(const Tableau01& o) const = default;
};

std::vector<Tableau01> enumerate_tableaux(const GenPartition& shape);

// inv / nin statistics as doubled half-integers: each row's 1 contributes
// half the row's cell sign to both sides, and each 0 contributes the cell
// sign to the side (by column order) it sits on relative to the 1.
long long inv2(const Tableau01& t);
long long nin2(const Tableau01& t);

// sum of q^inv p^nin over all 0-1 tableaux of d-partitions of width n and
// length n-k (first kind) or n-partitions of width k and length n-k
// (second kind). Equals the p,q-Stirling numbers up to the first-kind sign
// (-1)^{n-k}.
enum class StirlingKind { First, Second };
LaurentPoly tableau_sum(StirlingKind kind, long long n, long long k);

}  // namespace hybrid
