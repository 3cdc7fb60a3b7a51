#pragma once

#include "votemap/gs_tree.hpp"
#include "votemap/matrix.hpp"
#include "votemap/ranking.hpp"

namespace votemap {

// Fraction of votes ranking candidate j at position i. Accumulates exact
// integer counts; throws DomainError on an empty election.
FrequencyMatrix frequency_matrix(const Election& e);
RationalMatrix frequency_matrix_exact(const Election& e);

// True iff for every t the top t candidates of v are contiguous on `axis`.
bool is_single_peaked_wrt(const Ranking& v, const Ranking& axis);

// True iff v is the frontier of t after reversing the children of some
// internal nodes.
bool is_consistent_with_tree(const Ranking& v, const GSTree& t);

// The map v -> v^ sending caterpillar-consistent votes to single-peaked ones:
// if v ranks c_j at position i then v^ ranks c_i at position m-j+1 (1-based).
Ranking gs_to_sp(const Ranking& v);

}  // namespace votemap
