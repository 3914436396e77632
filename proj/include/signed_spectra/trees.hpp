#ifndef SIGNED_SPECTRA_TREES_HPP
#define SIGNED_SPECTRA_TREES_HPP

#include <string>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Decode a Prüfer sequence (length n-2, entries in 0..n-1) into the unique
/// labeled tree on n vertices. n = 2 takes the empty sequence.
LabeledTree prufer_decode(const std::vector<int>& seq, int n);

/// Inverse of prufer_decode.
std::vector<int> prufer_encode(const LabeledTree& t);

/// AHU canonical encoding rooted at the tree center; bicentral trees take the
/// lexicographic minimum over the two roots. Equal strings iff isomorphic.
std::string tree_canonical_form(const LabeledTree& t);

/// Tree centers (one or two vertices).
std::vector<int> tree_centers(const LabeledTree& t);

int tree_diameter(const LabeledTree& t);

}  // namespace signed_spectra

#endif
