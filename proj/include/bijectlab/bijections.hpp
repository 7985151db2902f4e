#pragma once

#include "bijectlab/deals.hpp"
#include "bijectlab/matrices.hpp"
#include "bijectlab/paths.hpp"

namespace bijectlab::bijections {

// Deal -> matrix, one column per denomination 1..n:
//
//   column  denomination is ...
//   (1/1)   not in the deal
//   (1/2)   dealt, red holds nothing, red card with green
//   (1/3)   dealt, red holds nothing, red card with blue
//   (2/1)   red holds both green and blue cards, red card with blue
//   (3/1)   red holds both, red card with green
//   (2/2)   red holds the green card only, red card with blue
//   (3/2)   red holds the green card only, red card with green
//   (2/3)   red holds the blue card only, red card with blue
//   (3/3)   red holds the blue card only, red card with green
//
// Barrucand deals land on abelian matrices, Franel deals on abelian matrices
// without (1/1) columns, Hanna deals on Hanna matrices. Throws
// std::invalid_argument unless the deal is a valid Hanna deal.
matrices::TwoRowMatrix deal_to_matrix(const deals::Deal& deal);

// Inverse map, built from the per-player readout (red's cards from columns
// (2/*) and (3/*), green's and blue's from their own column lists) rather
// than by inverting deal_to_matrix; the inverse property is tested, not
// assumed. Throws std::invalid_argument on a non-Hanna matrix.
deals::Deal matrix_to_deal(const matrices::TwoRowMatrix& m);

// Columnwise substitution
//   (1/1) (1/2) (1/3) (2/1) (2/2) (2/3) (3/1) (3/2) (3/3)
//    F1    U1    U2    D1    F2    F3    D2    F4    F5
// and its inverse. Equal row 1-counts correspond to equal U/D counts.
paths::HannaPath matrix_to_path(const matrices::TwoRowMatrix& m);
matrices::TwoRowMatrix path_to_matrix(const paths::HannaPath& p);

}  // namespace bijectlab::bijections
