#pragma once

#include "qldpc/gf2.hpp"

// CSS/stabilizer layer: the binary symplectic form and the hypergraph-product
// construction. Only binary symplectic representatives are modeled; the
// convention is (x | z) halves with X -> (1,0), Z -> (0,1), Y -> (1,1).
namespace qldpc::css {

struct CssCode {
    gf2::BitMatrix h_x;
    gf2::BitMatrix h_z;
    std::size_t n = 0;  // qubit count = columns of both blocks
};

// H_X = (H1 x I_{n2} | I_{r1} x H2^T), H_Z = (I_{n1} x H2 | H1^T x I_{r2});
// the first n1*n2 columns are the left (variable-tensor) block. The CSS
// condition H_X H_Z^T = 0 holds by construction and is re-verified.
CssCode hypergraph_product(const gf2::BitMatrix& h1, const gf2::BitMatrix& h2);

// True iff H_X H_Z^T = 0 over GF(2). Throws on a column-count mismatch.
bool css_valid(const CssCode& code);

struct PauliVector {
    gf2::BitVector x;
    gf2::BitVector z;
};

// h . g = h_x g_z^T + h_z g_x^T over GF(2); true iff zero (commuting Paulis).
bool symplectic_orthogonal(const PauliVector& h, const PauliVector& g);

}  // namespace qldpc::css
