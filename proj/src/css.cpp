#include "qldpc/css.hpp"

#include <stdexcept>

namespace qldpc::css {

CssCode hypergraph_product(const gf2::BitMatrix& h1, const gf2::BitMatrix& h2) {
    using namespace gf2;
    const std::size_t r1 = h1.rows(), n1 = h1.cols();
    const std::size_t r2 = h2.rows(), n2 = h2.cols();

    CssCode code;
    code.h_x = hconcat(kronecker(h1, BitMatrix::identity(n2)),
                       kronecker(BitMatrix::identity(r1), transpose(h2)));
    code.h_z = hconcat(kronecker(BitMatrix::identity(n1), h2),
                       kronecker(transpose(h1), BitMatrix::identity(r2)));
    code.n = n1 * n2 + r1 * r2;

    if (!css_valid(code))
        throw std::logic_error("hypergraph product violated the CSS condition");
    return code;
}

bool css_valid(const CssCode& code) {
    if (code.h_x.cols() != code.h_z.cols())
        throw std::invalid_argument("css_valid: H_X and H_Z column counts disagree");
    return product(code.h_x, transpose(code.h_z)).is_zero();
}

bool symplectic_orthogonal(const PauliVector& h, const PauliVector& g) {
    if (h.x.size() != h.z.size() || g.x.size() != g.z.size() || h.x.size() != g.x.size())
        throw std::invalid_argument("symplectic_orthogonal: half-lengths disagree");
    bool acc = false;
    for (std::size_t i = 0; i < h.x.size(); ++i) {
        acc ^= h.x.get(i) && g.z.get(i);
        acc ^= h.z.get(i) && g.x.get(i);
    }
    return !acc;
}

}  // namespace qldpc::css
