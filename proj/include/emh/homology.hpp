/**
 * Relative and reduced homology of tuple complexes.
 */

#ifndef EMH_HOMOLOGY_HPP
#define EMH_HOMOLOGY_HPP

#include "emh/smith.hpp"
#include "emh/tuple_complex.hpp"

namespace emh {

// Homology of the quotient chain complex of (big, sub).
inline HomologyGroup relative_homology(const TupleComplex& big, const TupleComplex& sub,
                                       int degree) {
    IntegerChainComplex c = relative_chain_complex(big, sub);
    if (degree < 0 || degree > c.top_degree()) return HomologyGroup{degree, 0, {}};
    return homology(c, degree);
}

// Homology of the complex augmented by the empty face; degree-0 rank is
// (components - 1) for non-empty complexes.
inline HomologyGroup reduced_homology(const TupleComplex& x, int degree) {
    IntegerChainComplex c = x.chain_complex(/*augmented=*/!x.empty());
    if (degree < 0 || degree > c.top_degree()) return HomologyGroup{degree, 0, {}};
    return homology(c, degree);
}

}  // namespace emh

#endif
