#pragma once

#include "dgp/errors.hpp"

namespace dgp {

// The three random digraph models: multidigraphs with Poisson(p) edge
// multiplicities, simple digraphs (2-cycles allowed), and strict digraphs
// (no 2-cycles).
enum class ModelKind { MD, D2, SD };

// Digraph family whose probability is being computed.
struct FamilySpec {
    enum class Tag { Acyclic, Elementary, OneComplexKernel, OneComplexExcess, Bicyclic };
    Tag tag = Tag::Acyclic;
    int r = 0; // excess, for the one-complex families
    int d = 0; // kernel deficiency, OneComplexKernel only

    static FamilySpec acyclic() { return {Tag::Acyclic, 0, 0}; }
    static FamilySpec elementary() { return {Tag::Elementary, 0, 0}; }
    static FamilySpec bicyclic() { return {Tag::Bicyclic, 0, 0}; }
    static FamilySpec one_complex_kernel(int r, int d) {
        if (r < 1 || d < 0 || d > 2 * r - 1)
            throw domain_error("one_complex_kernel: need r >= 1, 0 <= d <= 2r-1");
        return {Tag::OneComplexKernel, r, d};
    }
    static FamilySpec one_complex_excess(int r) {
        if (r < 1) throw domain_error("one_complex_excess: need r >= 1");
        return {Tag::OneComplexExcess, r, 0};
    }
};

} // namespace dgp
