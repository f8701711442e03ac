#pragma once

#include <map>
#include <vector>

#include "ghzsim/hybrid.hpp"

namespace ghz {

// Isometric linear map on creation operators. A column lists where one
// input mode's creation operator goes: a_in^dag -> sum_k c_k a_k^dag.
// Modes without a column are passed through unchanged. Input and output
// sites may coincide (in-place elements); columns are applied as one
// simultaneous substitution.
class ModeMap {
  public:
    using Column = std::vector<std::pair<ModeId, Complex>>;

    void set_column(ModeId in, Column col);
    const Column* column(ModeId in) const;
    const std::map<ModeId, Column>& columns() const { return cols_; }

    bool is_isometry(double tol = kAlgebraTol) const;

  private:
    std::map<ModeId, Column> cols_;
};

// Element constructors. The BS convention is (in1 +/- in2)/sqrt(2)
// throughout (real coefficients); the PBS transmits H and reflects V.
ModeMap bs50(Site s1, Site s2);
ModeMap pbs(Site in1, Site in2, Site out1, Site out2);
ModeMap hwp_r90(Site s);
ModeMap hadamard_wp(Site s);
ModeMap phase_shift(Site s, double phi);

// b after a (i.e. apply_map(compose(b, a), s) == apply_map(b, apply_map(a, s))).
ModeMap compose(const ModeMap& b, const ModeMap& a);

// Applies the map with full bosonic combinatorics on Fock content and the
// exact linear transformation of coherent labels. Output is canonicalized;
// norm is preserved.
HybridState apply_map(const ModeMap& m, const HybridState& s);

}  // namespace ghz
