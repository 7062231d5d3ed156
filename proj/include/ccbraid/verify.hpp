#pragma once

#include "ccbraid/graph.hpp"
#include "ccbraid/report.hpp"

namespace ccb {

/// The five auxiliary identities in B_n for the words a_{i,j}, e_{k,l}
/// (all admissible indices), checked by normal form. Needs n >= 3.
Report identity_suite(int n);

/// Every relator of the Artin presentation is trivial in B_n.
Report artin_suite(int n);

/// Every relator of the Markoff presentation, with s_{i,j} replaced by its
/// braid word, is trivial in B_n.
Report markoff_suite(int n);

/// Every relator of pure_chromatic_presentation(g), with s_{i,j} replaced by
/// its braid word, is trivial in B(Gamma). Needs g triangle-free or complete.
Report pure_presentation_suite(const SimpleGraph& g, const std::string& label);

/// Everything above plus the B(C_n) presentation check, for n up to max_n.
Report verify_all(int max_n);

}  // namespace ccb
