#pragma once

// Catalog of the cross-multiplied algebraic identities behind the spectral
// function laws, checked exactly as Laurent-polynomial identities over the
// rationals. Every entry is stated denominator-cleared with its multiplier
// recorded; entries whose cleared form still carries half-integers say so.
// A non-zero residual is returned, never thrown.

#include <string>
#include <vector>

#include "ringcalc/multipoly.hpp"

namespace ringcalc {

struct IdentityEntry {
  std::string id;
  std::string set_tag;     // sign | sqrt | idem | fsqrt | homotopy
  std::string multiplier;  // documented clearing multiplier
  std::string note;
};

struct IdentityResult {
  std::string id;
  std::string set_tag;
  bool verified = false;
  bool needs_half = false;  // cleared form uses half-integer coefficients
  std::string residual;     // "0" when verified
  double millis = 0.0;
};

// The four-argument pencil bracket as printed, term by term. mutate_term
// (0..15) flips the sign of one printed term; -1 is the faithful table.
// Guards the catalog against transcription drift of the bracket.
MultiPoly lambda4_printed(const MultiPoly& a, const MultiPoly& b, const MultiPoly& c,
                          const MultiPoly& d, int mutate_term = -1);

std::vector<IdentityEntry> identity_catalog();

// set: one of sign|sqrt|idem|fsqrt|homotopy|all
std::vector<IdentityResult> verify_identities(const std::string& set = "all",
                                              int lambda4_mutation = -1);

}  // namespace ringcalc
