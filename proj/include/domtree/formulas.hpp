#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "domtree/checkers.hpp"
#include "domtree/generators.hpp"

namespace domtree {

using BigInt = boost::multiprecision::cpp_int;

struct FormulaRecord {
    Family family = Family::Hypertree;
    Variant variant = Variant::Dominating;
    int n = 0;
    int residue = 0;  // n mod 3, or n mod 4 for locating-domination
    BigInt value;
};

// Exact closed-form value of the parameter for Hypertree/SiblingTree at
// level count n >= 1. All divisions are asserted exact; no rounding.
//
//   dom, both families (n mod 3):       (2^(n+2)+3)/7, (2^(n+2)-1)/7, 2(2^(n+1)-1)/7
//   td:                                  same, with +1 in the n≡1 branch
//   ld, both families (n mod 4):        (2^(n+2)+1)/5, (2^(n+2)+2)/5,
//                                        (2^(n+2)-1)/5, (2^(n+2)-2)/5
//   ltd, hypertree (n mod 3):           (3*2^(n+1)+1)/7, 2(3*2^n+1)/7, 3(2^(n+1)-1)/7
//   ltd, sibling tree (n mod 3):        (2^(n+3)-1)/7, (2^(n+3)-2)/7, (2^(n+3)-4)/7
FormulaRecord closed_form(Family family, Variant variant, int n);

struct LemmaEntry {
    FamilySpec graph;
    Variant variant = Variant::Dominating;
    int value = 0;
};

// The small-instance values proved directly: HT*(2), HT*(3), ST_2, ST_3.
const std::vector<LemmaEntry>& lemma_table();

}  // namespace domtree
