#include "domtree/formulas.hpp"

#include <stdexcept>

namespace domtree {

namespace {

BigInt pow2(int e) { return BigInt(1) << e; }

BigInt exact_div(const BigInt& numerator, int divisor) {
    if (numerator % divisor != 0)
        throw std::logic_error("closed form numerator not divisible");
    return numerator / divisor;
}

}  // namespace

FormulaRecord closed_form(Family family, Variant variant, int n) {
    if (family != Family::Hypertree && family != Family::SiblingTree)
        throw std::invalid_argument("closed forms exist for ht and st only");
    if (n < 1) throw std::invalid_argument("formula domain starts at n=1");

    FormulaRecord rec{family, variant, n, 0, 0};
    switch (variant) {
        case Variant::Dominating:
        case Variant::TotalDominating: {
            rec.residue = n % 3;
            switch (rec.residue) {
                case 0: rec.value = exact_div(pow2(n + 2) + 3, 7); break;
                case 1:
                    rec.value = exact_div(pow2(n + 2) - 1, 7);
                    if (variant == Variant::TotalDominating) rec.value += 1;
                    break;
                case 2: rec.value = exact_div(2 * (pow2(n + 1) - 1), 7); break;
            }
            break;
        }
        case Variant::LocatingDominating: {
            rec.residue = n % 4;
            switch (rec.residue) {
                case 0: rec.value = exact_div(pow2(n + 2) + 1, 5); break;
                case 1: rec.value = exact_div(pow2(n + 2) + 2, 5); break;
                case 2: rec.value = exact_div(pow2(n + 2) - 1, 5); break;
                case 3: rec.value = exact_div(pow2(n + 2) - 2, 5); break;
            }
            break;
        }
        case Variant::LocatingTotalDominating: {
            rec.residue = n % 3;
            if (family == Family::Hypertree) {
                switch (rec.residue) {
                    case 0: rec.value = exact_div(3 * pow2(n + 1) + 1, 7); break;
                    case 1: rec.value = exact_div(2 * (3 * pow2(n) + 1), 7); break;
                    case 2: rec.value = exact_div(3 * (pow2(n + 1) - 1), 7); break;
                }
            } else {
                switch (rec.residue) {
                    case 0: rec.value = exact_div(pow2(n + 3) - 1, 7); break;
                    case 1: rec.value = exact_div(pow2(n + 3) - 2, 7); break;
                    case 2: rec.value = exact_div(pow2(n + 3) - 4, 7); break;
                }
            }
            break;
        }
    }
    return rec;
}

const std::vector<LemmaEntry>& lemma_table() {
    static const std::vector<LemmaEntry> table = {
        {{Family::RootFaultHypertree, 2}, Variant::Dominating, 2},
        {{Family::RootFaultHypertree, 2}, Variant::TotalDominating, 2},
        {{Family::RootFaultHypertree, 2}, Variant::LocatingDominating, 3},
        {{Family::RootFaultHypertree, 2}, Variant::LocatingTotalDominating, 3},
        {{Family::RootFaultHypertree, 3}, Variant::LocatingDominating, 6},
        {{Family::RootFaultHypertree, 3}, Variant::LocatingTotalDominating, 6},
        {{Family::SiblingTree, 2}, Variant::Dominating, 2},
        {{Family::SiblingTree, 2}, Variant::TotalDominating, 2},
        {{Family::SiblingTree, 2}, Variant::LocatingTotalDominating, 4},
        {{Family::SiblingTree, 3}, Variant::LocatingDominating, 6},
    };
    return table;
}

}  // namespace domtree
