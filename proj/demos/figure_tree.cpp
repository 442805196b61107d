// Builds the LS tree of a 12-point involution, prints it as DOT together with
// the resulting Schur P expansion and the ASCII matching picture.
#include <iostream>

#include "fpf/fpf.hpp"

int main(int argc, char** argv) {
    std::string target = argc > 1 ? argv[1] : "(1,2)(3,7)(4,6)(5,10)(8,11)(9,12)";
    fpf::FpfInvolution z = fpf::parse_involution(target);
    std::cout << "// " << fpf::cycle_notation(z) << "\n";
    std::cout << fpf::ascii_arcs(z);
    fpf::LSTree t = fpf::build_ls_tree(z);
    std::cout << fpf::tree_to_dot(t);
    fpf::SymExpansion e = fpf::expand_fpf_stanley(z);
    std::cout << "// F = " << fpf::expansion_to_json(e).dump() << "\n";
    return 0;
}
