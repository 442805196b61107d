// Evaluates the Grassmannian Pfaffian identity for phi = (1,2,3), n = 4 and
// prints both sides.
#include <iostream>

#include "fpf/fpf.hpp"

int main() {
    using namespace fpf;
    std::vector<int> phi{1, 2, 3};
    int n = 4;
    Poly lhs = fpf_schubert_bracket(phi, n);
    SkewMatrix<Poly> M(4);
    std::vector<int> ext{1, 2, 3, 0};
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            M.at(i, j) = fpf_schubert_bracket({ext[i - 1], ext[j - 1]}, n);
    Poly rhs = pfaffian(M);
    std::cout << "S[1,2,3;4]    = " << lhs.to_string() << "\n";
    std::cout << "pf M[1,2,3;4] = " << rhs.to_string() << "\n";
    std::cout << (lhs == rhs ? "equal" : "DIFFER") << "\n";
    return lhs == rhs ? 0 : 1;
}
