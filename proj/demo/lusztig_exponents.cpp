// Prints m_q(highest root, 0) for g2 and sp4. The exponents of the algebra
// appear as the powers of q: 1 and 5 for g2, 1 and 3 for sp4.

#include <iostream>

#include <kostant/g2/qkwmf.hpp>
#include <kostant/sp4.hpp>

int main() {
    using namespace kostant;

    // highest root of g2 is 3a1 + 2a2 = w2
    const auto g2_result = g2::qmultiplicity_closed({0, 1}, {0, 0});
    std::cout << "g2:  m_q(w2, 0) = " << to_string(g2_result.mq) << "  (case "
              << g2::to_string(g2_result.case_data.label) << ")\n";

    // highest root of sp4 is 2a1 + a2 = 2w1
    const auto c2_poly = sp4::multiplicity_c2_weyl_sum({2, 0}, {0, 0});
    std::cout << "sp4: m_q(2w1, 0) = " << to_string(c2_poly) << '\n';
}
