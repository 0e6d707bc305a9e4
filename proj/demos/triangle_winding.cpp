// Smallest even-m example: n=3, k=1, m=2. The three projected points form a
// triangle around the origin of V_Y, the winding number is 1, and the m=2
// membership verdict is Inside.

#include "ampli/ampli.hpp"

#include <iostream>

int main() {
    using namespace ampli;
    PositiveZ z = sample_vandermonde_z(3, 1, 2, {Rational(1), Rational(2), Rational(3)});
    GrassmannC c = sample_positive_c(1, 3, {Rational(1)});  // C = (1 1 1)
    TwistorContext ctx = make_context(std::move(z), std::move(c));

    std::cout << "coarse windows:\n";
    for (const CoarseEntry& e : coarse_boundary_report(ctx).entries) {
        std::cout << "  <Y";
        for (int i : e.window) std::cout << "," << i;
        std::cout << "> = " << rational_to_string(e.value) << "\n";
    }

    WindingResult w = winding_number(ctx, /*seed=*/0);
    std::cout << "winding magnitude = " << w.magnitude << " (formula "
              << winding_formula(1, 2) << ")\n";
    MembershipVerdict verdict = membership_m2(ctx);
    std::cout << "membership: " << verdict_name(verdict.verdict) << "\n";
    std::cout << render_svg_m2(ctx);
    return 0;
}
