#include "sepvars/decomp.hpp"

#include <stdexcept>

namespace sepvars {

Split split(const Ideal& I, int s_cap) {
    if (I.is_zero_ideal()) throw std::invalid_argument("split: zero ideal");
    if (is_unit_ideal(I)) throw std::invalid_argument("split: unit ideal");
    if (I.vars().size() != 2) throw std::invalid_argument("split: bivariate ideals only");

    MPoly h = I.generators().front();
    for (size_t k = 1; k < I.generators().size(); ++k) h = gcd_bivariate(h, I.generators()[k]);
    h = h.primitive_normalized();

    if (h.is_constant()) return {MPoly::constant(I.vars(), 1), I, 1};

    std::vector<MPoly> cofactors;
    for (const auto& g : I.generators()) cofactors.push_back(exact_div(g, h));
    const Ideal J(std::move(cofactors));
    const Ideal principal(std::vector<MPoly>{h});

    for (int s = 1; s <= s_cap; s *= 2) {
        Ideal i0 = ideal_sum(I, ideal_power(J, s));
        if (ideal_equals(I, intersect(principal, i0))) {
            if (!is_unit_ideal(i0) && !is_zero_dimensional(i0))
                throw std::logic_error("split: cofactor ideal is not zero-dimensional");
            return {h, std::move(i0), s};
        }
    }
    throw std::runtime_error("split: power schedule cap exceeded");
}

}  // namespace sepvars
