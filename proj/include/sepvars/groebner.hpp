#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "sepvars/mpoly.hpp"

namespace sepvars {

// Monomial orders for the Buchberger engine. Lex compares variables by ring
// position (earlier variables rank higher). Block is an elimination order:
// degrevlex on the variables in front_mask, ties broken by degrevlex on the
// rest — monomials touching the front block rank above all others.
struct TermOrder {
    enum class Kind { Degrevlex, Lex, Block };
    Kind kind = Kind::Degrevlex;
    unsigned front_mask = 0;

    static TermOrder degrevlex() { return {Kind::Degrevlex, 0}; }
    static TermOrder lex() { return {Kind::Lex, 0}; }
    static TermOrder block(unsigned front_mask) { return {Kind::Block, front_mask}; }

    bool less(const Exponents& a, const Exponents& b) const;
    auto operator<=>(const TermOrder&) const = default;
};

// Generator list plus lazily computed reduced Groebner bases, one per order.
// The basis cache is a compute-once, thread-safe memo; basis computation
// itself is single-threaded. At most four ring variables are supported.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(std::vector<MPoly> gens);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<MPoly>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // reduced (monic, auto-reduced) basis, descending leading monomials
    std::vector<MPoly> basis(const TermOrder& ord) const;

    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);
    Ideal(Ideal&& o);
    Ideal& operator=(Ideal&& o);

private:
    std::vector<std::string> vars_;
    std::vector<MPoly> gens_;  // nonzero generators only
    mutable std::mutex mu_;
    mutable std::map<TermOrder, std::vector<MPoly>> cache_;
};

// unique remainder modulo the reduced basis; Q-linear and idempotent in f
MPoly normal_form(const MPoly& f, const Ideal& I, const TermOrder& ord = TermOrder::degrevlex());

bool contains(const Ideal& I, const MPoly& f);
bool is_unit_ideal(const Ideal& I);
bool ideal_equals(const Ideal& I, const Ideal& J);

// monic generator of I ∩ K[keep_var]; the zero polynomial signals a trivial
// intersection
UniPoly eliminate(const Ideal& I, int keep_var);

// I ∩ J via an auxiliary variable t: eliminate t from t*I + (1-t)*J
Ideal intersect(const Ideal& I, const Ideal& J);

// true iff every ring variable has a pure-power leading monomial in the
// reduced degrevlex basis; <1> counts as zero-dimensional; throws on <0>
bool is_zero_dimensional(const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int s);

}  // namespace sepvars
