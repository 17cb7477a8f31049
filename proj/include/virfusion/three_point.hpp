#pragma once

#include "virfusion/rational.hpp"
#include "virfusion/virasoro.hpp"

#include <map>
#include <tuple>

namespace virfusion {

// Central charge and the three highest weights of <v3', Y(v1, x) v2>.
struct ThreePointDatum {
    Rational c, h1, h2, h3;
};

// coeff * x^{h3 - h1 - h2 - shift}
struct ThreePointCoefficient {
    Rational coeff;
    int shift = 0;
    friend bool operator==(const ThreePointCoefficient&, const ThreePointCoefficient&) = default;
};

enum class Slot { One = 1, Two = 2, Three = 3 };

// Ward-identity evaluator for descendant three-point matrix elements,
// normalized by <v3', Y(v1, x) v2> = x^{h3 - h1 - h2}. Slot 3 carries the
// contragredient module, where <L_n w', w> = <w', L_{-n} w>.
class ThreePointEvaluator {
public:
    explicit ThreePointEvaluator(ThreePointDatum datum);

    const ThreePointDatum& datum() const { return datum_; }

    // v must be homogeneous and live in the Verma module of the given slot.
    ThreePointCoefficient evaluate(Slot slot, const VermaVector& v);

    // <e_{dual} v3', Y(e_{w1} v1, x) e_{w2} v2> with the x-power stripped.
    Rational matrix_element(const Partition& dual, const Partition& w1, const Partition& w2);

private:
    using Key = std::tuple<Partition, Partition, Partition>;

    ThreePointDatum datum_;
    Rational mu_;  // h3 - h1 - h2
    VermaModule slot1_;
    VermaModule slot2_;
    std::map<Key, Rational> memo_;
};

ThreePointCoefficient evaluate_descendant(const ThreePointDatum& datum, Slot slot, const VermaVector& v);

struct DecouplingCoefficients {
    Rational slot1, slot2, slot3;
    bool all_zero() const { return slot1.is_zero() && slot2.is_zero() && slot3.is_zero(); }
};

// Matrix elements with the singular generator of each slot's Verma module
// inserted in that slot (slot 3 through the contragredient action).
DecouplingCoefficients decoupling_coefficients(int q, const C1qIrreducible& w1, const C1qIrreducible& w2,
                                               const C1qIrreducible& w3, SingularMemo* memo = nullptr);

bool null_decoupling(int q, const C1qIrreducible& w1, const C1qIrreducible& w2, const C1qIrreducible& w3,
                     SingularMemo* memo = nullptr);

} // namespace virfusion
