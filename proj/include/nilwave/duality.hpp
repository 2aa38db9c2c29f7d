/**
 * @file duality.hpp
 * @brief Barbasch-Vogan duality on classical orbits and Achar duality at the trivial class.
 *
 * Achar's refined duality is only evaluated when the subpartition pi(lambda) of the
 * transpose is certifiably empty. In that situation the marked dual is the
 * Barbasch-Vogan dual carrying the trivial marking; in every other situation the
 * library refuses to answer.
 */

#ifndef NILWAVE_DUALITY_HPP
#define NILWAVE_DUALITY_HPP

#include <optional>
#include <string>
#include <string_view>

#include "nilwave/partition.hpp"

namespace nilwave {

/// Orbit decorated with a marking partition standing in for a class of the canonical
/// quotient. The marking is stored reduced; the empty marking is the trivial class.
class MarkedOrbit {
public:
    explicit MarkedOrbit(TypedOrbit orbit, const Partition& marking = {});

    const TypedOrbit& orbit() const noexcept { return orbit_; }
    const Partition& marking() const noexcept { return marking_; }
    bool trivially_marked() const noexcept { return marking_.empty(); }

    std::string to_string() const;

    friend bool operator==(const MarkedOrbit&, const MarkedOrbit&) = default;

private:
    TypedOrbit orbit_;
    Partition marking_;
};

enum class PiReason {
    AllMultiplicitiesEven,
    EvenPartsEvenMultiplicity,
    OddPartsEvenMultiplicity,
};

std::string_view to_string(PiReason reason);

struct PiCertificate {
    bool empty = false;
    std::optional<PiReason> reason;
    Partition witness;  ///< the transpose that was examined
};

/// d on classical types: A transposes; B, C and D transpose, adjust by one box
/// where the total changes parity, and collapse to the dual type.
TypedOrbit bv_dual(const TypedOrbit& o);

/// Keeps one copy of each part with odd multiplicity.
Partition reduce_marking(const Partition& nu);

/// Throws Error(UnsupportedKind) for type A.
PiCertificate pi_is_empty(const TypedOrbit& o);

/// d_A(o, 1). Type A needs no certificate. Throws Error(UncertifiedDuality) when the
/// emptiness of pi(o) cannot be certified.
MarkedOrbit d_A_trivial(const TypedOrbit& o);

}  // namespace nilwave

#endif  // NILWAVE_DUALITY_HPP
