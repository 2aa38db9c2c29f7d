/**
 * @file duality.cpp
 */

#include "nilwave/duality.hpp"

#include <map>

#include "nilwave/error.hpp"

namespace nilwave {

MarkedOrbit::MarkedOrbit(TypedOrbit orbit, const Partition& marking)
    : orbit_(std::move(orbit)), marking_(reduce_marking(marking)) {}

std::string MarkedOrbit::to_string() const {
    return "(" + orbit_.to_string() + ", <" + marking_.to_string() + ">)";
}

std::string_view to_string(PiReason reason) {
    switch (reason) {
        case PiReason::AllMultiplicitiesEven: return "all-multiplicities-even";
        case PiReason::EvenPartsEvenMultiplicity: return "even-parts-even-multiplicity";
        case PiReason::OddPartsEvenMultiplicity: return "odd-parts-even-multiplicity";
    }
    return "?";
}

TypedOrbit bv_dual(const TypedOrbit& o) {
    const Partition t = transpose(o.partition());
    switch (o.kind()) {
        case ClassicalKind::A:
            return TypedOrbit(ClassicalKind::A, o.rank(), t);
        case ClassicalKind::B:
            return TypedOrbit(ClassicalKind::C, o.rank(),
                              collapse(remove_box_bottom(t), ClassicalKind::C));
        case ClassicalKind::C:
            return TypedOrbit(ClassicalKind::B, o.rank(),
                              collapse(add_box_top(t), ClassicalKind::B));
        case ClassicalKind::D:
            return TypedOrbit(ClassicalKind::D, o.rank(), collapse(t, ClassicalKind::D));
    }
    throw Error(ErrorCode::UnsupportedKind, "unknown classical kind");
}

Partition reduce_marking(const Partition& nu) {
    std::vector<int> kept;
    for (std::size_t i = 0; i < nu.length();) {
        std::size_t j = i;
        while (j < nu.length() && nu.at(j) == nu.at(i)) ++j;
        if ((j - i) % 2 == 1) kept.push_back(nu.at(i));
        i = j;
    }
    return Partition(std::move(kept));
}

PiCertificate pi_is_empty(const TypedOrbit& o) {
    if (o.kind() == ClassicalKind::A) {
        throw Error(ErrorCode::UnsupportedKind, "pi(lambda) is only defined for types B, C, D");
    }
    PiCertificate cert;
    cert.witness = transpose(o.partition());

    std::map<int, int> mult;
    for (int part : cert.witness.parts()) ++mult[part];
    auto even_mult_for = [&](auto&& select) {
        for (auto [value, count] : mult) {
            if (select(value) && count % 2 != 0) return false;
        }
        return true;
    };

    if (even_mult_for([](int) { return true; })) {
        cert.reason = PiReason::AllMultiplicitiesEven;
    } else if (even_mult_for([](int v) { return v % 2 == 0; })) {
        cert.reason = PiReason::EvenPartsEvenMultiplicity;
    } else if (even_mult_for([](int v) { return v % 2 == 1; })) {
        cert.reason = PiReason::OddPartsEvenMultiplicity;
    }
    cert.empty = cert.reason.has_value();
    return cert;
}

MarkedOrbit d_A_trivial(const TypedOrbit& o) {
    if (o.kind() != ClassicalKind::A && !pi_is_empty(o).empty) {
        throw Error(ErrorCode::UncertifiedDuality,
                    "no certificate that pi" + o.partition().to_string() +
                        " is empty; d_A at the trivial class is not evaluated");
    }
    return MarkedOrbit(bv_dual(o));
}

}  // namespace nilwave
