/**
 * @file closed_forms.hpp
 * @brief Printed closed forms for lambda^t and d(lambda), family by family.
 *
 * These generators transcribe the published displays run by run and are used
 * as regression targets against the computed transpose and dual. They do not
 * reuse the support enumeration or the lift.
 */

#ifndef NILWAVE_CLOSED_FORMS_HPP
#define NILWAVE_CLOSED_FORMS_HPP

#include <string>

#include "nilwave/partition.hpp"
#include "nilwave/supports.hpp"

namespace nilwave {

struct ClosedForm {
    Partition value;
    std::string display;  ///< short human-readable form of the generator
    /// Known misprint: the display's total can disagree with the family's total.
    /// A total mismatch is flagged (not failed) only when this is set.
    bool known_inconsistent = false;
    std::string inconsistency_note;
};

ClosedForm lambda_t_closed_form(const FamilyParams& params, int n);
ClosedForm d_closed_form(const FamilyParams& params, int n);

}  // namespace nilwave

#endif  // NILWAVE_CLOSED_FORMS_HPP
