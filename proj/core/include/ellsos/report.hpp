#ifndef ELLSOS_REPORT_HPP
#define ELLSOS_REPORT_HPP

#include <string>

namespace ellsos {

/// Outcome of one identity check: the normalized residual |sum of terms|
/// divided by the largest term magnitude, so what is measured is the quality
/// of the cancellation, not the raw scale of the terms.
struct residual_report {
    std::string tag;             ///< which identity
    std::string params_snapshot; ///< short human-readable parameter record
    double residual = 0.0;       ///< |sum| / max|term|
    double largest_term = 0.0;   ///< max|term| (scale witness)
    bool pass = false;           ///< residual < tolerance
};

} // namespace ellsos

#endif
