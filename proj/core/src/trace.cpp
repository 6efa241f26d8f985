#include "vat/trace.hpp"

#include <cmath>
#include <stdexcept>

namespace vat {

void Trace::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("Trace: dt must be positive");
    if (values.empty()) throw std::invalid_argument("Trace: values must be non-empty");
    for (const double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("Trace: values must be finite");
    }
}

} // namespace vat
