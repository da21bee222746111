#include "basinlab/complex_point.hpp"

#include <limits>
#include <sstream>

namespace basinlab {

double ComplexPoint::modulus() const {
    if (is_infinite()) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(*value_);
}

std::string ComplexPoint::to_string() const {
    if (is_infinite()) {
        return "inf";
    }
    std::ostringstream os;
    os.precision(17);
    os << value_->real() << (value_->imag() < 0 ? "" : "+") << value_->imag() << "i";
    return os.str();
}

}  // namespace basinlab
