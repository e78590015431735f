#include "specarb/field.hpp"

#include <sstream>

namespace specarb {

std::string FieldOps<std::complex<double>>::to_string(const std::complex<double>& a) {
    std::ostringstream os;
    os.precision(17);
    os << a.real();
    if (a.imag() != 0.0) {
        os << (a.imag() < 0 ? "" : "+") << a.imag() << "i";
    }
    return os.str();
}

}  // namespace specarb
